//! Group-like elements.

use super::hopf_algebra::HopfAlgebra;
use super::structure::Vector;
use crate::error::{Error, Result};
use crate::scalars::SVec;

/// Largest search space the exhaustive mode will enumerate.
pub const EXHAUSTIVE_DIM_BOUND: usize = 12;
pub const EXHAUSTIVE_POINT_BOUND: u64 = 2_000_000;

/// Group-likes found by a scan, and whether they are closed under products.
#[derive(Clone, Debug, PartialEq)]
pub struct Grouplikes {
    pub elements: Vec<Vector>,
    pub closed: bool,
}

pub fn is_grouplike(h: &HopfAlgebra, v: &Vector) -> bool {
    h.counit(v).is_one() && h.comult(v) == v.tensor(v, h.dim())
}

/// Whether `v` commutes with every basis element.
pub fn is_central(h: &HopfAlgebra, v: &Vector) -> bool {
    (0..h.dim()).all(|i| {
        let e = h.basis(i);
        h.mul(v, &e) == h.mul(&e, v)
    })
}

/// Group-likes among `candidates` (or the registered ones if `None`).
pub fn grouplikes(h: &HopfAlgebra, candidates: Option<&[Vector]>) -> Grouplikes {
    let pool = candidates.unwrap_or_else(|| h.registered_grouplikes());
    let mut elements: Vec<Vector> = Vec::new();
    for v in pool {
        if is_grouplike(h, v) && !elements.contains(v) {
            elements.push(v.clone());
        }
    }
    let closed = elements.iter().all(|a| elements.iter().all(|b| elements.contains(&h.mul(a, b))));
    Grouplikes { elements, closed }
}

/// All group-likes of a Hopf algebra over a small prime field, by enumeration
/// of every vector with `ε(v) = 1`.
pub fn grouplikes_exhaustive(h: &HopfAlgebra) -> Result<Grouplikes> {
    let d = h.dim();
    let elems = h
        .field()
        .elements()
        .ok_or_else(|| Error::SearchSpaceTooLarge("exhaustive scan needs a finite field".into()))?;
    let p = elems.len() as u64;
    let points = (p as f64).powi(d as i32);
    if d > EXHAUSTIVE_DIM_BOUND || points > EXHAUSTIVE_POINT_BOUND as f64 {
        return Err(Error::SearchSpaceTooLarge(format!("{p}^{d} vectors")));
    }
    let total = p.pow(d as u32);
    let found: Vec<Option<Vector>> = crate::par::map_range(total as usize, |n| {
        let mut n = n as u64;
        let mut v = SVec::new();
        for i in 0..d {
            v.add_term(i, elems[(n % p) as usize].clone());
            n /= p;
        }
        is_grouplike(h, &v).then_some(v)
    });
    let elements: Vec<Vector> = found.into_iter().flatten().collect();
    let closed = elements.iter().all(|a| elements.iter().all(|b| elements.contains(&h.mul(a, b))));
    Ok(Grouplikes { elements, closed })
}

/// The subgroup generated by finitely many group-likes, in breadth-first order
/// starting from 1. Errors if the generated set exceeds `limit` elements.
pub fn generate_group(h: &HopfAlgebra, gens: &[Vector], limit: usize) -> Result<Vec<Vector>> {
    let mut group = vec![h.one()];
    let mut frontier = vec![h.one()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = h.mul(&x, g);
            if !group.contains(&y) {
                if group.len() == limit {
                    return Err(Error::BadParams(format!("generated group exceeds {limit} elements")));
                }
                group.push(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(group)
}
