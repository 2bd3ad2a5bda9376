//! Tensor products, Hopf maps and quotients by central group-likes.

use super::convolution::LinMap;
use super::grouplike::{generate_group, is_central, is_grouplike};
use super::hopf_algebra::HopfAlgebra;
use super::structure::{show, Algebra, Coalgebra, Vector};
use crate::error::{Error, Result};
use crate::par;
use crate::report::Report;
use crate::scalars::{Matrix, SVec};

/// `U ⊗ A` with componentwise structure.
pub fn tensor_hopf(u: &HopfAlgebra, a: &HopfAlgebra) -> Result<HopfAlgebra> {
    if u.field() != a.field() {
        return Err(Error::FieldMismatch(format!("{} and {}", u.name(), a.name())));
    }
    let alg = u.algebra().tensor(a.algebra());
    let co = u.coalgebra().tensor(a.coalgebra());
    let s = u.antipode().tensor(a.antipode());
    let n = a.dim();
    let mut gl = Vec::new();
    for x in u.registered_grouplikes() {
        for y in a.registered_grouplikes() {
            gl.push(x.tensor(y, n));
        }
    }
    let mut h = HopfAlgebra::new(format!("{}⊗{}", u.name(), a.name()), alg, co, s)?.with_grouplikes(gl);
    if let (Some(du), Some(da)) = (u.grading(), a.grading()) {
        let deg = du.iter().flat_map(|x| da.iter().map(move |y| x + y)).collect();
        h = h.with_grading(deg)?;
    }
    Ok(h)
}

/// Checks that `phi: K → H` is a morphism of Hopf algebras.
pub fn verify_hopf_map(phi: &LinMap, k: &HopfAlgebra, h: &HopfAlgebra) -> Report {
    let mut rep = Report::new();
    if phi.src != k.dim() || phi.tgt != h.dim() {
        rep.fail("shape", format!("map {}→{} between dims {} and {}", phi.src, phi.tgt, k.dim(), h.dim()));
        return rep;
    }
    let d = k.dim();
    let kl = k.labels();
    let mult = par::first_some(d, |i| {
        (0..d).find_map(|j| {
            let lhs = phi.apply(k.algebra().mul_basis(i, j));
            let rhs = h.mul(phi.image(i), phi.image(j));
            (lhs != rhs).then(|| format!("φ({}·{}) ≠ φ({})φ({})", kl[i], kl[j], kl[i], kl[j]))
        })
    });
    rep.record("multiplicative", mult);
    let unit = (phi.apply(&k.one()) != h.one()).then(|| "φ(1) ≠ 1".to_string());
    rep.record("unital", unit);
    let pp = phi.tensor(phi);
    let comult = (0..d).find_map(|i| {
        let lhs = h.comult(phi.image(i));
        let rhs = pp.apply(k.coalgebra().comult_basis(i));
        (lhs != rhs).then(|| format!("Δφ({0}) ≠ (φ⊗φ)Δ({0})", kl[i]))
    });
    rep.record("comultiplicative", comult);
    let counit = (0..d)
        .find(|&i| h.counit(phi.image(i)) != k.coalgebra().counit_basis(i))
        .map(|i| format!("εφ({0}) ≠ ε({0})", kl[i]));
    rep.record("counital", counit);
    rep
}

/// Quotient of a Hopf algebra by the ideal generated by `g - 1` for `g` in a
/// central group of group-likes.
#[derive(Clone, Debug)]
pub struct CentralQuotient {
    pub hopf: HopfAlgebra,
    pub projection: LinMap,
    /// Indices of the basis vectors of `H` kept as the quotient basis.
    pub lifts: Vec<usize>,
    pub group: Vec<Vector>,
    pub relator_rank: usize,
}

impl CentralQuotient {
    /// Whether `dim(H) = |G| · dim(H/(k[G])⁺H)`.
    pub fn dimension_matches_group_order(&self, parent_dim: usize) -> bool {
        parent_dim == self.group.len() * self.hopf.dim()
    }
}

pub fn quotient_by_central_grouplikes(h: &HopfAlgebra, gens: &[Vector]) -> Result<CentralQuotient> {
    for g in gens {
        if !is_grouplike(h, g) {
            return Err(Error::NotGrouplike(h.show(g)));
        }
        if !is_central(h, g) {
            return Err(Error::NotCentral(h.show(g)));
        }
    }
    let d = h.dim();
    let group = generate_group(h, gens, d.max(1) * d.max(1))?;
    let field = h.field();
    // relators (g - 1)e_j, columns reversed so that pivots land on the
    // highest indices and the quotient keeps the lowest-index basis vectors
    let mut rows = Vec::new();
    for g in group.iter().skip(1) {
        let gm1 = g.difference(&h.one());
        for j in 0..d {
            let r = h.mul(&gm1, &h.basis(j));
            let mut dense = vec![field.zero(); d];
            for (k, c) in r.iter() {
                dense[d - 1 - k] = c.clone();
            }
            rows.push(dense);
        }
    }
    let (pivots_orig, rref) = if rows.is_empty() {
        (Vec::new(), None)
    } else {
        let ech = Matrix::from_rows(field, rows)?.echelon();
        let piv: Vec<usize> = ech.pivots.iter().map(|&c| d - 1 - c).collect();
        (piv, Some(ech))
    };
    let lifts: Vec<usize> = (0..d).filter(|i| !pivots_orig.contains(i)).collect();
    let pos = |i: usize| lifts.iter().position(|&x| x == i);
    let n = lifts.len();
    let mut images = vec![SVec::new(); d];
    for (q, &i) in lifts.iter().enumerate() {
        images[i] = SVec::basis(q, field.one());
    }
    if let Some(ech) = &rref {
        for (r, &p) in pivots_orig.iter().enumerate() {
            // e_p + Σ_free c_j e_j ∈ relators
            let mut v = SVec::new();
            for &j in &lifts {
                let c = &ech.rref[(r, d - 1 - j)];
                if !c.is_zero() {
                    v.add_term(pos(j).unwrap(), c.neg());
                }
            }
            images[p] = v;
        }
    }
    let proj = LinMap::new(d, n, images)?;
    let labels: Vec<String> = lifts.iter().map(|&i| h.labels()[i].clone()).collect();
    let alg = Algebra::from_fn(field, labels.clone(), proj.apply(&h.one()), |a, b| {
        proj.apply(h.algebra().mul_basis(lifts[a], lifts[b]))
    })?;
    let pp = proj.tensor(&proj);
    let comult = lifts.iter().map(|&i| pp.apply(h.coalgebra().comult_basis(i))).collect();
    let counit = SVec::from_terms(lifts.iter().enumerate().map(|(q, &i)| (q, h.coalgebra().counit_basis(i))));
    let co = Coalgebra::new(field, labels, comult, counit)?;
    let s = LinMap::new(n, n, lifts.iter().map(|&i| proj.apply(h.antipode().image(i))).collect())?;
    let mut gl: Vec<Vector> = Vec::new();
    for g in h.registered_grouplikes() {
        let pg = proj.apply(g);
        if !gl.contains(&pg) {
            gl.push(pg);
        }
    }
    let mut q = HopfAlgebra::new(format!("{}/(kG)⁺", h.name()), alg, co, s)?.with_grouplikes(gl);
    if let Some(deg) = h.grading() {
        q = q.with_grading(lifts.iter().map(|&i| deg[i]).collect())?;
    }
    Ok(CentralQuotient { hopf: q, projection: proj, lifts, group, relator_rank: pivots_orig.len() })
}

/// Renders the group of a quotient for reports.
pub fn show_group(h: &HopfAlgebra, group: &[Vector]) -> String {
    group.iter().map(|g| show(g, h.labels())).collect::<Vec<_>>().join(", ")
}
