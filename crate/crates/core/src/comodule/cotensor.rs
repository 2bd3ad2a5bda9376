//! Cotensor products `A □_H K` along a Hopf map `φ: K → H`.

use std::sync::Arc;

use super::algebra::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{Algebra, HopfAlgebra, LinMap};
use crate::scalars::{Field, Matrix, SVec, Scalar};

/// A subspace of a based space with the echelon basis of a kernel: every
/// basis vector has a 1 at its own free column and 0 at the others, so
/// coordinates are read off at the free columns.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<SVec<Scalar>>,
    pub free_columns: Vec<usize>,
}

impl Subspace {
    /// The kernel of `m`.
    pub fn kernel(m: &Matrix) -> Self {
        let ech = m.echelon();
        let free_columns: Vec<usize> = (0..m.cols()).filter(|c| !ech.pivots.contains(c)).collect();
        let basis = m.kernel_basis().iter().map(|v| SVec::from_dense(v)).collect();
        Self { ambient: m.cols(), basis, free_columns }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v`, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &SVec<Scalar>) -> Option<SVec<Scalar>> {
        let coords: SVec<Scalar> =
            self.free_columns.iter().enumerate().filter_map(|(q, &c)| v.get(c).map(|x| (q, x.clone()))).collect();
        let mut back = SVec::new();
        for (q, c) in coords.iter() {
            back.add_scaled(&self.basis[q], c);
        }
        (back == *v).then_some(coords)
    }

    pub fn embedding(&self) -> LinMap {
        LinMap { src: self.dim(), tgt: self.ambient, images: self.basis.clone() }
    }
}

/// `A □_H K` with its induced `K`-comodule algebra structure and the
/// embedding into `A ⊗ K`.
#[derive(Clone, Debug)]
pub struct Cotensor {
    pub algebra: ComoduleAlgebra,
    pub subspace: Subspace,
}

fn not_closed(what: &str) -> Error {
    Error::Internal(format!("cotensor subspace not closed under {what}"))
}

/// Basis labels for vectors of `A ⊗ K`.
fn label(v: &SVec<Scalar>, la: &[String], lk: &[String]) -> String {
    let n = lk.len();
    let terms: Vec<String> = v
        .iter()
        .map(|(i, c)| {
            let t = format!("{}⊗{}", la[i / n], lk[i % n]);
            if c.is_one() {
                t
            } else {
                format!("{c}·{t}")
            }
        })
        .collect();
    terms.join("+")
}

pub fn cotensor(ca: &ComoduleAlgebra, k: &Arc<HopfAlgebra>, phi: &LinMap) -> Result<Cotensor> {
    let h = ca.hopf();
    let rep = crate::hopf::verify_hopf_map(phi, k, h);
    if let Some(c) = rep.first_failure() {
        return Err(Error::NotAHopfMap(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let field: &Field = ca.field();
    let (da, dh, dk) = (ca.dim(), h.dim(), k.dim());
    // T(a ⊗ x) = δ(a) ⊗ x - a ⊗ (φ ⊗ id)Δ(x), into A ⊗ H ⊗ K
    let mut cols = Vec::with_capacity(da * dk);
    for a in 0..da {
        for x in 0..dk {
            let mut v = SVec::new();
            for (jh, c) in ca.coaction_basis(a).iter() {
                v.add_term(jh * dk + x, c.clone());
            }
            for (yz, c) in k.coalgebra().comult_basis(x).iter() {
                let (y, z) = (yz / dk, yz % dk);
                for (hh, u) in phi.image(y).iter() {
                    v.add_term((a * dh + hh) * dk + z, c.mul(u).neg());
                }
            }
            cols.push(v);
        }
    }
    let sub = Subspace::kernel(&Matrix::from_columns(field, da * dh * dk, &cols));
    let kalg = k.algebra();
    let n = sub.dim();
    let mut mult = Vec::with_capacity(n * n);
    for x in &sub.basis {
        for y in &sub.basis {
            let p = ca.algebra().tensor_mul(kalg, x, y);
            mult.push(sub.coordinates(&p).ok_or_else(|| not_closed("multiplication"))?);
        }
    }
    let one = ca.algebra().unit().tensor(kalg.unit(), dk);
    let unit = sub.coordinates(&one).ok_or_else(|| not_closed("unit"))?;
    let labels: Vec<String> = sub.basis.iter().map(|v| label(v, ca.labels(), k.labels())).collect();
    let algebra = Algebra::new(field, labels, mult, unit)?;
    // (id ⊗ Δ_K) restricted, sliced by the last tensor leg
    let mut coaction = Vec::with_capacity(n);
    for b in &sub.basis {
        let mut slices: Vec<SVec<Scalar>> = vec![SVec::new(); dk];
        for (ax, c) in b.iter() {
            let (a, x) = (ax / dk, ax % dk);
            for (yz, u) in k.coalgebra().comult_basis(x).iter() {
                let (y, z) = (yz / dk, yz % dk);
                slices[z].add_term(a * dk + y, c.mul(u));
            }
        }
        let mut v = SVec::new();
        for (z, s) in slices.iter().enumerate() {
            let coords = sub.coordinates(s).ok_or_else(|| not_closed("the coaction"))?;
            for (q, c) in coords.iter() {
                v.add_term(q * dk + z, c.clone());
            }
        }
        coaction.push(v);
    }
    let mut inc = Vec::new();
    for b in 0..ca.base_dim() {
        let v = ca.inclusion().image(b).tensor(kalg.unit(), dk);
        inc.push(sub.coordinates(&v).ok_or_else(|| not_closed("the base"))?);
    }
    let inclusion = LinMap::new(ca.base_dim(), n, inc)?;
    let name = format!("{}□{}", ca.name(), k.name());
    let algebra = ComoduleAlgebra::new(name, algebra, k.clone(), coaction, inclusion)?;
    Ok(Cotensor { algebra, subspace: sub })
}
