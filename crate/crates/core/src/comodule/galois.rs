//! The canonical map `A ⊗_B A → A ⊗ H` and the Galois verdict.

use serde::Serialize;

use super::algebra::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{is_grouplike, LinMap};
use crate::par;
use crate::report::Report;
use crate::scalars::{Matrix, SVec, Scalar};

/// `A ⊗_B A` as the quotient of `A ⊗ A` by the balancing relators.
#[derive(Clone, Debug)]
pub struct BalancedTensor {
    pub ambient_dim: usize,
    pub relators: Vec<SVec<Scalar>>,
    pub relator_rank: usize,
}

impl BalancedTensor {
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.relator_rank
    }
}

pub fn balanced_tensor(ca: &ComoduleAlgebra) -> BalancedTensor {
    let d = ca.dim();
    let alg = ca.algebra();
    let mut relators = Vec::new();
    for b in 0..ca.base_dim() {
        let ib = ca.inclusion().image(b);
        for x in 0..d {
            let xb = alg.mul(&alg.basis(x), ib);
            for y in 0..d {
                let by = alg.mul(ib, &alg.basis(y));
                let r = xb.tensor(&alg.basis(y), d).difference(&alg.basis(x).tensor(&by, d));
                if !r.is_zero() {
                    relators.push(r);
                }
            }
        }
    }
    let relator_rank =
        if relators.is_empty() { 0 } else { Matrix::from_columns(ca.field(), d * d, &relators).rank() };
    BalancedTensor { ambient_dim: d * d, relators, relator_rank }
}

/// `x ⊗ y ↦ x y₀ ⊗ y₁` on `A ⊗ A`.
pub fn canonical_map_ambient(ca: &ComoduleAlgebra) -> LinMap {
    let (d, dh) = (ca.dim(), ca.hopf().dim());
    let alg = ca.algebra();
    let images = par::map_range(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        let mut out = SVec::new();
        for (kh, c) in ca.coaction_basis(y).iter() {
            let (k, h) = (kh / dh, kh % dh);
            for (m, u) in alg.mul_basis(x, k).iter() {
                out.add_term(m * dh + h, c.mul(u));
            }
        }
        out
    });
    LinMap { src: d * d, tgt: d * dh, images }
}

/// The canonical map together with the balanced tensor it factors through.
/// Errors if some balancing relator has nonzero image.
pub fn canonical_map(ca: &ComoduleAlgebra) -> Result<(BalancedTensor, LinMap)> {
    let bt = balanced_tensor(ca);
    let can = canonical_map_ambient(ca);
    if let Some(r) = bt.relators.iter().find(|r| !can.apply(r).is_zero()) {
        return Err(Error::IllDefined(format!("relator with {} terms has nonzero image", r.len())));
    }
    Ok((bt, can))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisVerdict {
    pub coinvariants_dim: usize,
    pub coinvariants_equal_base: bool,
    pub canonical_rank: usize,
    pub balanced_dim: usize,
    pub target_dim: usize,
    pub canonical_bijective: bool,
    pub flatness_surrogate: String,
}

impl GaloisVerdict {
    pub fn is_galois(&self) -> bool {
        self.coinvariants_equal_base && self.canonical_bijective
    }
}

pub fn is_galois(ca: &ComoduleAlgebra) -> Result<GaloisVerdict> {
    let field = ca.field();
    let coinv = ca.coinvariants();
    let inc = ca.inclusion();
    let base_rank = inc.rank(field);
    let mut cols = coinv.clone();
    cols.extend(inc.images.iter().cloned());
    let joint = Matrix::from_columns(field, ca.dim(), &cols).rank();
    let coinvariants_equal_base = joint == coinv.len() && base_rank == coinv.len();
    let (bt, can) = canonical_map(ca)?;
    let canonical_rank = can.rank(field);
    let target_dim = ca.dim() * ca.hopf().dim();
    let balanced_dim = bt.dim();
    let flatness_surrogate = if base_rank == 1 {
        "base is the ground field".to_string()
    } else {
        "not certified".to_string()
    };
    Ok(GaloisVerdict {
        coinvariants_dim: coinv.len(),
        coinvariants_equal_base,
        canonical_rank,
        balanced_dim,
        target_dim,
        canonical_bijective: canonical_rank == target_dim && canonical_rank == balanced_dim,
        flatness_surrogate,
    })
}

/// For `H = k[G]` with basis the group: decomposition into the components
/// `A_g` and `A_g A_h = A_{gh}` for all `g, h`.
pub fn strongly_graded_check(ca: &ComoduleAlgebra) -> Report {
    let mut rep = Report::new();
    let h = ca.hopf();
    let field = ca.field();
    let dh = h.dim();
    if let Some(i) = (0..dh).find(|&i| !is_grouplike(h, &h.basis(i))) {
        rep.fail("group algebra", format!("basis element {} is not group-like", h.labels()[i]));
        return rep;
    }
    let comps: Vec<Vec<SVec<Scalar>>> = (0..dh).map(|g| ca.component(&h.basis(g))).collect();
    let total: usize = comps.iter().map(Vec::len).sum();
    let all: Vec<SVec<Scalar>> = comps.iter().flatten().cloned().collect();
    let spans = Matrix::from_columns(field, ca.dim(), &all).rank() == ca.dim();
    rep.record(
        "direct sum of components",
        (total != ca.dim() || !spans).then(|| format!("components have total dimension {total}, A has {}", ca.dim())),
    );
    let prod_index = |g: usize, k: usize| h.algebra().mul_basis(g, k).first().map(|(i, _)| i).unwrap();
    let mut failure = None;
    'outer: for g in 0..dh {
        for k in 0..dh {
            let gk = prod_index(g, k);
            let (a, b, c) = (&comps[g], &comps[k], &comps[gk]);
            let images: Vec<SVec<Scalar>> =
                a.iter().flat_map(|x| b.iter().map(move |y| ca.mul(x, y))).collect();
            let rank = if images.is_empty() { 0 } else { Matrix::from_columns(field, ca.dim(), &images).rank() };
            if rank != c.len() {
                failure = Some(format!(
                    "A_{} A_{} ⊂ A_{}: dims {}, {} → {} but span has rank {rank}",
                    h.labels()[g],
                    h.labels()[k],
                    h.labels()[gk],
                    a.len(),
                    b.len(),
                    c.len()
                ));
                break 'outer;
            }
        }
    }
    rep.record("A_g A_h = A_gh", failure);
    rep
}
