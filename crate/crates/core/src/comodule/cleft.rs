//! Search for a convolution-invertible colinear map `γ: H → A`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::ComoduleAlgebra;
use crate::error::Result;
use crate::hopf::{conv_inverse, is_grouplike, LinMap};
use crate::scalars::{Matrix, SVec, Scalar};

/// Affine spaces with at most this many points are enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum CleavingOutcome {
    Found { gamma: LinMap, inverse: LinMap },
    /// Exhaustive search finished without a convolution-invertible map.
    NotFound,
    /// Sampling budget spent without a certificate.
    Inconclusive { tried: usize },
}

impl CleavingOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, CleavingOutcome::Found { .. })
    }
}

/// Basis of the colinear maps `H → A`, each flattened as `γ(e_i)` blocks.
pub fn colinear_maps(ca: &ComoduleAlgebra) -> Vec<LinMap> {
    let h = ca.hopf();
    let (dh, da) = (h.dim(), ca.dim());
    let field = ca.field();
    // unknown γ_{i,k} at column i * da + k; rows indexed by (i, a⊗h coordinate)
    let nrows = dh * da * dh;
    let mut cols = vec![SVec::new(); dh * da];
    for i in 0..dh {
        for k in 0..da {
            // δ(γ(e_i)) contribution
            for (jh, c) in ca.coaction_basis(k).iter() {
                cols[i * da + k].add_term(i * da * dh + jh, c.clone());
            }
        }
        for (j, l, c) in h.coalgebra().terms(i) {
            for k in 0..da {
                cols[j * da + k].add_term(i * da * dh + k * dh + l, c.neg());
            }
        }
    }
    let m = Matrix::from_columns(field, nrows, &cols);
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            let images = (0..dh).map(|i| SVec::from_dense(&v[i * da..(i + 1) * da])).collect();
            LinMap { src: dh, tgt: da, images }
        })
        .collect()
}

fn combine(basis: &[LinMap], coeffs: &[Scalar], src: usize, tgt: usize) -> LinMap {
    let mut images = vec![SVec::new(); src];
    for (b, c) in basis.iter().zip(coeffs) {
        for (img, bi) in images.iter_mut().zip(&b.images) {
            img.add_scaled(bi, c);
        }
    }
    LinMap { src, tgt, images }
}

fn try_candidate(ca: &ComoduleAlgebra, gamma: LinMap) -> Option<CleavingOutcome> {
    if gamma.images.iter().all(SVec::is_zero) {
        return None;
    }
    conv_inverse(ca.hopf().coalgebra(), ca.algebra(), &gamma)
        .ok()
        .map(|inverse| CleavingOutcome::Found { gamma, inverse })
}

/// Whether `x` is invertible in `A` (left multiplication has full rank).
pub fn is_unit(ca: &ComoduleAlgebra, x: &SVec<Scalar>) -> bool {
    let d = ca.dim();
    let cols: Vec<SVec<Scalar>> = (0..d).map(|i| ca.mul(x, &ca.algebra().basis(i))).collect();
    Matrix::from_columns(ca.field(), d, &cols).rank() == d
}

/// For `H = k[G]`: pick a unit in every component `A_g`.
fn component_search(ca: &ComoduleAlgebra) -> Option<Option<CleavingOutcome>> {
    let h = ca.hopf();
    if !(0..h.dim()).all(|i| is_grouplike(h, &h.basis(i))) {
        return None;
    }
    let field = ca.field();
    let mut images = Vec::new();
    for g in 0..h.dim() {
        let comp = ca.component(&h.basis(g));
        let mut found = comp.iter().find(|x| is_unit(ca, x)).cloned();
        let mut exhausted = false;
        if found.is_none() {
            if let (Some(elems), true) = (field.elements(), comp.len() <= 4) {
                exhausted = true;
                let p = elems.len() as u64;
                found = (1..p.pow(comp.len() as u32)).find_map(|mut n| {
                    let mut v = SVec::new();
                    for b in &comp {
                        v.add_scaled(b, &elems[(n % p) as usize]);
                        n /= p;
                    }
                    is_unit(ca, &v).then_some(v)
                });
            }
        }
        match found {
            Some(v) => images.push(v),
            // a component without units rules out cleftness only if it was
            // searched exhaustively
            None => return exhausted.then_some(Some(CleavingOutcome::NotFound)),
        }
    }
    let gamma = LinMap { src: h.dim(), tgt: ca.dim(), images };
    Some(try_candidate(ca, gamma))
}

/// Searches the colinear maps for a convolution-invertible one. Exhaustive
/// over finite fields when the space has at most [`EXHAUSTIVE_LIMIT`] points,
/// otherwise `budget` seeded random samples.
pub fn find_cleaving_map(ca: &ComoduleAlgebra, budget: usize, seed: u64) -> Result<CleavingOutcome> {
    if let Some(Some(out)) = component_search(ca) {
        return Ok(out);
    }
    let basis = colinear_maps(ca);
    let (src, tgt) = (ca.hopf().dim(), ca.dim());
    let field = ca.field();
    if basis.is_empty() {
        return Ok(CleavingOutcome::NotFound);
    }
    // single basis maps first: cheap and often enough
    for b in &basis {
        if let Some(out) = try_candidate(ca, b.clone()) {
            return Ok(out);
        }
    }
    let m = basis.len();
    if let Some(elems) = field.elements() {
        let p = elems.len() as u64;
        let points = (p as f64).powi(m as i32);
        if points <= EXHAUSTIVE_LIMIT as f64 {
            let total = p.pow(m as u32) as usize;
            let hit = crate::par::first_some(total, |n| {
                let mut n = n as u64;
                let coeffs: Vec<Scalar> = (0..m)
                    .map(|_| {
                        let c = elems[(n % p) as usize].clone();
                        n /= p;
                        c
                    })
                    .collect();
                try_candidate(ca, combine(&basis, &coeffs, src, tgt))
            });
            return Ok(hit.unwrap_or(CleavingOutcome::NotFound));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elems = field.elements();
    for _ in 0..budget {
        let coeffs: Vec<Scalar> = (0..m)
            .map(|_| match &elems {
                Some(e) => e[rng.gen_range(0..e.len())].clone(),
                None => field.from_i64(rng.gen_range(-3..=3)),
            })
            .collect();
        if let Some(out) = try_candidate(ca, combine(&basis, &coeffs, src, tgt)) {
            return Ok(out);
        }
    }
    Ok(CleavingOutcome::Inconclusive { tried: budget })
}
