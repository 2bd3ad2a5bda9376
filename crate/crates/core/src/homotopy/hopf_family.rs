//! Hopf homotopies `Φ = Σ Φ_n tⁿ : K → H[t]`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, LinMap};
use crate::par;
use crate::report::Report;
use crate::scalars::{SVec, Scalar, UniPoly};

/// A finite family `Φ₀, …, Φ_m : K → H` together with the maps `φ`, `ψ` it
/// is claimed to connect.
#[derive(Clone, Debug)]
pub struct HopfHomotopyFamily {
    pub source: Arc<HopfAlgebra>,
    pub target: Arc<HopfAlgebra>,
    pub maps: Vec<LinMap>,
    pub phi: LinMap,
    pub psi: LinMap,
}

impl HopfHomotopyFamily {
    /// `Φ(e_i) = Σ_n Φ_n(e_i) tⁿ`.
    pub fn generating_map(&self) -> LinMap<UniPoly> {
        let images = (0..self.source.dim())
            .map(|i| {
                let mut v: SVec<UniPoly> = SVec::new();
                for (n, f) in self.maps.iter().enumerate() {
                    for (k, c) in f.image(i).iter() {
                        v.add_term(k, UniPoly::monomial(c.clone(), n));
                    }
                }
                v
            })
            .collect();
        LinMap { src: self.source.dim(), tgt: self.target.dim(), images }
    }

    /// `ΣΦ_n`.
    pub fn sum(&self) -> LinMap {
        let images = (0..self.source.dim())
            .map(|i| self.maps.iter().fold(SVec::new(), |acc, f| acc.sum(f.image(i))))
            .collect();
        LinMap { src: self.source.dim(), tgt: self.target.dim(), images }
    }
}

/// Lowest power of `t` where two polynomial vectors differ.
fn first_diff(a: &SVec<UniPoly>, b: &SVec<UniPoly>) -> Option<usize> {
    let diff = a.difference(b);
    diff.iter().filter_map(|(_, p)| p.coeffs().iter().position(|c| !c.is_zero())).min()
}

/// Conditions (a) to (f) on basis elements and pairs. (a) to (d) are checked
/// as identities of the generating map `Φ` over `k[t]`; a witness names the
/// lowest `n` at which they fail.
pub fn verify_hopf_homotopy(fam: &HopfHomotopyFamily) -> Report {
    let mut rep = Report::new();
    let (k, h) = (&fam.source, &fam.target);
    let (dk, dh) = (k.dim(), h.dim());
    if fam.maps.iter().chain([&fam.phi, &fam.psi]).any(|f| f.src != dk || f.tgt != dh) {
        rep.fail("shape", format!("maps must go {dk} → {dh}"));
        return rep;
    }
    let phi = fam.generating_map();
    let lift = |v: &SVec<Scalar>| v.map_coeffs(|c| UniPoly::constant(c.clone()));
    let halg = h.algebra().map_coeffs(|c| UniPoly::constant(c.clone()));
    let hco = h.coalgebra().map_coeffs(|c| UniPoly::constant(c.clone()));
    let (kl, hl) = (k.labels(), h.labels());

    let a = par::first_some(dk, |x| {
        (0..dk).find_map(|y| {
            let lhs = phi.apply(&lift(k.algebra().mul_basis(x, y)));
            let rhs = halg.mul(phi.image(x), phi.image(y));
            first_diff(&lhs, &rhs).map(|n| format!("n = {n} at ({}, {})", kl[x], kl[y]))
        })
    });
    rep.record("(a) Φ_n(xy) = Σ Φ_i(x)Φ_j(y)", a);

    let pp = phi.tensor(&phi);
    let b = par::first_some(dk, |x| {
        let lhs = hco.comult(phi.image(x));
        let rhs = pp.apply(&lift(k.coalgebra().comult_basis(x)));
        first_diff(&lhs, &rhs).map(|n| format!("n = {n} at {}", kl[x]))
    });
    rep.record("(b) ΔΦ_n(x) = Σ Φ_i(x₁)⊗Φ_j(x₂)", b);

    let one = lift(k.algebra().unit());
    let c = first_diff(&phi.apply(&one), &lift(h.algebra().unit())).map(|n| format!("n = {n}"));
    rep.record("(c) Φ_n(1) = δ_n0", c);

    let d = (0..dk).find_map(|x| {
        let e = hco.counit_of(phi.image(x));
        let want = UniPoly::constant(k.coalgebra().counit_basis(x));
        (e != want).then(|| format!("ε(Φ({})) = {}", kl[x], e.to_text('t')))
    });
    rep.record("(d) εΦ_n = δ_n0 ε", d);

    let e = fam
        .maps
        .first()
        .map_or(Some("empty family".to_string()), |f0| {
            (0..dk).find(|&x| f0.image(x) != fam.phi.image(x)).map(|x| format!("differs on {}", kl[x]))
        });
    rep.record("(e) Φ₀ = φ", e);

    let sum = fam.sum();
    let f = (0..dk).find(|&x| sum.image(x) != fam.psi.image(x)).map(|x| {
        format!("ΣΦ_n({}) = {}", kl[x], crate::hopf::show(sum.image(x), hl))
    });
    rep.record("(f) ΣΦ_n = ψ", f);
    rep
}

/// `Φ_n` = projection onto `H(n)`, connecting `ιπ` to the identity.
pub fn graded_hopf_homotopy(h: &Arc<HopfAlgebra>) -> Result<HopfHomotopyFamily> {
    let top = h.max_degree().ok_or_else(|| Error::NotGraded(format!("{} has no grading", h.name())))?;
    let g = h.verify_grading();
    if let Some(c) = g.first_failure() {
        return Err(Error::NotGraded(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let maps: Vec<LinMap> = (0..=top).map(|n| h.degree_projection(n).unwrap()).collect();
    Ok(HopfHomotopyFamily {
        source: h.clone(),
        target: h.clone(),
        phi: maps[0].clone(),
        psi: LinMap::identity(h.dim(), h.field().one()),
        maps,
    })
}
