//! Central group-likes of the double, cocycles on quotients, and the linking
//! relations.

use std::sync::Arc;

use super::datum::BorelDatum;
use super::forms::{BilinearForm, HopfTwoCocycle};
use super::pairing::SkewPairing;
use crate::error::{Error, Result};
use crate::hopf::{generate_group, is_central, quotient_by_central_grouplikes, CentralQuotient, HopfAlgebra, Vector};
use crate::report::Report;
use crate::scalars::{SVec, Scalar};

fn position(group: &[usize], x: usize, side: &str) -> Result<usize> {
    group.iter().position(|&g| g == x).ok_or_else(|| Error::NotGrouplike(format!("{side} basis index {x} is not registered")))
}

/// Whether `y ⊗ g⁻¹` is central in the double `d = (U ⊗ A)^σ`, decided both
/// by the character conditions `η_i(y) = τ(y_i, g)`, `χ_j(g⁻¹) = τ(y, g_j)`
/// and by a direct commutant computation. Disagreement is an error.
pub fn central_grouplike_test(
    d: &HopfAlgebra,
    datum: &BorelDatum,
    tau: &SkewPairing,
    y: usize,
    g: usize,
) -> Result<bool> {
    let u = tau.left();
    let a = tau.right();
    let yp = position(&datum.u_group, y, "U")?;
    let ginv_v = a.antipode().image(g);
    let (ginv, _) = ginv_v.first().ok_or_else(|| Error::NotGrouplike("S(g) = 0".into()))?;
    position(&datum.a_group, g, "A")?;
    let gip = position(&datum.a_group, ginv, "A")?;
    let by_chars = datum.u_roles.iter().all(|r| &r.character[yp] == tau.get(r.grouplike, g))
        && datum.a_roles.iter().all(|r| &r.character[gip] == tau.get(y, r.grouplike));
    let z: Vector = u.basis(y).tensor(ginv_v, a.dim());
    let direct = is_central(d, &z);
    if by_chars != direct {
        return Err(Error::InconsistentWithLemma(format!(
            "{}⊗{}: character criterion says {by_chars}, commutant says {direct}",
            u.labels()[y],
            a.labels()[ginv]
        )));
    }
    Ok(direct)
}

/// `E_i u_j − η_j(y_i) u_j E_i = τ(u_j, a_i)(1 − y_j ⊗ g_i)` in the double,
/// with `a_i = 1 ⊗ a_i` and `u_j = u_j ⊗ 1`.
pub fn linking_relation_check(
    d: &HopfAlgebra,
    datum: &BorelDatum,
    tau: &SkewPairing,
    i: usize,
    j: usize,
) -> Result<bool> {
    let (ra, ru) = match (datum.a_roles.get(i), datum.u_roles.get(j)) {
        (Some(ra), Some(ru)) => (ra, ru),
        _ => return Err(Error::UnregisteredGenerators(format!("roles a_{i}, u_{j}"))),
    };
    let (u, a) = (tau.left(), tau.right());
    let da = a.dim();
    let ai = u.one().tensor(&a.basis(ra.element), da);
    let uj = u.basis(ru.element).tensor(&a.one(), da);
    let yp = position(&datum.u_group, ra_y(datum, i)?, "U")?;
    let eta = &ru.character[yp];
    let lhs = d.mul(&ai, &uj).difference(&d.mul(&uj, &ai).scaled(eta));
    let yg = u.basis(ru.grouplike).tensor(&a.basis(ra.grouplike), da);
    let rhs = d.one().difference(&yg).scaled(tau.get(ru.element, ra.element));
    Ok(lhs == rhs)
}

/// `y_i`: the group-like of the `i`-th `U` role, paired with `a_i`.
fn ra_y(datum: &BorelDatum, i: usize) -> Result<usize> {
    datum.u_roles.get(i).map(|r| r.grouplike).ok_or_else(|| Error::UnregisteredGenerators(format!("y_{i}")))
}

/// `E_i F_j − F_j E_i = δ_ij λ_i (K_i⁻¹ − K_i)` in the quotient of the double,
/// with `E = [1⊗a_i]`, `F = [u_j y_j⁻¹ ⊗ 1]`, `K = [1⊗g_i]`.
pub fn quotient_linking_check(
    q: &CentralQuotient,
    datum: &BorelDatum,
    tau: &SkewPairing,
    lambda: &[Scalar],
    i: usize,
    j: usize,
) -> Result<bool> {
    let (ra, ru) = match (datum.a_roles.get(i), datum.u_roles.get(j)) {
        (Some(ra), Some(ru)) => (ra, ru),
        _ => return Err(Error::UnregisteredGenerators(format!("roles a_{i}, u_{j}"))),
    };
    let li = lambda.get(i).ok_or_else(|| Error::UnregisteredGenerators(format!("λ_{i}")))?;
    let (u, a) = (tau.left(), tau.right());
    let da = a.dim();
    let p = &q.projection;
    let h = &q.hopf;
    let e = p.apply(&u.one().tensor(&a.basis(ra.element), da));
    let f_u = u.mul(&u.basis(ru.element), u.antipode().image(ru.grouplike));
    let f = p.apply(&f_u.tensor(&a.one(), da));
    let k = p.apply(&u.one().tensor(&a.basis(ra.grouplike), da));
    let kinv = p.apply(&u.one().tensor(a.antipode().image(ra.grouplike), da));
    let lhs = h.mul(&e, &f).difference(&h.mul(&f, &e));
    let rhs = if i == j { kinv.difference(&k).scaled(li) } else { SVec::new() };
    Ok(lhs == rhs)
}

/// A cocycle induced on `H / (k[G])⁺H`.
#[derive(Clone, Debug)]
pub struct QuotientCocycle {
    pub quotient: CentralQuotient,
    pub cocycle: HopfTwoCocycle,
}

/// Descends `ρ` along the quotient by the central group-likes `gens`,
/// after checking `ρ(g, x) = ε(x) = ρ(x, g)` on the generated group.
pub fn quotient_cocycle(rho: &HopfTwoCocycle, gens: &[Vector]) -> Result<QuotientCocycle> {
    let h = rho.hopf();
    let d = h.dim();
    let field = h.field();
    let group = generate_group(h, gens, d * d)?;
    for g in &group {
        for x in 0..d {
            let e = h.coalgebra().counit_basis(x);
            let xv = h.basis(x);
            if rho.values().eval(g, &xv, field) != e || rho.values().eval(&xv, g, field) != e {
                return Err(Error::NotTrivialOnSubgroup(format!("at ({}, {})", h.show(g), h.labels()[x])));
            }
        }
    }
    let q = quotient_by_central_grouplikes(h, gens)?;
    // ρ(gx, y) = ρ(x, y) = ρ(x, yg)
    for g in &group {
        for x in 0..d {
            let gx = h.mul(g, &h.basis(x));
            for y in 0..d {
                let v = rho.values().get(x, y);
                let yv = h.basis(y);
                if &rho.values().eval(&gx, &yv, field) != v || &rho.values().eval(&h.basis(x), &h.mul(&yv, g), field) != v {
                    return Err(Error::IllDefined(format!(
                        "ρ not G-invariant at ({}, {})",
                        h.labels()[x],
                        h.labels()[y]
                    )));
                }
            }
        }
    }
    let n = q.lifts.len();
    let induce = |f: &BilinearForm| BilinearForm::from_fn(n, n, |i, j| f.get(q.lifts[i], q.lifts[j]).clone());
    let cocycle = HopfTwoCocycle::with_inverse(Arc::new(q.hopf.clone()), induce(rho.values()), induce(rho.inverse()))?;
    Ok(QuotientCocycle { quotient: q, cocycle })
}

/// `(H/(kG)⁺H)^ρ̄` against `H^ρ/(kG)⁺H^ρ`, table by table.
pub fn verify_quotient_twist(rho: &HopfTwoCocycle, qc: &QuotientCocycle) -> Result<Report> {
    let mut rep = Report::new();
    let left = qc.cocycle.twisted_hopf()?;
    let hr = rho.twisted_hopf()?;
    let right = quotient_by_central_grouplikes(&hr, &qc.quotient.group[1..])?;
    rep.record(
        "same basis",
        (right.lifts != qc.quotient.lifts).then(|| "quotients keep different basis vectors".to_string()),
    );
    if right.lifts == qc.quotient.lifts {
        let (l, r) = (&left, &right.hopf);
        rep.record("multiplication", (l.algebra().table() != r.algebra().table()).then(|| "tables differ".into()));
        rep.record("unit", (l.algebra().unit() != r.algebra().unit()).then(|| "units differ".into()));
        rep.record("comultiplication", (l.coalgebra().table() != r.coalgebra().table()).then(|| "tables differ".into()));
        rep.record("counit", (l.coalgebra().counit() != r.coalgebra().counit()).then(|| "counits differ".into()));
        rep.record("antipode", (l.antipode() != r.antipode()).then(|| "antipodes differ".into()));
    }
    Ok(rep)
}
