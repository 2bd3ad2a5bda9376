//! Rank-one Borel halves, the pairing `τ^λ`, and the small quantum group
//! obtained as a quotient of the twisted double.

use std::sync::Arc;

use super::taft::word_label;
use crate::error::{Error, Result};
use crate::hopf::{Algebra, CentralQuotient, Coalgebra, HopfAlgebra};
use crate::scalars::{Field, SVec, Scalar};
use crate::twisting::{
    central_grouplike_test, conjugation_character, quantum_double, quotient_cocycle, BilinearForm, BorelDatum,
    GeneratorRole, HopfTwoCocycle, QuotientCocycle, SkewPairing,
};

/// Hopf algebra on the basis `X^a K^b` (index `a N + b`) with
/// `K X = c X K`, `X^N = 0`, `K^N = 1` and `Δ(K) = K ⊗ K`, `Δ(X) = dx`
/// (given in the basis of `H ⊗ H`).
fn skew_polynomial_hopf(
    name: &str,
    x: &str,
    n: usize,
    c: &Scalar,
    dx: impl Fn(usize) -> SVec<Scalar>,
    field: &Field,
) -> Result<HopfAlgebra> {
    let d = n * n;
    let one = field.one();
    let labels: Vec<String> = (0..d).map(|i| word_label(x, i / n, "K", i % n)).collect();
    // (X^a K^b)(X^c K^d) = c^{bc} X^{a+c} K^{b+d}
    let mult = (0..d * d)
        .map(|ij| {
            let (i, j) = (ij / d, ij % d);
            let (a, b, e, f) = (i / n, i % n, j / n, j % n);
            if a + e >= n {
                SVec::new()
            } else {
                SVec::basis((a + e) * n + (b + f) % n, c.pow((b * e) as u32))
            }
        })
        .collect();
    let algebra = Algebra::new(field, labels.clone(), mult, SVec::basis(0, one.clone()))?;
    let hh = algebra.tensor(&algebra);
    let dk = SVec::basis(d + 1, one.clone());
    let dxv = dx(d);
    let comult = (0..d)
        .map(|i| {
            let xs = (0..i / n).fold(hh.unit().clone(), |acc, _| hh.mul(&acc, &dxv));
            (0..i % n).fold(xs, |acc, _| hh.mul(&acc, &dk))
        })
        .collect();
    let counit = SVec::from_terms((0..n).map(|k| (k, one.clone())));
    let coalgebra = Coalgebra::new(field, labels, comult, counit)?;
    let grouplikes = (0..n).map(|k| SVec::basis(k, one.clone())).collect();
    HopfAlgebra::from_bialgebra(name, algebra, coalgebra)?
        .with_grading((0..d).map(|i| i / n).collect())
        .map(|h| h.with_grouplikes(grouplikes))
}

/// `U = ⟨F, K⟩` and `A = ⟨E, K⟩` with `KEK⁻¹ = q²E`, `KFK⁻¹ = q⁻²F`,
/// `Δ(E) = K⊗E + E⊗1`, `Δ(F) = 1⊗F + F⊗K⁻¹`, and the roles `a = E`, `g = K`,
/// `u = FK`, `y = K`.
pub fn borel_halves(n: usize, q: &Scalar, field: &Field) -> Result<(HopfAlgebra, HopfAlgebra, BorelDatum)> {
    super::taft::check_root(q, n as u64)?;
    let q2 = q.pow(2);
    if q2.multiplicative_order() != Some(n as u64) {
        return Err(Error::BadParams(format!("q² must have order {n}")));
    }
    let one = field.one();
    // Δ(E) = K⊗E + E⊗1; E at index n, K at 1
    let a = skew_polynomial_hopf("A", "E", n, &q2, |d| SVec::from_terms([(d + n, one.clone()), (n * d, one.clone())]), field)?;
    // Δ(F) = 1⊗F + F⊗K^{N-1}
    let u = skew_polynomial_hopf(
        "U",
        "F",
        n,
        &q2.inv()?,
        |d| SVec::from_terms([(n, one.clone()), (n * d + n - 1, one.clone())]),
        field,
    )?;
    let group: Vec<usize> = (0..n).collect();
    let chi = conjugation_character(&a, n, &group).ok_or_else(|| Error::Internal("E is not a K-eigenvector".into()))?;
    let eta = conjugation_character(&u, n + 1, &group).ok_or_else(|| Error::Internal("FK is not a K-eigenvector".into()))?;
    let datum = BorelDatum {
        n,
        q: q.clone(),
        a_group: group.clone(),
        u_group: group,
        a_roles: vec![GeneratorRole { element: n, grouplike: 1, character: chi }],
        u_roles: vec![GeneratorRole { element: n + 1, grouplike: 1, character: eta }],
    };
    let rep = datum.verify(&u, &a);
    if let Some(c) = rep.first_failure() {
        return Err(Error::Internal(format!("Borel datum: {} {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    Ok((u, a, datum))
}

/// Convolution `(f * g)(x) = f(x₁) g(x₂)` of functionals on `A`.
fn conv(a: &HopfAlgebra, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    let field = a.field();
    (0..a.dim())
        .map(|x| {
            a.coalgebra().terms(x).iter().fold(field.zero(), |acc, (x1, x2, c)| acc.add(&c.mul(&f[*x1]).mul(&g[*x2])))
        })
        .collect()
}

/// `τ^λ` for rank one: `τ(y, -)` is the character `K ↦ η(K)`, `E ↦ 0`;
/// `τ(u, -)` is built on words by `τ(u, xw) = τ(u, x) τ(y, w) + ε(x) τ(u, w)`
/// from `τ(u, E) = λ`, `τ(u, K) = 0`; and `τ(-, a)` is extended to all of `U`
/// multiplicatively in the convolution algebra `A*`.
pub fn phi_lambda_pairing(
    u: &Arc<HopfAlgebra>,
    a: &Arc<HopfAlgebra>,
    datum: &BorelDatum,
    lambda: &Scalar,
) -> Result<SkewPairing> {
    let n = datum.n;
    let field = a.field();
    let (ra, ru) = (&datum.a_roles[0], &datum.u_roles[0]);
    let (e, k) = (ra.element, ra.grouplike);
    let da = a.dim();
    // A basis E^c K^d is the word E^c K^d
    let word = |i: usize| -> Vec<usize> { [vec![e; i / n], vec![k; i % n]].concat() };
    let eta_on_k = &ru.character[datum.u_group.iter().position(|&g| g == k).unwrap()];
    let on_gen_y = |x: usize| if x == k { eta_on_k.clone() } else { field.zero() };
    let on_gen_u = |x: usize| if x == e { lambda.clone() } else { field.zero() };
    let eps = |x: usize| a.coalgebra().counit_basis(x);
    let mut f_y = vec![field.zero(); da];
    let mut f_u = vec![field.zero(); da];
    for i in 0..da {
        let w = word(i);
        // evaluate from the right end: w = x₁ x₂ … x_m
        let (mut vy, mut vu) = (field.one(), field.zero());
        for &x in w.iter().rev() {
            vu = on_gen_u(x).mul(&vy).add(&eps(x).mul(&vu));
            vy = on_gen_y(x).mul(&vy);
        }
        f_y[i] = vy;
        f_u[i] = vu;
    }
    // U basis F^a K^b equals the word (u y^{N-1})^a y^b
    let (ui, yi) = (ru.element, ru.grouplike);
    let unit_fn: Vec<Scalar> = (0..da).map(eps).collect();
    let mut rows = Vec::with_capacity(u.dim());
    for j in 0..u.dim() {
        let letters: Vec<usize> = (0..j / n)
            .flat_map(|_| std::iter::once(ui).chain(std::iter::repeat_n(yi, n - 1)))
            .chain(std::iter::repeat_n(yi, j % n))
            .collect();
        let prod = letters.iter().fold(u.one(), |acc, &x| u.mul(&acc, &u.basis(x)));
        let c = match prod.first() {
            Some((idx, c)) if idx == j && prod.len() == 1 => c.clone(),
            _ => return Err(Error::InductionInconsistent(format!("word for {} is not a basis multiple", u.labels()[j]))),
        };
        let phi = letters.iter().fold(unit_fn.clone(), |acc, &x| conv(a, &acc, if x == ui { &f_u } else { &f_y }));
        let cinv = c.inv()?;
        rows.push(phi.iter().map(|v| v.mul(&cinv)).collect::<Vec<_>>());
    }
    let values = BilinearForm { rows: u.dim(), cols: da, values: rows.concat() };
    SkewPairing::new(u.clone(), a.clone(), values).map_err(|err| Error::InductionInconsistent(err.to_string()))
}

/// Every stage of the small quantum group construction.
#[derive(Clone, Debug)]
pub struct SmallQuantumGroup {
    pub u: Arc<HopfAlgebra>,
    pub a: Arc<HopfAlgebra>,
    pub datum: BorelDatum,
    pub lambda: Scalar,
    pub pairing: SkewPairing,
    pub cocycle: HopfTwoCocycle,
    pub double: Arc<HopfAlgebra>,
    /// Basis vector `K ⊗ K⁻¹` of the double.
    pub central: SVec<Scalar>,
    pub quotient: CentralQuotient,
}

pub fn uq_sl2_pipeline(n: usize, q: &Scalar, field: &Field, lambda: &Scalar) -> Result<SmallQuantumGroup> {
    let (u, a, datum) = borel_halves(n, q, field)?;
    let (u, a) = (Arc::new(u), Arc::new(a));
    let pairing = phi_lambda_pairing(&u, &a, &datum, lambda)?;
    let (cocycle, double) = quantum_double(&pairing)?;
    let (y, g) = (datum.u_roles[0].grouplike, datum.a_roles[0].grouplike);
    if !central_grouplike_test(&double, &datum, &pairing, y, g)? {
        return Err(Error::NotCentral("K ⊗ K⁻¹".into()));
    }
    let central = u.basis(y).tensor(a.antipode().image(g), a.dim());
    let mut quotient = crate::hopf::quotient_by_central_grouplikes(&double, std::slice::from_ref(&central))?;
    quotient.hopf = quotient.hopf.with_name(format!("u_q(sl2)[λ={lambda}]"));
    Ok(SmallQuantumGroup { u, a, datum, lambda: lambda.clone(), pairing, cocycle, double, central, quotient })
}

/// The quotient `H^λ / (k[G])⁺H^λ` of dimension `N³`.
pub fn uq_sl2_small(n: usize, q: &Scalar, field: &Field, lambda: &Scalar) -> Result<HopfAlgebra> {
    Ok(uq_sl2_pipeline(n, q, field, lambda)?.quotient.hopf)
}

/// `ρ = σ^λ * (σ^0)⁻¹` as a cocycle on the graded double `H^0`, with
/// `(H^0)^ρ = H^λ`, and its descent `ρ̄` to `u^0 = H^0/(k[G])⁺H^0`.
#[derive(Clone, Debug)]
pub struct GradedTwist {
    pub graded: SmallQuantumGroup,
    pub lifted: SmallQuantumGroup,
    pub rho: HopfTwoCocycle,
    pub descended: QuotientCocycle,
}

pub fn graded_twist(n: usize, q: &Scalar, field: &Field, lambda: &Scalar) -> Result<GradedTwist> {
    let graded = uq_sl2_pipeline(n, q, field, &field.zero())?;
    let lifted = uq_sl2_pipeline(n, q, field, lambda)?;
    let h0 = graded.double.clone();
    let co = h0.coalgebra();
    let (s0, sl) = (&graded.cocycle, &lifted.cocycle);
    let rho = sl.values().convolve(s0.inverse(), co, co);
    let rho_inv = s0.values().convolve(sl.inverse(), co, co);
    let rho = HopfTwoCocycle::with_inverse(h0, rho, rho_inv)?;
    let descended = quotient_cocycle(&rho, std::slice::from_ref(&graded.central))?;
    Ok(GradedTwist { graded, lifted, rho, descended })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twisting::verify_skew_pairing;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn borel_halves_axioms() {
        let f = f7();
        let (u, a, datum) = borel_halves(3, &f.from_i64(2), &f).unwrap();
        assert!(u.verify().passed(), "{}", u.verify());
        assert!(a.verify().passed(), "{}", a.verify());
        assert_eq!(datum.a_roles[0].character[1], f.from_i64(4));
        assert_eq!(datum.u_roles[0].character[1], f.from_i64(2));
        // Δ(E²) has the coefficient 1 + q² on K E ⊗ E
        let e2 = a.mul(&a.basis(3), &a.basis(3));
        let de2 = a.comult(&e2);
        let ke_e = (3 + 1) * 9 + 3; // EK ⊗ E
        assert_eq!(de2.get(ke_e), Some(&f.from_i64(5)));
    }

    #[test]
    fn pairing_values() {
        let f = f7();
        let (u, a, datum) = borel_halves(3, &f.from_i64(2), &f).unwrap();
        let (u, a) = (Arc::new(u), Arc::new(a));
        let tau = phi_lambda_pairing(&u, &a, &datum, &f.from_i64(2)).unwrap();
        assert!(verify_skew_pairing(tau.values(), &u, &a).passed());
        assert_eq!(tau.get(4, 3), &f.from_i64(2)); // τ(FK, E) = λ
        assert_eq!(tau.get(1, 1), &f.from_i64(2)); // τ(K, K) = q⁻²
        assert!(tau.get(1, 3).is_zero()); // τ(K, E) = 0
    }

    #[test]
    fn bad_root() {
        let f = f7();
        assert!(borel_halves(3, &f.from_i64(3), &f).is_err());
    }
}

#[cfg(test)]
mod pipeline_tests {
    use super::*;
    use crate::twisting::{linking_relation_check, quotient_linking_check};

    #[test]
    fn small_quantum_group_n3() {
        let f = Field::prime(7).unwrap();
        let t = std::time::Instant::now();
        let g = uq_sl2_pipeline(3, &f.from_i64(2), &f, &f.from_i64(2)).unwrap();
        eprintln!("pipeline {:?}", t.elapsed());
        assert_eq!(g.double.dim(), 81);
        assert_eq!(g.quotient.hopf.dim(), 27);
        assert!(linking_relation_check(&g.double, &g.datum, &g.pairing, 0, 0).unwrap());
        assert!(quotient_linking_check(&g.quotient, &g.datum, &g.pairing, &[f.from_i64(2)], 0, 0).unwrap());
        let t = std::time::Instant::now();
        let rep = g.double.verify();
        eprintln!("verify double {:?}", t.elapsed());
        assert!(rep.passed(), "{rep}");
        assert!(g.quotient.hopf.verify().passed());
    }
}

#[cfg(test)]
mod graded_twist_tests {
    use super::*;
    use crate::twisting::verify_quotient_twist;

    #[test]
    fn rho_twists_graded_double_to_lifted() {
        let f = Field::prime(7).unwrap();
        let t = std::time::Instant::now();
        let gt = graded_twist(3, &f.from_i64(2), &f, &f.from_i64(2)).unwrap();
        eprintln!("graded twist {:?}", t.elapsed());
        let hr = gt.rho.twisted_hopf().unwrap();
        assert_eq!(hr.algebra().table(), gt.lifted.double.algebra().table());
        assert_eq!(hr.coalgebra().table(), gt.lifted.double.coalgebra().table());
        let rep = verify_quotient_twist(&gt.rho, &gt.descended).unwrap();
        assert!(rep.passed(), "{rep}");
        eprintln!("total {:?}", t.elapsed());
    }
}
