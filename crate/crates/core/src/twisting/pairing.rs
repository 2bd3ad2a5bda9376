//! Skew-pairings `τ: U × A → k`, the double cocycle and the generalized
//! quantum double `(U ⊗ A)^σ`.

use std::sync::Arc;

use super::forms::{BilinearForm, HopfTwoCocycle};
use crate::error::{Error, Result};
use crate::hopf::{tensor_hopf, Algebra, HopfAlgebra};
use crate::par;
use crate::report::Report;
use crate::scalars::{SVec, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct SkewPairing {
    u: Arc<HopfAlgebra>,
    a: Arc<HopfAlgebra>,
    values: BilinearForm,
    inverse: BilinearForm,
}

/// `τ(uv,a) = τ(u,a₁)τ(v,a₂)`, `τ(u,ab) = τ(u₂,a)τ(u₁,b)` and the unit
/// conditions, on all basis elements.
pub fn verify_skew_pairing(tau: &BilinearForm, u: &HopfAlgebra, a: &HopfAlgebra) -> Report {
    let mut rep = Report::new();
    let (du, da) = (u.dim(), a.dim());
    if tau.rows != du || tau.cols != da {
        rep.fail("shape", format!("{}×{} form for dims {du}, {da}", tau.rows, tau.cols));
        return rep;
    }
    let field = u.field();
    let (lu, la) = (u.labels(), a.labels());
    let unit_a = (0..du).find(|&x| tau.eval(&u.basis(x), &a.one(), field) != u.coalgebra().counit_basis(x));
    rep.record("τ(u,1) = ε(u)", unit_a.map(|x| format!("at u = {}", lu[x])));
    let unit_u = (0..da).find(|&y| tau.eval(&u.one(), &a.basis(y), field) != a.coalgebra().counit_basis(y));
    rep.record("τ(1,a) = ε(a)", unit_u.map(|y| format!("at a = {}", la[y])));
    let at = a.coalgebra();
    let left = par::first_some(du * du, |xy| {
        let (x, y) = (xy / du, xy % du);
        let xy_v = u.algebra().mul_basis(x, y);
        (0..da).find_map(|b| {
            let lhs = tau.eval(xy_v, &a.basis(b), field);
            let rhs = at.terms(b).iter().fold(field.zero(), |acc, (b1, b2, c)| {
                acc.add(&c.mul(tau.get(x, *b1)).mul(tau.get(y, *b2)))
            });
            (lhs != rhs).then(|| format!("τ({}·{}, {}) : {lhs} ≠ {rhs}", lu[x], lu[y], la[b]))
        })
    });
    rep.record("τ(uv,a) = τ(u,a₁)τ(v,a₂)", left);
    let ut = u.coalgebra();
    let right = par::first_some(da * da, |bc| {
        let (b, c) = (bc / da, bc % da);
        let bc_v = a.algebra().mul_basis(b, c);
        (0..du).find_map(|x| {
            let lhs = tau.eval(&u.basis(x), bc_v, field);
            let rhs = ut.terms(x).iter().fold(field.zero(), |acc, (x1, x2, e)| {
                acc.add(&e.mul(tau.get(*x2, b)).mul(tau.get(*x1, c)))
            });
            (lhs != rhs).then(|| format!("τ({}, {}·{}) : {lhs} ≠ {rhs}", lu[x], la[b], la[c]))
        })
    });
    rep.record("τ(u,ab) = τ(u₂,a)τ(u₁,b)", right);
    rep
}

/// `τ⁻¹(u, a) = τ(S(u), a)`, certified by convolution on both sides.
pub fn pairing_inverse(tau: &BilinearForm, u: &HopfAlgebra, a: &HopfAlgebra) -> Result<BilinearForm> {
    let field = u.field();
    let inv = BilinearForm::from_fn(u.dim(), a.dim(), |x, y| {
        tau.eval(u.antipode().image(x), &a.basis(y), field)
    });
    let e = BilinearForm::counit_form(u.coalgebra(), a.coalgebra());
    if tau.convolve(&inv, u.coalgebra(), a.coalgebra()) != e || inv.convolve(tau, u.coalgebra(), a.coalgebra()) != e {
        return Err(Error::NotConvInvertible("τ∘(S⊗id) is not a convolution inverse".into()));
    }
    Ok(inv)
}

impl SkewPairing {
    pub fn new(u: Arc<HopfAlgebra>, a: Arc<HopfAlgebra>, values: BilinearForm) -> Result<Self> {
        let rep = verify_skew_pairing(&values, &u, &a);
        if let Some(c) = rep.first_failure() {
            return Err(Error::BadParams(format!(
                "not a skew-pairing: {} {}",
                c.name,
                c.witness.clone().unwrap_or_default()
            )));
        }
        let inverse = pairing_inverse(&values, &u, &a)?;
        Ok(Self { u, a, values, inverse })
    }

    /// `τ = ε ⊗ ε`.
    pub fn trivial(u: Arc<HopfAlgebra>, a: Arc<HopfAlgebra>) -> Self {
        let e = BilinearForm::counit_form(u.coalgebra(), a.coalgebra());
        Self { u, a, values: e.clone(), inverse: e }
    }

    pub fn left(&self) -> &Arc<HopfAlgebra> {
        &self.u
    }

    pub fn right(&self) -> &Arc<HopfAlgebra> {
        &self.a
    }

    pub fn values(&self) -> &BilinearForm {
        &self.values
    }

    pub fn inverse(&self) -> &BilinearForm {
        &self.inverse
    }

    pub fn get(&self, u: usize, a: usize) -> &Scalar {
        self.values.get(u, a)
    }
}

/// `σ(u ⊗ a, v ⊗ b) = ε(u) τ(v, a) ε(b)` on `U ⊗ A`, with inverse built from
/// `τ⁻¹` and certified.
pub fn double_cocycle(tau: &SkewPairing) -> Result<HopfTwoCocycle> {
    let (u, a) = (tau.left(), tau.right());
    let h = Arc::new(tensor_hopf(u, a)?);
    let da = a.dim();
    let d = h.dim();
    let eu = u.coalgebra();
    let ea = a.coalgebra();
    let form = |t: &BilinearForm| {
        BilinearForm::from_fn(d, d, |x, y| {
            let (xu, xa, yu, yb) = (x / da, x % da, y / da, y % da);
            let e = eu.counit_basis(xu).mul(&ea.counit_basis(yb));
            if e.is_zero() {
                e
            } else {
                e.mul(t.get(yu, xa))
            }
        })
    };
    HopfTwoCocycle::with_inverse(h, form(tau.values()), form(tau.inverse()))
}

/// `(u⊗a)(v⊗b) = u τ(v₁,a₁) v₂ ⊗ a₂ τ⁻¹(v₃,a₃) b`, programmed directly.
pub fn double_product_direct(tau: &SkewPairing) -> Result<Algebra> {
    let (u, a) = (tau.left(), tau.right());
    let (du, da) = (u.dim(), a.dim());
    let d = du * da;
    let tri = |c: &SVec<Scalar>, n: usize| -> Vec<(usize, usize, usize, Scalar)> {
        c.iter().map(|(i, s)| (i / (n * n), (i / n) % n, i % n, s.clone())).collect()
    };
    let du2: Vec<_> = (0..du).map(|v| tri(&u.coalgebra().comult2_basis(v), du)).collect();
    let da2: Vec<_> = (0..da).map(|x| tri(&a.coalgebra().comult2_basis(x), da)).collect();
    let mult = par::map_range(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        let (xu, xa, yv, yb) = (x / da, x % da, y / da, y % da);
        let mut out = SVec::new();
        for (v1, v2, v3, c) in &du2[yv] {
            for (a1, a2, a3, e) in &da2[xa] {
                let s = tau.get(*v1, *a1).mul(tau.inverse().get(*v3, *a3));
                if s.is_zero() {
                    continue;
                }
                let s = s.mul(c).mul(e);
                let left = u.algebra().mul_basis(xu, *v2);
                let right = a.algebra().mul_basis(*a2, yb);
                for (p, lp) in left.iter() {
                    for (q, rq) in right.iter() {
                        out.add_term(p * da + q, s.mul(lp).mul(rq));
                    }
                }
            }
        }
        out
    });
    let h = u.algebra().tensor(a.algebra());
    Algebra::new(u.field(), h.labels().to_vec(), mult, h.unit().clone())
}

/// The double `(U ⊗ A)^σ` built by twisting, cross-checked against the
/// direct product formula.
pub fn quantum_double(tau: &SkewPairing) -> Result<(HopfTwoCocycle, Arc<HopfAlgebra>)> {
    let sigma = double_cocycle(tau)?;
    let d = sigma.twisted_hopf()?;
    let direct = double_product_direct(tau)?;
    if let Some(i) = (0..d.dim() * d.dim()).find(|&i| d.algebra().table()[i] != direct.table()[i]) {
        let n = d.dim();
        return Err(Error::Internal(format!(
            "double product mismatch at ({}, {})",
            d.labels()[i / n],
            d.labels()[i % n]
        )));
    }
    Ok((sigma, d))
}
