//! Bilinear forms on a Hopf algebra, Hopf 2-cocycles and the twisted objects
//! `H^σ`, `A^σ`.

use std::sync::{Arc, OnceLock};

use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::hopf::{conv_inverse, Algebra, FinCoalgebra, HopfAlgebra, LinMap};
use crate::par;
use crate::report::Report;
use crate::scalars::{Field, SVec, Scalar};

/// A bilinear form `V × W → k` stored densely, `values[x * cols + y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub rows: usize,
    pub cols: usize,
    pub values: Vec<Scalar>,
}

impl BilinearForm {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar + Sync + Send) -> Self {
        let values = par::map_range(rows * cols, |xy| f(xy / cols, xy % cols));
        Self { rows, cols, values }
    }

    pub fn get(&self, x: usize, y: usize) -> &Scalar {
        &self.values[x * self.cols + y]
    }

    /// Value on a pair of vectors.
    pub fn eval(&self, x: &SVec<Scalar>, y: &SVec<Scalar>, field: &Field) -> Scalar {
        let mut acc = field.zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc = acc.add(&a.mul(b).mul(self.get(i, j)));
            }
        }
        acc
    }

    /// `ε ⊗ ε` for the counits of the given coalgebras.
    pub fn counit_form(left: &FinCoalgebra, right: &FinCoalgebra) -> Self {
        Self::from_fn(left.dim(), right.dim(), |x, y| left.counit_basis(x).mul(&right.counit_basis(y)))
    }

    /// `(f * g)(x, y) = f(x₁, y₁) g(x₂, y₂)`.
    pub fn convolve(&self, other: &BilinearForm, left: &FinCoalgebra, right: &FinCoalgebra) -> Self {
        let field = left.field().clone();
        let lt: Vec<_> = (0..left.dim()).map(|i| left.terms(i)).collect();
        let rt: Vec<_> = (0..right.dim()).map(|i| right.terms(i)).collect();
        Self::from_fn(self.rows, self.cols, |x, y| {
            let mut acc = field.zero();
            for (x1, x2, c) in &lt[x] {
                for (y1, y2, e) in &rt[y] {
                    let v = self.get(*x1, *y1).mul(other.get(*x2, *y2));
                    if !v.is_zero() {
                        acc = acc.add(&v.mul(&c.mul(e)));
                    }
                }
            }
            acc
        })
    }

    /// Convolution inverse on the coalgebra `left ⊗ right`, by a sparse solve.
    pub fn conv_inverse(&self, left: &FinCoalgebra, right: &FinCoalgebra) -> Result<Self> {
        let field = left.field();
        let co = left.tensor(right);
        let k = Algebra::new(field, vec!["1".into()], vec![SVec::basis(0, field.one())], SVec::basis(0, field.one()))?;
        let f = LinMap {
            src: self.values.len(),
            tgt: 1,
            images: self.values.iter().map(|v| SVec::from_terms([(0, v.clone())])).collect(),
        };
        let g = conv_inverse(&co, &k, &f)?;
        let values = g.images.iter().map(|v| v.get(0).cloned().unwrap_or_else(|| field.zero())).collect();
        Ok(Self { rows: self.rows, cols: self.cols, values })
    }
}

/// `P(x, y) = Σ σ(x₁, y₁) x₂ y₂` for all basis pairs.
fn left_products(h: &HopfAlgebra, sigma: &BilinearForm) -> Vec<SVec<Scalar>> {
    let d = h.dim();
    let co = h.coalgebra();
    let terms: Vec<_> = (0..d).map(|i| co.terms(i)).collect();
    par::map_range(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        let mut out = SVec::new();
        for (x1, x2, c) in &terms[x] {
            for (y1, y2, e) in &terms[y] {
                let s = sigma.get(*x1, *y1);
                if !s.is_zero() {
                    out.add_scaled(h.algebra().mul_basis(*x2, *y2), &s.mul(c).mul(e));
                }
            }
        }
        out
    })
}

/// Normalization and the cocycle identity
/// `σ(x₁,y₁) σ(x₂y₂,z) = σ(y₁,z₁) σ(x,y₂z₂)` on all basis triples.
pub fn verify_cocycle(sigma: &BilinearForm, h: &HopfAlgebra) -> Report {
    let mut rep = Report::new();
    let d = h.dim();
    let field = h.field();
    if sigma.rows != d || sigma.cols != d {
        rep.fail("shape", format!("{}×{} form on a dim {d} Hopf algebra", sigma.rows, sigma.cols));
        return rep;
    }
    let one = h.one();
    let labels = h.labels();
    let norm = (0..d).find_map(|x| {
        let e = h.coalgebra().counit_basis(x);
        let l = sigma.eval(&h.basis(x), &one, field);
        let r = sigma.eval(&one, &h.basis(x), field);
        (l != e || r != e).then(|| format!("σ({0},1) = {l}, σ(1,{0}) = {r}, ε = {e}", labels[x]))
    });
    rep.record("normalized", norm);
    let p = left_products(h, sigma);
    let lhs_at = |x: usize, y: usize, z: usize| {
        p[x * d + y].iter().fold(field.zero(), |acc, (m, c)| acc.add(&c.mul(sigma.get(m, z))))
    };
    let rhs_at = |x: usize, y: usize, z: usize| {
        p[y * d + z].iter().fold(field.zero(), |acc, (m, c)| acc.add(&c.mul(sigma.get(x, m))))
    };
    let fail = par::first_some(d * d * d, |xyz| {
        let (x, y, z) = (xyz / (d * d), (xyz / d) % d, xyz % d);
        let (l, r) = (lhs_at(x, y, z), rhs_at(x, y, z));
        (l != r).then(|| format!("({}, {}, {}): {l} ≠ {r}", labels[x], labels[y], labels[z]))
    });
    rep.record("cocycle identity", fail);
    rep
}

/// A verified, convolution-invertible normalized 2-cocycle on `H`.
#[derive(Debug)]
pub struct HopfTwoCocycle {
    hopf: Arc<HopfAlgebra>,
    values: BilinearForm,
    inverse: BilinearForm,
    twisted: OnceLock<Arc<HopfAlgebra>>,
}

impl Clone for HopfTwoCocycle {
    fn clone(&self) -> Self {
        let twisted = OnceLock::new();
        if let Some(t) = self.twisted.get() {
            let _ = twisted.set(t.clone());
        }
        Self { hopf: self.hopf.clone(), values: self.values.clone(), inverse: self.inverse.clone(), twisted }
    }
}

impl PartialEq for HopfTwoCocycle {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && self.hopf == other.hopf
    }
}

fn check_cocycle(sigma: &BilinearForm, h: &HopfAlgebra) -> Result<()> {
    let rep = verify_cocycle(sigma, h);
    match rep.first_failure() {
        Some(c) => Err(Error::BadParams(format!("not a 2-cocycle: {} {}", c.name, c.witness.clone().unwrap_or_default()))),
        None => Ok(()),
    }
}

impl HopfTwoCocycle {
    /// Verifies `sigma` and solves for its convolution inverse.
    pub fn new(hopf: Arc<HopfAlgebra>, sigma: BilinearForm) -> Result<Self> {
        check_cocycle(&sigma, &hopf)?;
        let inverse = cocycle_conv_inverse(&sigma, &hopf)?;
        Ok(Self { hopf, values: sigma, inverse, twisted: OnceLock::new() })
    }

    /// Verifies `sigma` and certifies the supplied inverse on both sides.
    pub fn with_inverse(hopf: Arc<HopfAlgebra>, sigma: BilinearForm, inverse: BilinearForm) -> Result<Self> {
        check_cocycle(&sigma, &hopf)?;
        let co = hopf.coalgebra();
        let e = BilinearForm::counit_form(co, co);
        if sigma.convolve(&inverse, co, co) != e || inverse.convolve(&sigma, co, co) != e {
            return Err(Error::NotConvInvertible("supplied inverse fails the convolution check".into()));
        }
        Ok(Self { hopf, values: sigma, inverse, twisted: OnceLock::new() })
    }

    /// `ε ⊗ ε`.
    pub fn trivial(hopf: Arc<HopfAlgebra>) -> Self {
        let e = BilinearForm::counit_form(hopf.coalgebra(), hopf.coalgebra());
        Self { hopf, values: e.clone(), inverse: e, twisted: OnceLock::new() }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn values(&self) -> &BilinearForm {
        &self.values
    }

    pub fn inverse(&self) -> &BilinearForm {
        &self.inverse
    }

    /// `H^σ`, computed once.
    pub fn twisted_hopf(&self) -> Result<Arc<HopfAlgebra>> {
        if let Some(t) = self.twisted.get() {
            return Ok(t.clone());
        }
        let t = Arc::new(twist_hopf(&self.hopf, self)?);
        Ok(self.twisted.get_or_init(|| t).clone())
    }

    /// `σ⁻¹` as a 2-cocycle on `H^σ`; twisting by it undoes the twist.
    pub fn inverse_cocycle(&self) -> Result<HopfTwoCocycle> {
        let hs = self.twisted_hopf()?;
        HopfTwoCocycle::with_inverse(hs, self.inverse.clone(), self.values.clone())
    }

    /// Whether `σ(x, y) = ε(x) ε(y)` on the span of the given vectors.
    pub fn trivial_on(&self, span: &[SVec<Scalar>]) -> bool {
        let field = self.hopf.field();
        let co = self.hopf.coalgebra();
        span.iter().all(|x| {
            span.iter().all(|y| self.values.eval(x, y, field) == co.counit_of(x).mul(&co.counit_of(y)))
        })
    }
}

pub fn cocycle_conv_inverse(sigma: &BilinearForm, h: &HopfAlgebra) -> Result<BilinearForm> {
    sigma.conv_inverse(h.coalgebra(), h.coalgebra())
}

/// `x ·_σ y = σ(x₁,y₁) x₂y₂ σ⁻¹(x₃,y₃)` on the coalgebra of `H`. The
/// grading is kept when the twisted structure still respects it.
pub fn twist_hopf(h: &HopfAlgebra, sigma: &HopfTwoCocycle) -> Result<HopfAlgebra> {
    let d = h.dim();
    let co = h.coalgebra();
    let terms: Vec<_> = (0..d).map(|i| co.terms(i)).collect();
    // R(x, y) = x₁y₁ σ⁻¹(x₂, y₂)
    let inv = sigma.inverse();
    let right = par::map_range(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        let mut out = SVec::new();
        for (x1, x2, c) in &terms[x] {
            for (y1, y2, e) in &terms[y] {
                let s = inv.get(*x2, *y2);
                if !s.is_zero() {
                    out.add_scaled(h.algebra().mul_basis(*x1, *y1), &s.mul(c).mul(e));
                }
            }
        }
        out
    });
    let vals = sigma.values();
    let mult = par::map_range(d * d, |xy| {
        let (x, y) = (xy / d, xy % d);
        let mut out = SVec::new();
        for (x1, x2, c) in &terms[x] {
            for (y1, y2, e) in &terms[y] {
                let s = vals.get(*x1, *y1);
                if !s.is_zero() {
                    out.add_scaled(&right[x2 * d + y2], &s.mul(c).mul(e));
                }
            }
        }
        out
    });
    let algebra = Algebra::new(h.field(), h.labels().to_vec(), mult, h.algebra().unit().clone())?;
    let name = format!("{}^σ", h.name());
    let mut t = h.with_algebra(name, algebra)?;
    if t.grading().is_some() && !t.verify_grading().passed() {
        t = t.without_grading();
    }
    Ok(t)
}

/// `a ·_σ b = a₀ b₀ σ⁻¹(a₁, b₁)`, as an `H^σ`-comodule algebra.
pub fn twist_comodule(ca: &ComoduleAlgebra, sigma: &HopfTwoCocycle) -> Result<ComoduleAlgebra> {
    if !Arc::ptr_eq(ca.hopf(), sigma.hopf()) && ca.hopf().as_ref() != sigma.hopf().as_ref() {
        return Err(Error::ShapeMismatch("cocycle lives on a different Hopf algebra".into()));
    }
    let d = ca.dim();
    let dh = ca.hopf().dim();
    let inv = sigma.inverse();
    let delta: Vec<Vec<(usize, usize, Scalar)>> = (0..d)
        .map(|i| ca.coaction_basis(i).iter().map(|(jh, c)| (jh / dh, jh % dh, c.clone())).collect())
        .collect();
    let mult = par::map_range(d * d, |ab| {
        let (a, b) = (ab / d, ab % d);
        let mut out = SVec::new();
        for (a0, a1, c) in &delta[a] {
            for (b0, b1, e) in &delta[b] {
                let s = inv.get(*a1, *b1);
                if !s.is_zero() {
                    out.add_scaled(ca.algebra().mul_basis(*a0, *b0), &s.mul(c).mul(e));
                }
            }
        }
        out
    });
    let algebra = Algebra::new(ca.field(), ca.labels().to_vec(), mult, ca.algebra().unit().clone())?;
    ca.with_algebra(format!("{}^σ", ca.name()), algebra, sigma.twisted_hopf()?)
}
