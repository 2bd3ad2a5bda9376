//! Hopf algebras: a bialgebra with antipode, optional grading and a
//! registered list of known group-like elements.

use super::convolution::{conv_inverse, convolution, unit_counit, LinMap};
use super::structure::{show, show2, FinAlgebra, FinCoalgebra, Vector};
use crate::error::{Error, Result};
use crate::par;
use crate::report::Report;
use crate::scalars::{Field, SVec, Scalar};

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    name: String,
    algebra: FinAlgebra,
    coalgebra: FinCoalgebra,
    antipode: LinMap,
    grading: Option<Vec<usize>>,
    grouplikes: Vec<Vector>,
}

/// Equal structure maps; the name, grading and registered group-likes are
/// bookkeeping and do not take part.
impl PartialEq for HopfAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.algebra == o.algebra && self.coalgebra == o.coalgebra && self.antipode == o.antipode
    }
}

/// Checks `Δ(ab) = Δ(a)Δ(b)`, `ε(ab) = ε(a)ε(b)`, `Δ(1) = 1⊗1`, `ε(1) = 1`.
pub fn verify_bialgebra(alg: &FinAlgebra, co: &FinCoalgebra) -> Report {
    let d = alg.dim();
    let mut rep = Report::new();
    if co.dim() != d {
        rep.fail("shape", format!("algebra dim {d}, coalgebra dim {}", co.dim()));
        return rep;
    }
    let labels = alg.labels();
    let delta = par::first_some(d, |i| {
        for j in 0..d {
            let lhs = co.comult(alg.mul_basis(i, j));
            let rhs = alg.tensor_mul(alg, co.comult_basis(i), co.comult_basis(j));
            if lhs != rhs {
                return Some(format!(
                    "Δ({0}·{1}) = {2} but Δ({0})Δ({1}) = {3}",
                    labels[i],
                    labels[j],
                    show2(&lhs, labels, labels),
                    show2(&rhs, labels, labels)
                ));
            }
        }
        None
    });
    rep.record("comultiplication multiplicative", delta);
    let eps = par::first_some(d, |i| {
        (0..d).find_map(|j| {
            let lhs = co.counit_of(alg.mul_basis(i, j));
            let rhs = co.counit_basis(i).mul(&co.counit_basis(j));
            (lhs != rhs).then(|| format!("ε({}·{}) = {lhs} but ε·ε = {rhs}", labels[i], labels[j]))
        })
    });
    rep.record("counit multiplicative", eps);
    let one = alg.unit();
    let d1 = co.comult(one);
    let unit_fail = if d1 != one.tensor(one, d) {
        Some(format!("Δ(1) = {}", show2(&d1, labels, labels)))
    } else if !co.counit_of(one).is_one() {
        Some(format!("ε(1) = {}", co.counit_of(one)))
    } else {
        None
    };
    rep.record("unit group-like", unit_fail);
    rep
}

/// Solves `S * id = u∘ε` and certifies `id * S = u∘ε`.
pub fn compute_antipode(alg: &FinAlgebra, co: &FinCoalgebra) -> Result<LinMap> {
    let id = LinMap::identity(alg.dim(), alg.field().one());
    conv_inverse(co, alg, &id).map_err(|e| match e {
        Error::NotConvInvertible(m) => Error::NoAntipode(m),
        other => other,
    })
}

impl HopfAlgebra {
    pub fn new(name: impl Into<String>, algebra: FinAlgebra, coalgebra: FinCoalgebra, antipode: LinMap) -> Result<Self> {
        let d = algebra.dim();
        if coalgebra.dim() != d || antipode.src != d || antipode.tgt != d {
            return Err(Error::ShapeMismatch("algebra, coalgebra and antipode dimensions differ".into()));
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch("algebra and coalgebra over different fields".into()));
        }
        Ok(Self { name: name.into(), algebra, coalgebra, antipode, grading: None, grouplikes: Vec::new() })
    }

    /// Builds a Hopf algebra from bialgebra data by solving for the antipode.
    pub fn from_bialgebra(name: impl Into<String>, algebra: FinAlgebra, coalgebra: FinCoalgebra) -> Result<Self> {
        let s = compute_antipode(&algebra, &coalgebra)?;
        Self::new(name, algebra, coalgebra, s)
    }

    pub fn with_grading(mut self, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != self.dim() {
            return Err(Error::ShapeMismatch("grading length".into()));
        }
        self.grading = Some(degrees);
        Ok(self)
    }

    pub fn without_grading(mut self) -> Self {
        self.grading = None;
        self
    }

    pub fn with_grouplikes(mut self, g: Vec<Vector>) -> Self {
        self.grouplikes = g;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn algebra(&self) -> &FinAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &FinCoalgebra {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn grading(&self) -> Option<&[usize]> {
        self.grading.as_deref()
    }

    pub fn registered_grouplikes(&self) -> &[Vector] {
        &self.grouplikes
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.algebra.index_of(label)
    }

    /// Basis vector by label; panics on unknown labels (constructor bug).
    pub fn element(&self, label: &str) -> Vector {
        let i = self.index_of(label).unwrap_or_else(|| panic!("no basis element `{label}` in {}", self.name));
        self.basis(i)
    }

    pub fn basis(&self, i: usize) -> Vector {
        SVec::basis(i, self.field().one())
    }

    pub fn one(&self) -> Vector {
        self.algebra.unit().clone()
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn comult(&self, x: &Vector) -> Vector {
        self.coalgebra.comult(x)
    }

    pub fn counit(&self, x: &Vector) -> Scalar {
        self.coalgebra.counit_of(x)
    }

    pub fn apply_antipode(&self, x: &Vector) -> Vector {
        self.antipode.apply(x)
    }

    pub fn show(&self, x: &Vector) -> String {
        show(x, self.labels())
    }

    pub fn verify_bialgebra(&self) -> Report {
        verify_bialgebra(&self.algebra, &self.coalgebra)
    }

    /// `S * id = u∘ε = id * S`.
    pub fn verify_antipode(&self) -> Report {
        let mut rep = Report::new();
        let id = LinMap::identity(self.dim(), self.field().one());
        let e = unit_counit(&self.coalgebra, &self.algebra);
        for (name, l, r) in [("antipode left", &self.antipode, &id), ("antipode right", &id, &self.antipode)] {
            let c = convolution(&self.coalgebra, &self.algebra, l, r);
            let fail = (0..self.dim())
                .find(|&i| c.image(i) != e.image(i))
                .map(|i| format!("fails on {}: got {}", self.labels()[i], self.show(c.image(i))));
            rep.record(name, fail);
        }
        rep
    }

    /// Degree additivity of products and coproducts, ε vanishing in positive
    /// degree, unit and registered group-likes in degree 0.
    pub fn verify_grading(&self) -> Report {
        let mut rep = Report::new();
        let Some(deg) = self.grading.as_ref() else {
            rep.fail("graded", "no grading present");
            return rep;
        };
        let d = self.dim();
        let labels = self.labels();
        let mult = par::first_some(d, |i| {
            (0..d).find_map(|j| {
                let v = self.algebra.mul_basis(i, j);
                v.indices()
                    .find(|&k| deg[k] != deg[i] + deg[j])
                    .map(|k| format!("{}·{} has component {} of wrong degree", labels[i], labels[j], labels[k]))
            })
        });
        rep.record("multiplication degree", mult);
        let comult = (0..d).find_map(|i| {
            self.coalgebra
                .comult_basis(i)
                .indices()
                .find(|&jk| deg[jk / d] + deg[jk % d] != deg[i])
                .map(|jk| format!("Δ({}) has component {}⊗{}", labels[i], labels[jk / d], labels[jk % d]))
        });
        rep.record("comultiplication degree", comult);
        let eps = (0..d)
            .find(|&i| deg[i] > 0 && !self.coalgebra.counit_basis(i).is_zero())
            .map(|i| format!("ε({}) ≠ 0 in degree {}", labels[i], deg[i]));
        rep.record("counit degree", eps);
        let deg0 = std::iter::once(self.algebra.unit())
            .chain(self.grouplikes.iter())
            .find(|v| v.indices().any(|k| deg[k] != 0))
            .map(|v| format!("{} not in degree 0", self.show(v)));
        rep.record("group-likes in degree 0", deg0);
        rep
    }

    /// Every axiom: algebra, coalgebra, bialgebra, antipode and, if present, grading.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new();
        rep.extend("algebra", self.algebra.verify());
        rep.extend("coalgebra", self.coalgebra.verify());
        rep.extend("bialgebra", self.verify_bialgebra());
        rep.extend("antipode", self.verify_antipode());
        if self.grading.is_some() {
            rep.extend("grading", self.verify_grading());
        }
        rep
    }

    /// Replaces the multiplication, keeping the coalgebra; the antipode is
    /// recomputed.
    pub fn with_algebra(&self, name: impl Into<String>, algebra: FinAlgebra) -> Result<Self> {
        let mut h = Self::from_bialgebra(name, algebra, self.coalgebra.clone())?;
        h.grading = self.grading.clone();
        h.grouplikes = self.grouplikes.clone();
        Ok(h)
    }

    /// Degree-`n` projection, or `None` if ungraded.
    pub fn degree_projection(&self, n: usize) -> Option<LinMap> {
        let deg = self.grading.as_ref()?;
        let one = self.field().one();
        let images = (0..self.dim()).map(|i| if deg[i] == n { SVec::basis(i, one.clone()) } else { SVec::new() }).collect();
        Some(LinMap { src: self.dim(), tgt: self.dim(), images })
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.grading.as_ref().map(|d| d.iter().copied().max().unwrap_or(0))
    }
}
