//! Right comodule algebras `δ: A → A ⊗ H` with a base subalgebra `B ⊂ A`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::{show, show2, Algebra, HopfAlgebra, LinMap};
use crate::par;
use crate::report::Report;
use crate::scalars::{Coeff, Field, Matrix, SVec, Scalar};

/// Algebra generators of `A` and, for every basis vector, a word in them
/// whose product spans the same line (used to extend maps from generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    /// Basis indices of the generators.
    pub generators: Vec<usize>,
    /// `words[i]` lists positions into `generators`.
    pub words: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleAlgebra<R = Scalar> {
    name: String,
    algebra: Algebra<R>,
    hopf: Arc<HopfAlgebra>,
    /// `δ(e_i)` in `A ⊗ H`, index `j * dim H + h`.
    coaction: Vec<SVec<R>>,
    /// `i: B → A`; column `b` is the image of the `b`-th basis vector of `B`.
    inclusion: LinMap<R>,
    presentation: Option<Presentation>,
}

impl<R: Coeff> ComoduleAlgebra<R> {
    pub fn new(
        name: impl Into<String>,
        algebra: Algebra<R>,
        hopf: Arc<HopfAlgebra>,
        coaction: Vec<SVec<R>>,
        inclusion: LinMap<R>,
    ) -> Result<Self> {
        let (d, dh) = (algebra.dim(), hopf.dim());
        if coaction.len() != d || coaction.iter().any(|v| v.last_index().is_some_and(|k| k >= d * dh)) {
            return Err(Error::ShapeMismatch("coaction table".into()));
        }
        if inclusion.tgt != d {
            return Err(Error::ShapeMismatch("inclusion target".into()));
        }
        if algebra.field() != hopf.field() {
            return Err(Error::FieldMismatch("comodule algebra and Hopf algebra".into()));
        }
        Ok(Self { name: name.into(), algebra, hopf, coaction, inclusion, presentation: None })
    }

    /// Base `B = k` included as scalar multiples of the unit.
    pub fn over_ground_field(
        name: impl Into<String>,
        algebra: Algebra<R>,
        hopf: Arc<HopfAlgebra>,
        coaction: Vec<SVec<R>>,
    ) -> Result<Self> {
        let d = algebra.dim();
        let inc = LinMap::new(1, d, vec![algebra.unit().clone()])?;
        Self::new(name, algebra, hopf, coaction, inc)
    }

    pub fn with_presentation(mut self, p: Presentation) -> Result<Self> {
        if p.words.len() != self.dim() || p.generators.iter().any(|&g| g >= self.dim()) {
            return Err(Error::ShapeMismatch("presentation".into()));
        }
        self.presentation = Some(p);
        Ok(self)
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

    pub fn algebra(&self) -> &Algebra<R> {
        &self.algebra
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn coaction_table(&self) -> &[SVec<R>] {
        &self.coaction
    }

    pub fn coaction_basis(&self, i: usize) -> &SVec<R> {
        &self.coaction[i]
    }

    pub fn coaction(&self, x: &SVec<R>) -> SVec<R> {
        x.apply(&self.coaction)
    }

    pub fn inclusion(&self) -> &LinMap<R> {
        &self.inclusion
    }

    pub fn base_dim(&self) -> usize {
        self.inclusion.src
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    pub fn mul(&self, x: &SVec<R>, y: &SVec<R>) -> SVec<R> {
        self.algebra.mul(x, y)
    }

    /// Same coaction and base, different multiplication.
    pub fn with_algebra(&self, name: impl Into<String>, algebra: Algebra<R>, hopf: Arc<HopfAlgebra>) -> Result<Self> {
        let mut out = Self::new(name, algebra, hopf, self.coaction.clone(), self.inclusion.clone())?;
        out.presentation = self.presentation.clone();
        Ok(out)
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> ComoduleAlgebra<S> {
        ComoduleAlgebra {
            name: self.name.clone(),
            algebra: self.algebra.map_coeffs(&f),
            hopf: self.hopf.clone(),
            coaction: self.coaction.iter().map(|v| v.map_coeffs(&f)).collect(),
            inclusion: self.inclusion.map_coeffs(&f),
            presentation: self.presentation.clone(),
        }
    }
}

impl<R: Coeff + std::fmt::Display + Send + Sync> ComoduleAlgebra<R> {
    /// Algebra axioms, coassociativity and counit of `δ`, multiplicativity
    /// and unitality of `δ`, and the base inclusion.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new();
        rep.extend("algebra", self.algebra.verify());
        let h = &self.hopf;
        let (d, dh) = (self.dim(), h.dim());
        let halg: Algebra<R> = h.algebra().map_coeffs(R::lift);
        let hco = h.coalgebra().map_coeffs(R::lift);
        let labels = self.labels();
        let hl = h.labels();

        let coassoc = par::first_some(d, |i| {
            let mut left = SVec::new();
            let mut right = SVec::new();
            for (jh, c) in self.coaction[i].iter() {
                let (j, hh) = (jh / dh, jh % dh);
                for (kl, u) in self.coaction[j].iter() {
                    left.add_term(kl * dh + hh, c.mul(u));
                }
                for (ab, u) in hco.comult_basis(hh).iter() {
                    right.add_term(j * dh * dh + ab, c.mul(u));
                }
            }
            (left != right).then(|| format!("(δ⊗id)δ ≠ (id⊗Δ)δ on {}", labels[i]))
        });
        rep.record("coassociative", coassoc);

        let counit = (0..d).find_map(|i| {
            let mut v = SVec::new();
            for (jh, c) in self.coaction[i].iter() {
                v.add_term(jh / dh, c.mul(&hco.counit_basis(jh % dh)));
            }
            (v != self.algebra.basis(i)).then(|| format!("(id⊗ε)δ({}) = {}", labels[i], show(&v, labels)))
        });
        rep.record("counital", counit);

        let mult = par::first_some(d, |i| {
            (0..d).find_map(|j| {
                let lhs = self.coaction(self.algebra.mul_basis(i, j));
                let rhs = self.algebra.tensor_mul(&halg, &self.coaction[i], &self.coaction[j]);
                (lhs != rhs).then(|| {
                    format!(
                        "δ({0}·{1}) = {2} but δ({0})δ({1}) = {3}",
                        labels[i],
                        labels[j],
                        show2(&lhs, labels, hl),
                        show2(&rhs, labels, hl)
                    )
                })
            })
        });
        rep.record("multiplicative", mult);

        let one = self.algebra.unit();
        let d1 = self.coaction(one);
        let unit = (d1 != one.tensor(halg.unit(), dh)).then(|| format!("δ(1) = {}", show2(&d1, labels, hl)));
        rep.record("unital", unit);

        // the base is a subalgebra of coinvariants containing 1
        let base = (0..self.base_dim()).find_map(|b| {
            let x = self.inclusion.image(b);
            let dx = self.coaction(x);
            (dx != x.tensor(halg.unit(), dh)).then(|| format!("i(b{b}) = {} is not coinvariant", show(x, labels)))
        });
        rep.record("base coinvariant", base);
        rep
    }
}

impl ComoduleAlgebra<Scalar> {
    /// `H` coacting on itself by `Δ`.
    pub fn regular(hopf: &Arc<HopfAlgebra>) -> Result<Self> {
        let coaction = hopf.coalgebra().table().to_vec();
        Self::over_ground_field(hopf.name(), hopf.algebra().clone(), hopf.clone(), coaction)
    }

    /// The linear map `a ↦ δ(a) - a ⊗ 1` as a matrix.
    fn coinvariant_matrix(&self) -> Matrix {
        let dh = self.hopf.dim();
        let unit = self.hopf.one();
        let cols: Vec<SVec<Scalar>> = (0..self.dim())
            .map(|i| self.coaction[i].difference(&self.algebra.basis(i).tensor(&unit, dh)))
            .collect();
        Matrix::from_columns(self.field(), self.dim() * dh, &cols)
    }

    /// Echelon basis of `A^{co H}`.
    pub fn coinvariants(&self) -> Vec<SVec<Scalar>> {
        self.coinvariant_matrix().kernel_basis().iter().map(|v| SVec::from_dense(v)).collect()
    }

    /// Whether the subspace spanned by `basis` is closed under products.
    pub fn span_closed_under_mult(&self, basis: &[SVec<Scalar>]) -> bool {
        let d = self.dim();
        let field = self.field();
        let span = Matrix::from_columns(field, d, basis);
        let r = span.rank();
        basis.iter().all(|x| {
            basis.iter().all(|y| {
                let mut cols = basis.to_vec();
                cols.push(self.mul(x, y));
                Matrix::from_columns(field, d, &cols).rank() == r
            })
        })
    }

    /// The isotypic component `{a : δ(a) = a ⊗ h}` for a group-like `h`.
    pub fn component(&self, h: &SVec<Scalar>) -> Vec<SVec<Scalar>> {
        let dh = self.hopf.dim();
        let cols: Vec<SVec<Scalar>> =
            (0..self.dim()).map(|i| self.coaction[i].difference(&self.algebra.basis(i).tensor(h, dh))).collect();
        Matrix::from_columns(self.field(), self.dim() * dh, &cols)
            .kernel_basis()
            .iter()
            .map(|v| SVec::from_dense(v))
            .collect()
    }

    pub fn show(&self, x: &SVec<Scalar>) -> String {
        show(x, self.labels())
    }
}

/// Checks that `f: src → dst` is a unital algebra map, colinear and
/// compatible with the base inclusions.
pub fn comodule_morphism_check(f: &LinMap, src: &ComoduleAlgebra, dst: &ComoduleAlgebra) -> Report {
    let mut rep = Report::new();
    if f.src != src.dim() || f.tgt != dst.dim() {
        rep.fail("shape", format!("map {}→{} between dims {} and {}", f.src, f.tgt, src.dim(), dst.dim()));
        return rep;
    }
    if src.hopf().as_ref() != dst.hopf().as_ref() {
        rep.fail("same Hopf algebra", format!("{} vs {}", src.hopf().name(), dst.hopf().name()));
        return rep;
    }
    let d = src.dim();
    let l = src.labels();
    let mult = par::first_some(d, |i| {
        (0..d).find_map(|j| {
            let lhs = f.apply(src.algebra().mul_basis(i, j));
            let rhs = dst.mul(f.image(i), f.image(j));
            (lhs != rhs).then(|| format!("f({0}·{1}) = {2} but f({0})f({1}) = {3}", l[i], l[j], dst.show(&lhs), dst.show(&rhs)))
        })
    });
    rep.record("multiplicative", mult);
    let unit = (f.apply(src.algebra().unit()) != *dst.algebra().unit()).then(|| "f(1) ≠ 1".to_string());
    rep.record("unital", unit);
    let fid = f.tensor(&LinMap::identity(src.hopf().dim(), src.field().one()));
    let colin = (0..d).find_map(|i| {
        let lhs = dst.coaction(f.image(i));
        let rhs = fid.apply(src.coaction_basis(i));
        (lhs != rhs).then(|| format!("δf({0}) ≠ (f⊗id)δ({0})", l[i]))
    });
    rep.record("colinear", colin);
    let base = if src.base_dim() != dst.base_dim() {
        Some(format!("base dims {} vs {}", src.base_dim(), dst.base_dim()))
    } else {
        (0..src.base_dim())
            .find(|&b| f.apply(src.inclusion().image(b)) != *dst.inclusion().image(b))
            .map(|b| format!("f∘i ≠ i' on b{b}"))
    };
    rep.record("base compatible", base);
    rep
}

/// Morphism check plus bijectivity.
pub fn comodule_isomorphism_check(f: &LinMap, src: &ComoduleAlgebra, dst: &ComoduleAlgebra) -> Report {
    let mut rep = comodule_morphism_check(f, src, dst);
    if f.src == f.tgt {
        let r = f.rank(src.field());
        rep.record("bijective", (r != f.src).then(|| format!("rank {r} < {}", f.src)));
    } else {
        rep.fail("bijective", format!("dimensions {} and {}", f.src, f.tgt));
    }
    rep
}
