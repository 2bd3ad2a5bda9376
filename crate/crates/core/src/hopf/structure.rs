//! Algebras and coalgebras given by structure constants on a fixed basis.
//!
//! Elements are sparse coordinate vectors. Tensor products of two spaces of
//! dimensions `m` and `n` use the index `i * n + j` for `e_i ⊗ e_j`.

use crate::error::{Error, Result};
use crate::par;
use crate::report::Report;
use crate::scalars::{Coeff, Field, SVec, Scalar};

pub type Vector = SVec<Scalar>;

/// Renders a vector using basis labels.
pub fn show<R: Coeff + std::fmt::Display>(v: &SVec<R>, labels: &[String]) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = v.iter().map(|(i, c)| format!("({c})·{}", labels[i])).collect();
    terms.join(" + ")
}

/// Renders a vector of a tensor product `V ⊗ W`.
pub fn show2<R: Coeff + std::fmt::Display>(v: &SVec<R>, left: &[String], right: &[String]) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let n = right.len();
    let terms: Vec<String> =
        v.iter().map(|(i, c)| format!("({c})·{}⊗{}", left[i / n], right[i % n])).collect();
    terms.join(" + ")
}

/// Tensor product labels `a⊗b`.
pub fn tensor_labels(left: &[String], right: &[String]) -> Vec<String> {
    left.iter().flat_map(|a| right.iter().map(move |b| format!("{a}⊗{b}"))).collect()
}

/// An associative unital algebra: `mult[i * dim + j] = e_i e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<R = Scalar> {
    field: Field,
    labels: Vec<String>,
    mult: Vec<SVec<R>>,
    unit: SVec<R>,
}

pub type FinAlgebra = Algebra<Scalar>;

impl<R: Coeff> Algebra<R> {
    pub fn new(field: &Field, labels: Vec<String>, mult: Vec<SVec<R>>, unit: SVec<R>) -> Result<Self> {
        let d = labels.len();
        if mult.len() != d * d {
            return Err(Error::ShapeMismatch(format!("multiplication table has {} entries, expected {}", mult.len(), d * d)));
        }
        if mult.iter().chain(std::iter::once(&unit)).any(|v| v.last_index().is_some_and(|k| k >= d)) {
            return Err(Error::ShapeMismatch("structure constant index out of range".into()));
        }
        Ok(Self { field: field.clone(), labels, mult, unit })
    }

    /// Builds the table from a closure on basis pairs.
    pub fn from_fn(field: &Field, labels: Vec<String>, unit: SVec<R>, f: impl Fn(usize, usize) -> SVec<R> + Sync + Send) -> Result<Self>
    where
        R: Send + Sync,
    {
        let d = labels.len();
        let mult = par::map_range(d * d, |ij| f(ij / d, ij % d));
        Self::new(field, labels, mult, unit)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SVec<R> {
        &self.unit
    }

    pub fn table(&self) -> &[SVec<R>] {
        &self.mult
    }

    pub fn one(&self) -> R {
        R::lift(&self.field.one())
    }

    pub fn basis(&self, i: usize) -> SVec<R> {
        SVec::basis(i, self.one())
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SVec<R> {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, x: &SVec<R>, y: &SVec<R>) -> SVec<R> {
        let mut out = SVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(self.mul_basis(i, j), &a.mul(b));
            }
        }
        out
    }

    pub fn pow(&self, x: &SVec<R>, n: usize) -> SVec<R> {
        let mut acc = self.unit.clone();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Algebra<S> {
        Algebra {
            field: self.field.clone(),
            labels: self.labels.clone(),
            mult: self.mult.iter().map(|v| v.map_coeffs(&f)).collect(),
            unit: self.unit.map_coeffs(&f),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.labels.len());
        self.labels = labels;
        self
    }

    /// Product in `self ⊗ other` with the componentwise multiplication.
    pub fn tensor_mul(&self, other: &Algebra<R>, x: &SVec<R>, y: &SVec<R>) -> SVec<R> {
        let n = other.dim();
        let mut out = SVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let c = a.mul(b);
                let l = self.mul_basis(i / n, j / n);
                let r = other.mul_basis(i % n, j % n);
                for (p, u) in l.iter() {
                    let cu = c.mul(u);
                    for (q, v) in r.iter() {
                        out.add_term(p * n + q, cu.mul(v));
                    }
                }
            }
        }
        out
    }

    /// The tensor product algebra.
    pub fn tensor(&self, other: &Algebra<R>) -> Algebra<R>
    where
        R: Send + Sync,
    {
        let n = other.dim();
        let d = self.dim() * n;
        let mult = par::map_range(d * d, |ij| {
            let (i, j) = (ij / d, ij % d);
            self.mul_basis(i / n, j / n).tensor(other.mul_basis(i % n, j % n), n)
        });
        Algebra {
            field: self.field.clone(),
            labels: tensor_labels(&self.labels, &other.labels),
            mult,
            unit: self.unit.tensor(&other.unit, n),
        }
    }
}

impl<R: Coeff + std::fmt::Display + Send + Sync> Algebra<R> {
    /// Exhaustive associativity and unit check. Failures report the
    /// lexicographically least basis triple (resp. element).
    pub fn verify(&self) -> Report {
        let d = self.dim();
        let mut rep = Report::new();
        let assoc = par::first_some(d, |i| {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let left = self.mul(ij, &self.basis(k));
                    let right = self.mul(&self.basis(i), self.mul_basis(j, k));
                    if left != right {
                        let l = &self.labels;
                        return Some(format!(
                            "({}·{})·{} = {} but {}·({}·{}) = {}",
                            l[i], l[j], l[k], show(&left, l), l[i], l[j], l[k], show(&right, l)
                        ));
                    }
                }
            }
            None
        });
        rep.record("associativity", assoc);
        let unit = (0..d).find_map(|i| {
            let e = self.basis(i);
            let l = self.mul(&self.unit, &e);
            let r = self.mul(&e, &self.unit);
            if l != e || r != e {
                Some(format!("1·{0} = {1}, {0}·1 = {2}", self.labels[i], show(&l, &self.labels), show(&r, &self.labels)))
            } else {
                None
            }
        });
        rep.record("unit", unit);
        rep
    }
}

/// A coassociative counital coalgebra: `comult[i]` is `Δ(e_i)` in `C ⊗ C`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra<R = Scalar> {
    field: Field,
    labels: Vec<String>,
    comult: Vec<SVec<R>>,
    counit: SVec<R>,
}

pub type FinCoalgebra = Coalgebra<Scalar>;

impl<R: Coeff> Coalgebra<R> {
    pub fn new(field: &Field, labels: Vec<String>, comult: Vec<SVec<R>>, counit: SVec<R>) -> Result<Self> {
        let d = labels.len();
        if comult.len() != d {
            return Err(Error::ShapeMismatch(format!("comultiplication table has {} entries, expected {d}", comult.len())));
        }
        if comult.iter().any(|v| v.last_index().is_some_and(|k| k >= d * d)) || counit.last_index().is_some_and(|k| k >= d) {
            return Err(Error::ShapeMismatch("structure constant index out of range".into()));
        }
        Ok(Self { field: field.clone(), labels, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn comult_basis(&self, i: usize) -> &SVec<R> {
        &self.comult[i]
    }

    pub fn table(&self) -> &[SVec<R>] {
        &self.comult
    }

    pub fn counit(&self) -> &SVec<R> {
        &self.counit
    }

    pub fn zero(&self) -> R {
        R::lift(&self.field.zero())
    }

    pub fn counit_basis(&self, i: usize) -> R {
        self.counit.get(i).cloned().unwrap_or_else(|| self.zero())
    }

    pub fn counit_of(&self, x: &SVec<R>) -> R {
        let mut acc = self.zero();
        for (i, c) in x.iter() {
            if let Some(e) = self.counit.get(i) {
                acc = acc.add(&c.mul(e));
            }
        }
        acc
    }

    pub fn comult(&self, x: &SVec<R>) -> SVec<R> {
        x.apply(&self.comult)
    }

    /// `(Δ ⊗ id)Δ(e_i)` in `C ⊗ C ⊗ C`, index `(a * d + b) * d + c`.
    pub fn comult2_basis(&self, i: usize) -> SVec<R> {
        let d = self.dim();
        let mut out = SVec::new();
        for (jk, c) in self.comult[i].iter() {
            let (j, k) = (jk / d, jk % d);
            for (ab, u) in self.comult[j].iter() {
                out.add_term(ab * d + k, c.mul(u));
            }
        }
        out
    }

    /// Terms `(j, k, c)` of `Δ(e_i)`.
    pub fn terms(&self, i: usize) -> Vec<(usize, usize, R)> {
        let d = self.dim();
        self.comult[i].iter().map(|(jk, c)| (jk / d, jk % d, c.clone())).collect()
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Coalgebra<S> {
        Coalgebra {
            field: self.field.clone(),
            labels: self.labels.clone(),
            comult: self.comult.iter().map(|v| v.map_coeffs(&f)).collect(),
            counit: self.counit.map_coeffs(&f),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.labels.len());
        self.labels = labels;
        self
    }

    /// The tensor product coalgebra (componentwise, no flip).
    pub fn tensor(&self, other: &Coalgebra<R>) -> Coalgebra<R> {
        let (m, n) = (self.dim(), other.dim());
        let d = m * n;
        let mut comult = Vec::with_capacity(d);
        for i in 0..m {
            for j in 0..n {
                let mut v = SVec::new();
                for (ab, c) in self.comult[i].iter() {
                    let (a, b) = (ab / m, ab % m);
                    for (xy, e) in other.comult[j].iter() {
                        let (x, y) = (xy / n, xy % n);
                        v.add_term((a * n + x) * d + (b * n + y), c.mul(e));
                    }
                }
                comult.push(v);
            }
        }
        Coalgebra {
            field: self.field.clone(),
            labels: tensor_labels(&self.labels, &other.labels),
            comult,
            counit: self.counit.tensor(&other.counit, n),
        }
    }
}

impl<R: Coeff + std::fmt::Display + Send + Sync> Coalgebra<R> {
    /// Exhaustive coassociativity and counit check.
    pub fn verify(&self) -> Report {
        let d = self.dim();
        let mut rep = Report::new();
        let coassoc = par::first_some(d, |i| {
            let left = self.comult2_basis(i);
            let mut right = SVec::new();
            for (jk, c) in self.comult[i].iter() {
                let (j, k) = (jk / d, jk % d);
                for (ab, u) in self.comult[k].iter() {
                    right.add_term(j * d * d + ab, c.mul(u));
                }
            }
            (left != right).then(|| format!("(Δ⊗id)Δ ≠ (id⊗Δ)Δ on {}", self.labels[i]))
        });
        rep.record("coassociativity", coassoc);
        let counit = (0..d).find_map(|i| {
            let mut l = SVec::new();
            let mut r = SVec::new();
            for (jk, c) in self.comult[i].iter() {
                let (j, k) = (jk / d, jk % d);
                l.add_term(k, c.mul(&self.counit_basis(j)));
                r.add_term(j, c.mul(&self.counit_basis(k)));
            }
            let e = SVec::basis(i, R::lift(&self.field.one()));
            if l != e || r != e {
                Some(format!(
                    "(ε⊗id)Δ({0}) = {1}, (id⊗ε)Δ({0}) = {2}",
                    self.labels[i],
                    show(&l, &self.labels),
                    show(&r, &self.labels)
                ))
            } else {
                None
            }
        });
        rep.record("counit", counit);
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2(f: &Field) -> (FinAlgebra, FinCoalgebra) {
        let labels = vec!["1".to_string(), "g".to_string()];
        let one = f.one();
        let alg = Algebra::from_fn(f, labels.clone(), SVec::basis(0, one.clone()), |i, j| SVec::basis((i + j) % 2, f.one())).unwrap();
        let co = Coalgebra::new(
            f,
            labels,
            vec![SVec::basis(0, one.clone()), SVec::basis(3, one.clone())],
            SVec::from_terms([(0, one.clone()), (1, one)]),
        )
        .unwrap();
        (alg, co)
    }

    #[test]
    fn group_algebra_c2_passes() {
        let f = Field::prime(5).unwrap();
        let (a, c) = c2(&f);
        assert!(a.verify().passed());
        assert!(c.verify().passed());
        assert!(a.is_commutative());
    }

    #[test]
    fn idempotent_without_unit_fails() {
        let f = Field::rational();
        let labels = vec!["1".to_string(), "g".to_string()];
        // g·g = g, but the "unit" does not act as identity on g
        let alg = Algebra::from_fn(&f, labels, SVec::basis(0, f.one()), |i, j| {
            if i == 1 && j == 1 {
                SVec::basis(1, f.one())
            } else if i == 0 && j == 0 {
                SVec::basis(0, f.one())
            } else {
                SVec::new()
            }
        })
        .unwrap();
        let rep = alg.verify();
        assert!(rep.get("unit").unwrap().witness.is_some());
    }

    #[test]
    fn grouplike_square_counit_failure() {
        let f = Field::rational();
        let labels = vec!["1".to_string(), "x".to_string()];
        let one = f.one();
        // Δ(x) = x⊗x with ε(x) = 0
        let co = Coalgebra::new(&f, labels, vec![SVec::basis(0, one.clone()), SVec::basis(3, one.clone())], SVec::basis(0, one)).unwrap();
        let rep = co.verify();
        assert!(rep.get("coassociativity").unwrap().witness.is_none());
        assert!(rep.get("counit").unwrap().witness.is_some());
    }

    #[test]
    fn tensor_of_c2_is_klein() {
        let f = Field::prime(5).unwrap();
        let (a, c) = c2(&f);
        let aa = a.tensor(&a);
        let cc = c.tensor(&c);
        assert_eq!(aa.dim(), 4);
        assert!(aa.verify().passed());
        assert!(cc.verify().passed());
        // (g⊗1)(1⊗g) = g⊗g
        assert_eq!(aa.mul_basis(2, 1), &SVec::basis(3, f.one()));
    }
}
