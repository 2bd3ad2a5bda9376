//! Linear maps between based spaces and the convolution product.

use std::collections::BTreeMap;

use super::structure::{FinAlgebra, FinCoalgebra};
use crate::error::{Error, Result};
use crate::scalars::{solve_sparse, Coeff, Field, Matrix, SVec, Scalar};

/// A linear map given by the images of the source basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap<R = Scalar> {
    pub src: usize,
    pub tgt: usize,
    pub images: Vec<SVec<R>>,
}

impl<R: Coeff> LinMap<R> {
    pub fn new(src: usize, tgt: usize, images: Vec<SVec<R>>) -> Result<Self> {
        if images.len() != src || images.iter().any(|v| v.last_index().is_some_and(|k| k >= tgt)) {
            return Err(Error::ShapeMismatch(format!("linear map {src} -> {tgt}")));
        }
        Ok(Self { src, tgt, images })
    }

    pub fn identity(n: usize, one: R) -> Self {
        Self { src: n, tgt: n, images: (0..n).map(|i| SVec::basis(i, one.clone())).collect() }
    }

    pub fn zero(src: usize, tgt: usize) -> Self {
        Self { src, tgt, images: vec![SVec::new(); src] }
    }

    pub fn apply(&self, v: &SVec<R>) -> SVec<R> {
        v.apply(&self.images)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap<R>) -> LinMap<R> {
        LinMap { src: other.src, tgt: self.tgt, images: other.images.iter().map(|v| self.apply(v)).collect() }
    }

    pub fn image(&self, i: usize) -> &SVec<R> {
        &self.images[i]
    }

    /// `self ⊗ other` on tensor products.
    pub fn tensor(&self, other: &LinMap<R>) -> LinMap<R> {
        let mut images = Vec::with_capacity(self.src * other.src);
        for a in &self.images {
            for b in &other.images {
                images.push(a.tensor(b, other.tgt));
            }
        }
        LinMap { src: self.src * other.src, tgt: self.tgt * other.tgt, images }
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> LinMap<S> {
        LinMap { src: self.src, tgt: self.tgt, images: self.images.iter().map(|v| v.map_coeffs(&f)).collect() }
    }
}

impl LinMap<Scalar> {
    /// Matrix with column `j` the image of `e_j`.
    pub fn to_matrix(&self, field: &Field) -> Matrix {
        Matrix::from_columns(field, self.tgt, &self.images)
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        let images = (0..m.cols()).map(|j| SVec::from_dense(&m.column(j))).collect();
        Self { src: m.cols(), tgt: m.rows(), images }
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.to_matrix(field).rank()
    }
}

/// `u∘ε`, the unit of the convolution algebra `Hom(C, A)`.
pub fn unit_counit(c: &FinCoalgebra, a: &FinAlgebra) -> LinMap {
    let images = (0..c.dim()).map(|i| a.unit().scaled(&c.counit_basis(i))).collect();
    LinMap { src: c.dim(), tgt: a.dim(), images }
}

/// `(f * g)(x) = f(x₁) g(x₂)`.
pub fn convolution(c: &FinCoalgebra, a: &FinAlgebra, f: &LinMap, g: &LinMap) -> LinMap {
    let images = (0..c.dim())
        .map(|i| {
            let mut out = SVec::new();
            for (j, k, coef) in c.terms(i) {
                out.add_scaled(&a.mul(f.image(j), g.image(k)), &coef);
            }
            out
        })
        .collect();
    LinMap { src: c.dim(), tgt: a.dim(), images }
}

/// Solves `f * f' = u∘ε` and certifies `f' * f = u∘ε`.
pub fn conv_inverse(c: &FinCoalgebra, a: &FinAlgebra, f: &LinMap) -> Result<LinMap> {
    let (dc, da) = (c.dim(), a.dim());
    let field = a.field();
    // f(e_j)·e_k for all j, k
    let fe: Vec<Vec<SVec<Scalar>>> =
        f.images.iter().map(|v| (0..da).map(|k| a.mul(v, &a.basis(k))).collect()).collect();
    let mut rows = Vec::new();
    for i in 0..dc {
        let mut by_coord: BTreeMap<usize, SVec<Scalar>> = BTreeMap::new();
        for (j, l, coef) in c.terms(i) {
            for (k, prod) in fe[j].iter().enumerate() {
                for (m, val) in prod.iter() {
                    by_coord.entry(m).or_default().add_term(l * da + k, coef.mul(val));
                }
            }
        }
        let eps = c.counit_basis(i);
        for m in 0..da {
            let rhs = a.unit().get(m).map_or_else(|| field.zero(), |u| u.mul(&eps));
            let row = by_coord.remove(&m).unwrap_or_default();
            if row.is_zero() && rhs.is_zero() {
                continue;
            }
            rows.push((row, rhs));
        }
    }
    let sol = solve_sparse(rows, dc * da).ok_or_else(|| Error::NotConvInvertible("no right inverse".into()))?;
    let images = (0..dc).map(|l| SVec::from_dense(&sol[l * da..(l + 1) * da])).collect();
    let g = LinMap { src: dc, tgt: da, images };
    let e = unit_counit(c, a);
    if convolution(c, a, f, &g) != e || convolution(c, a, &g, f) != e {
        return Err(Error::NotConvInvertible("one-sided inverse only".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::structure::{Algebra, Coalgebra};

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
    fn inverse_of_identity_is_antipode() {
        let f = Field::prime(7).unwrap();
        let (a, c) = c2(&f);
        let id = LinMap::identity(2, f.one());
        let s = conv_inverse(&c, &a, &id).unwrap();
        assert_eq!(s, id);
        assert_eq!(conv_inverse(&c, &a, &s).unwrap(), id);
    }

    #[test]
    fn unit_counit_is_self_inverse() {
        let f = Field::rational();
        let (a, c) = c2(&f);
        let e = unit_counit(&c, &a);
        assert_eq!(conv_inverse(&c, &a, &e).unwrap(), e);
    }

    #[test]
    fn zero_map_not_invertible() {
        let f = Field::rational();
        let (a, c) = c2(&f);
        assert!(matches!(conv_inverse(&c, &a, &LinMap::zero(2, 2)), Err(Error::NotConvInvertible(_))));
    }
}
