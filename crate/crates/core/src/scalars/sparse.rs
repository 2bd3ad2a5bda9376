//! Sparse coefficient vectors over a commutative coefficient ring, and a
//! sparse linear solver over a field.

use std::collections::BTreeMap;
use std::fmt::Debug;

use super::field::Scalar;

/// Minimal commutative-ring interface for structure-constant coefficients.
/// Implemented by [`Scalar`] and by polynomials over a field.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Embeds a field element.
    fn lift(s: &Scalar) -> Self;
}

impl Coeff for Scalar {
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Scalar::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn lift(s: &Scalar) -> Self {
        s.clone()
    }
}

/// A vector in a space with a fixed basis, stored as its nonzero coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SVec<R>(BTreeMap<usize, R>);

impl<R> Default for SVec<R> {
    fn default() -> Self {
        Self(BTreeMap::new())
    }
}

impl<R: Coeff> SVec<R> {
    pub fn new() -> Self {
        Self(BTreeMap::new())
    }

    pub fn basis(i: usize, one: R) -> Self {
        let mut v = Self::new();
        v.add_term(i, one);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, R)>) -> Self {
        let mut v = Self::new();
        for (i, c) in terms {
            v.add_term(i, c);
        }
        v
    }

    pub fn from_dense(coords: &[R]) -> Self {
        Self::from_terms(coords.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, dim: usize, zero: &R) -> Vec<R> {
        let mut out = vec![zero.clone(); dim];
        for (i, c) in &self.0 {
            out[*i] = c.clone();
        }
        out
    }

    pub fn add_term(&mut self, i: usize, c: R) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(cur) => {
                let s = cur.add(&c);
                if s.is_zero() {
                    self.0.remove(&i);
                } else {
                    *cur = s;
                }
            }
            None => {
                self.0.insert(i, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SVec<R>, c: &R) {
        if c.is_zero() {
            return;
        }
        for (i, x) in &other.0 {
            self.add_term(*i, x.mul(c));
        }
    }

    pub fn add_vec(&mut self, other: &SVec<R>) {
        for (i, x) in &other.0 {
            self.add_term(*i, x.clone());
        }
    }

    pub fn sum(&self, other: &SVec<R>) -> SVec<R> {
        let mut out = self.clone();
        out.add_vec(other);
        out
    }

    pub fn difference(&self, other: &SVec<R>) -> SVec<R> {
        let mut out = self.clone();
        for (i, x) in &other.0 {
            out.add_term(*i, x.neg());
        }
        out
    }

    pub fn scaled(&self, c: &R) -> SVec<R> {
        let mut out = SVec::new();
        out.add_scaled(self, c);
        out
    }

    pub fn get(&self, i: usize) -> Option<&R> {
        self.0.get(&i)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &R)> + '_ {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    /// Largest index with nonzero coefficient.
    pub fn last_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    pub fn first(&self) -> Option<(usize, &R)> {
        self.0.iter().next().map(|(i, c)| (*i, c))
    }

    /// Applies a coefficient map, dropping terms that become zero.
    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> SVec<S> {
        SVec::from_terms(self.iter().map(|(i, c)| (i, f(c))))
    }

    /// Applies a linear map given by the images of basis vectors.
    pub fn apply(&self, images: &[SVec<R>]) -> SVec<R> {
        let mut out = SVec::new();
        for (i, c) in self.iter() {
            out.add_scaled(&images[i], c);
        }
        out
    }

    /// Tensor product `self ⊗ other` with right factor of dimension `dim_right`.
    pub fn tensor(&self, other: &SVec<R>, dim_right: usize) -> SVec<R> {
        let mut out = SVec::new();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.add_term(i * dim_right + j, a.mul(b));
            }
        }
        out
    }

    /// Dot product with a coefficient functional given densely.
    pub fn pair(&self, functional: &[R], zero: &R) -> R {
        let mut acc = zero.clone();
        for (i, c) in self.iter() {
            acc = acc.add(&c.mul(&functional[i]));
        }
        acc
    }
}

impl<R: Coeff> FromIterator<(usize, R)> for SVec<R> {
    fn from_iter<I: IntoIterator<Item = (usize, R)>>(iter: I) -> Self {
        SVec::from_terms(iter)
    }
}

/// Solves a sparse linear system `rows · x = rhs` over a field.
///
/// Rows are eliminated incrementally against pivot rows keyed by their
/// smallest column. Returns `None` if the system is inconsistent; free
/// variables are set to zero.
pub fn solve_sparse(rows: Vec<(SVec<Scalar>, Scalar)>, ncols: usize) -> Option<Vec<Scalar>> {
    let field = match rows.first() {
        Some((_, r)) => r.field(),
        None => return Some(vec![]),
    };
    let zero = field.zero();
    // pivot column -> (normalized row, rhs)
    let mut pivots: BTreeMap<usize, (SVec<Scalar>, Scalar)> = BTreeMap::new();
    for (mut row, mut rhs) in rows {
        loop {
            let Some((col, lead)) = row.first().map(|(c, v)| (c, v.clone())) else {
                if !rhs.is_zero() {
                    return None;
                }
                break;
            };
            match pivots.get(&col) {
                Some((prow, prhs)) => {
                    let f = lead.neg();
                    row.add_scaled(prow, &f);
                    rhs = rhs.add(&prhs.mul(&f));
                }
                None => {
                    let inv = lead.inv().ok()?;
                    let row = row.scaled(&inv);
                    let rhs = rhs.mul(&inv);
                    pivots.insert(col, (row, rhs));
                    break;
                }
            }
        }
    }
    // back substitution from the largest pivot column down
    let mut x = vec![zero.clone(); ncols];
    for (col, (row, rhs)) in pivots.iter().rev() {
        let mut v = rhs.clone();
        for (j, c) in row.iter() {
            if j != *col {
                v = v.sub(&c.mul(&x[j]));
            }
        }
        x[*col] = v;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    #[test]
    fn sparse_solve_small() {
        let f = Field::prime(7).unwrap();
        let s = |n| f.from_i64(n);
        // x + y = 3, y = 1
        let rows = vec![
            (SVec::from_terms([(0, s(1)), (1, s(1))]), s(3)),
            (SVec::from_terms([(1, s(1))]), s(1)),
        ];
        assert_eq!(solve_sparse(rows, 2).unwrap(), vec![s(2), s(1)]);
        let bad = vec![
            (SVec::from_terms([(0, s(1))]), s(1)),
            (SVec::from_terms([(0, s(2))]), s(1)),
        ];
        assert!(solve_sparse(bad, 1).is_none());
    }

    #[test]
    fn cancellation_drops_terms() {
        let f = Field::rational();
        let mut v = SVec::basis(3, f.one());
        v.add_term(3, f.from_i64(-1));
        assert!(v.is_zero());
    }
}
