//! Dense exact matrices: Gaussian elimination over a field and
//! fraction-free (Bareiss) elimination over `k[t]`.

use std::fmt;

use super::field::{Field, Scalar};
use super::poly::UniPoly;
use crate::error::{Error, Result};

/// A dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Self { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|r| r.iter().map(|x| field.from_i64(*x)).collect()).collect();
        Self::from_rows(field, data).expect("rectangular literal")
    }

    /// Builds a matrix whose column `j` is the given sparse vector.
    pub fn from_columns(field: &Field, rows: usize, cols: &[super::SVec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.iter() {
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::ShapeMismatch("sub".into()));
        }
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let d = m[(r, j)].mul(&f);
                    m[(i, j)] = m[(i, j)].sub(&d);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { rref: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Canonical kernel basis read off the reduced echelon form: one vector
    /// per free column, with a 1 in that column and 0 in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &p) in ech.pivots.iter().enumerate() {
                    v[p] = ech.rref[(r, f)].neg();
                }
                v
            })
            .collect()
    }

    /// One solution of `self · x = rhs` for each column of `rhs`.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(Error::ShapeMismatch("solve: row counts differ".into()));
        }
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                aug[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(&self.field, self.cols, rhs.cols);
        for (r, &p) in ech.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = ech.rref[(r, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        if self.rank() < self.rows {
            return Err(Error::SingularMatrix);
        }
        let id = Matrix::identity(&self.field, self.rows);
        self.solve(&id)?.ok_or(Error::SingularMatrix)
    }

    /// Determinant by elimination.
    pub fn determinant(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.neg();
            }
            let piv = m[(c, c)].clone();
            det = det.mul(&piv);
            let inv = piv.inv()?;
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].mul(&inv);
                for j in c..m.cols {
                    let d = m[(c, j)].mul(&f);
                    m[(i, j)] = m[(i, j)].sub(&d);
                }
            }
        }
        Ok(det)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A dense matrix with entries in `k[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<UniPoly>,
}

impl PolyMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![UniPoly::zero(field); rows * cols] }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<UniPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Self { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Evaluates every entry at `t = x`.
    pub fn eval(&self, x: &Scalar) -> Matrix {
        let data = self.data.iter().map(|p| p.eval(x)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != o.rows {
            return Err(Error::ShapeMismatch("poly matrix product".into()));
        }
        let mut out = PolyMatrix::zeros(&self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.coeffs().is_empty() {
                    continue;
                }
                for j in 0..o.cols {
                    let prod = a.mul(&o[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&prod);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Fraction-free Bareiss elimination. Returns the rank over `k(t)` and,
    /// for square matrices, the determinant.
    fn bareiss(&self) -> (usize, Option<UniPoly>) {
        let mut m = self.clone();
        let one = UniPoly::constant(self.field.one());
        let mut prev = one.clone();
        let mut sign_neg = false;
        let mut r = 0;
        let mut full = true;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // pivot of lowest degree keeps intermediate entries small
            let p = (r..m.rows)
                .filter(|&i| !m[(i, c)].coeffs().is_empty())
                .min_by_key(|&i| m[(i, c)].degree().unwrap());
            let Some(p) = p else {
                full = false;
                continue;
            };
            if p != r {
                m.swap_rows(p, r);
                sign_neg = !sign_neg;
            }
            let piv = m[(r, c)].clone();
            for i in r + 1..m.rows {
                let lead = m[(i, c)].clone();
                for j in c + 1..m.cols {
                    let v = piv.mul(&m[(i, j)]).sub(&lead.mul(&m[(r, j)]));
                    m[(i, j)] = v.exact_div(&prev).expect("Bareiss division is exact");
                }
                m[(i, c)] = UniPoly::zero(&self.field);
            }
            prev = piv;
            r += 1;
        }
        let det = if self.rows == self.cols {
            if full && r == self.rows {
                let mut d = if self.rows == 0 { one } else { m[(self.rows - 1, self.cols - 1)].clone() };
                if sign_neg {
                    d = d.neg();
                }
                Some(d)
            } else {
                Some(UniPoly::zero(&self.field))
            }
        } else {
            None
        };
        (r, det)
    }

    /// Rank over the fraction field `k(t)`.
    pub fn rank(&self) -> usize {
        self.bareiss().0
    }

    pub fn determinant(&self) -> Result<UniPoly> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        Ok(self.bareiss().1.unwrap())
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = UniPoly;
    fn index(&self, (i, j): (usize, usize)) -> &UniPoly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut UniPoly {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_rank() {
        let f = Field::rational();
        assert_eq!(Matrix::identity(&f, 2).rank(), 2);
    }

    #[test]
    fn kernel_over_f2() {
        let f = Field::prime(2).unwrap();
        let m = Matrix::from_i64(&f, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![f.one(), f.one()]]);
    }

    #[test]
    fn singular_inverse() {
        let f = Field::prime(7).unwrap();
        let m = Matrix::from_i64(&f, &[&[1, 2], &[2, 4]]);
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix)));
        assert!(matches!(Matrix::zeros(&f, 2, 3).inverse(), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn poly_determinant_diagonal() {
        let f = Field::prime(7).unwrap();
        let t = UniPoly::t(&f);
        let one = UniPoly::constant(f.one());
        let z = UniPoly::zero(&f);
        let m = PolyMatrix::from_rows(&f, vec![vec![t.clone(), z.clone()], vec![z, one]]).unwrap();
        assert_eq!(m.determinant().unwrap(), t);
    }

    #[test]
    fn bareiss_matches_pointwise_determinant() {
        let f = Field::rational();
        let p = |s: &str| UniPoly::parse(&f, s, 't').unwrap();
        let m = PolyMatrix::from_rows(
            &f,
            vec![
                vec![p("0"), p("1+t"), p("2")],
                vec![p("t"), p("t^2"), p("1")],
                vec![p("3"), p("1"), p("t-1")],
            ],
        )
        .unwrap();
        let det = m.determinant().unwrap();
        for x in -3..4 {
            let xs = f.from_i64(x);
            assert_eq!(det.eval(&xs), m.eval(&xs).determinant().unwrap());
        }
    }

    fn arb_matrix(n: usize, m: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0i64..5, n * m).prop_map(move |v| {
            let f = Field::prime(5).unwrap();
            let rows: Vec<Vec<Scalar>> = v.chunks(m).map(|r| r.iter().map(|x| f.from_i64(*x)).collect()).collect();
            Matrix::from_rows(&f, rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix(4, 6)) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
            for k in m.kernel_basis() {
                let col = Matrix::from_rows(m.field(), k.into_iter().map(|x| vec![x]).collect()).unwrap();
                prop_assert!(m.mul(&col).unwrap().is_zero());
            }
        }

        #[test]
        fn inverse_is_two_sided(m in arb_matrix(3, 3)) {
            if let Ok(inv) = m.inverse() {
                let id = Matrix::identity(m.field(), 3);
                prop_assert_eq!(m.mul(&inv).unwrap(), id.clone());
                prop_assert_eq!(inv.mul(&m).unwrap(), id);
            } else {
                prop_assert!(m.rank() < 3);
            }
        }
    }
}
