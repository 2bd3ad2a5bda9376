//! Exact scalars, polynomials over them, and dense exact linear algebra.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod sparse;

pub use field::{cyclotomic_polynomial, Field, FieldSpec, Scalar};
pub use matrix::{Echelon, Matrix, PolyMatrix};
pub use poly::UniPoly;
pub use sparse::{solve_sparse, Coeff, SVec};
