//! Homotopy witnesses: comodule algebras over `k[t]`, their endpoints, Hopf
//! homotopies of graded Hopf algebras, and homotopies of commutative algebra
//! maps.

mod algebra;
mod hopf_family;
mod witness;

pub use algebra::{char_p_group_homotopy, graded_algebra_homotopy, monomial_algebra, AlgebraHomotopy};
pub use hopf_family::{graded_hopf_homotopy, verify_hopf_homotopy, HopfHomotopyFamily};
pub use witness::{
    constant_witness, eval_endpoint, poly_canonical_matrix, reflect, taft_homotopy_witness, verify_homotopy_witness,
    verify_poly_galois, EndpointMatch, PolyComoduleAlgebra, PolyGaloisVerdict, WitnessVerdict,
};
