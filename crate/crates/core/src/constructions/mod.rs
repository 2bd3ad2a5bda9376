//! Concrete families: group algebras, cohomology, Taft algebras and their
//! Galois objects, Borel halves and small quantum groups, and the char-2
//! Schanuel data.

mod borel;
mod cohomology;
mod groups;
mod schanuel;
mod taft;

pub use borel::{borel_halves, graded_twist, GradedTwist, phi_lambda_pairing, uq_sl2_pipeline, uq_sl2_small, SmallQuantumGroup};
pub use cohomology::{h2_classes, h2_group_cohomology, h2_order_by_enumeration, SecondCohomology};
pub use groups::{group_algebra, twisted_group_algebra, FiniteAbelianGroup, GroupTwoCocycle};
pub use schanuel::{schanuel_matrix, schanuel_suite, unit_certificate, Mat2, Poly2};
pub use taft::{
    check_root, classify_kcn_galois, cyclic_group_algebra, kg_galois_object, taft_galois_object,
    taft_galois_tables, taft_hopf, taft_presentation, Classification, TaftParams,
};
