//! Finite-dimensional algebras, coalgebras and Hopf algebras given by
//! structure constants, with exhaustive axiom checks.

pub mod convolution;
pub mod grouplike;
pub mod hopf_algebra;
pub mod ops;
pub mod structure;

pub use convolution::{conv_inverse, convolution, unit_counit, LinMap};
pub use grouplike::{generate_group, grouplikes, grouplikes_exhaustive, is_central, is_grouplike, Grouplikes};
pub use hopf_algebra::{compute_antipode, verify_bialgebra, HopfAlgebra};
pub use ops::{quotient_by_central_grouplikes, tensor_hopf, verify_hopf_map, CentralQuotient};
pub use structure::{show, show2, tensor_labels, Algebra, Coalgebra, FinAlgebra, FinCoalgebra, Vector};
