//! Comodule algebras, Hopf-Galois extensions, cleft maps and cotensors.

mod algebra;
mod cleft;
mod cotensor;
mod galois;
mod iso;

pub use algebra::{comodule_isomorphism_check, comodule_morphism_check, ComoduleAlgebra, Presentation};
pub use cleft::{colinear_maps, find_cleaving_map, is_unit, CleavingOutcome, EXHAUSTIVE_LIMIT};
pub use cotensor::{cotensor, Cotensor, Subspace};
pub use galois::{
    balanced_tensor, canonical_map, canonical_map_ambient, is_galois, strongly_graded_check, BalancedTensor,
    GaloisVerdict,
};
pub use iso::{iso_search_small, SEARCH_LIMIT};
