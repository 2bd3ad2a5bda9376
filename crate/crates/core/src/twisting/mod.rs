//! Hopf 2-cocycles, twists, skew-pairings and the generalized quantum double.

mod center;
mod datum;
mod forms;
mod pairing;

pub use center::{
    central_grouplike_test, linking_relation_check, quotient_cocycle, quotient_linking_check, verify_quotient_twist,
    QuotientCocycle,
};
pub use datum::{conjugation_character, BorelDatum, GeneratorRole};
pub use forms::{cocycle_conv_inverse, twist_comodule, twist_hopf, verify_cocycle, BilinearForm, HopfTwoCocycle};
pub use pairing::{double_cocycle, double_product_direct, pairing_inverse, quantum_double, verify_skew_pairing, SkewPairing};
