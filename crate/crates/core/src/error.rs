use thiserror::Error;

/// Errors raised by constructions and verifiers.
///
/// Verification failures that are the *answer* to a question (a failed
/// axiom, a non-bijective canonical map) are carried in reports instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NonPrimeModulus(u64),
    #[error("division by zero")]
    ZeroDivision,
    #[error("no root of unity of order {order} in {field}")]
    NoSuchRoot { order: u64, field: String },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no antipode: {0}")]
    NoAntipode(String),
    #[error("not convolution invertible: {0}")]
    NotConvInvertible(String),
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("element {0} is not central")]
    NotCentral(String),
    #[error("element {0} is not group-like")]
    NotGrouplike(String),
    #[error("canonical map ill defined: {0}")]
    IllDefined(String),
    #[error("not a Hopf algebra map: {0}")]
    NotAHopfMap(String),
    #[error("cocycle not trivial on the subgroup: {0}")]
    NotTrivialOnSubgroup(String),
    #[error("generator roles not registered: {0}")]
    UnregisteredGenerators(String),
    #[error("central group-like test disagrees with the character criterion: {0}")]
    InconsistentWithLemma(String),
    #[error("pairing induction inconsistent: {0}")]
    InductionInconsistent(String),
    #[error("not graded: {0}")]
    NotGraded(String),
    #[error("not commutative: {0}")]
    NotCommutative(String),
    #[error("characteristic mismatch: {0}")]
    CharMismatch(String),
    #[error("canonical map determinant {0} is not a unit of k[t]")]
    NonUnitDeterminant(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
