use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Most variants signal a precondition violation by the caller; `Internal`
/// signals that a construction failed one of its own consistency checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),

    #[error("element is not of weight zero (weight {0})")]
    NotWeightZero(String),

    #[error("element is not a highest-weight vector for the adjoint action")]
    NotHighestWeight,

    #[error("iteration cap of {0} exceeded")]
    IterationCap(usize),

    #[error("state contains a non-negative mode {0}")]
    NonNegativeMode(i32),

    #[error("critical level: k + h^vee = 0")]
    CriticalLevel,

    #[error("level + h^vee must be positive for the admissibility test")]
    NonPositiveShiftedLevel,

    #[error("{0} is not a product of two rational linear forms")]
    NotFactorable(String),

    #[error("polynomial has total degree {0}, expected 2")]
    WrongDegree(usize),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(i32, i32),

    #[error("unsupported degree {0}")]
    UnsupportedDegree(i32),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
