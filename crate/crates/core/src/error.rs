use thiserror::Error;

/// Errors raised by the exact algebra and the model constructions built on it.
///
/// Several variants (`DivisionNotExact`, `NotPolynomial`, `RankMismatch`,
/// `HarmonicityLost`, `NegativeMultiplicity`) can only fire when an internal
/// identity fails; callers treat them as verification failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("radial base exponents {left} and {right} differ by a non-integer")]
    BaseMismatch { left: String, right: String },

    #[error("division is not exact: nonzero remainder")]
    DivisionNotExact,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("radial exponent {0} does not resolve to a nonnegative integer")]
    NotPolynomial(String),

    #[error("input is not invariant under the required symmetry group")]
    NotSymmetric,

    #[error("coefficient has a nonzero imaginary part where a real value is required")]
    NotReal,

    #[error("quantum numbers violate the {variant} constraint: {reason}")]
    ConstraintViolation { variant: String, reason: String },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("unsupported coupling {0}: an integer coupling is required")]
    UnsupportedCoupling(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("harmonicity lost: {0}")]
    HarmonicityLost(String),

    #[error("negative multiplicity {mult} for {diagram}")]
    NegativeMultiplicity { diagram: String, mult: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
