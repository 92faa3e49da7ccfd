use alloc::string::String;

/// Errors raised by the algebra kernels and product engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    Divisibility,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("denominator vanishes at 0: the function has no power-series expansion")]
    NotAPowerSeries,
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("no rational function within the given degree bounds matches the coefficients")]
    ReconstructionFailed,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("decomposition unavailable: {0}")]
    DecompositionUnavailable(String),
    #[error("polynomials are not coprime")]
    CoprimalityViolation,
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: &str) -> Error {
    Error::InvalidInput(String::from(msg))
}

pub(crate) fn invariant(msg: &str) -> Error {
    Error::InternalInvariantViolation(String::from(msg))
}
