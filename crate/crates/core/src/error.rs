use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid exponent {0}: p must be a finite number >= 1 or infinity")]
    InvalidExponent(String),

    #[error("exponent p = {p} outside the supported range {range}")]
    ExponentOutOfRange { p: String, range: &'static str },

    #[error("{what} must be finite")]
    NonFinite { what: &'static str },

    #[error("{what} must be nonnegative")]
    Negative { what: &'static str },

    #[error("circulant first row must have at least one entry")]
    EmptyRow,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {n} exceeds the limit of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("Gram parameters are not positive semidefinite: {0}")]
    NotPsd(String),

    #[error("no closed form applies: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
