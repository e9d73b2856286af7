use thiserror::Error;

/// Errors produced by the simulation library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rotation order must be at least 1, got {0}")]
    InvalidOrder(usize),

    #[error("slope {a} out of range for n = {n}")]
    InvalidSlope { a: usize, n: usize },

    #[error("irrep label {label} is not valid for n = {n}")]
    InvalidLabel { label: String, n: usize },

    #[error("expected a state in the {expected} basis, got {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("state is not a coset state of H_a: {0}")]
    NotACosetState(String),

    #[error("state is not a DCP sample for a = {a}: {reason}")]
    NotADcpSample { a: usize, reason: String },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("no clone pair with opposite reflection bits among {0} pairs")]
    InsufficientPairs(usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
