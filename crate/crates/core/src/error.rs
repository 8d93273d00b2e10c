use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected} variables, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range 1..={r}")]
    VariableOutOfRange { index: usize, r: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("enumeration budget exceeded: {needed} lattice points requested, budget is {budget}")]
    Budget { needed: u128, budget: u64 },

    #[error("every generator is a pure power of a variable (no generator has two nonzero exponents); use the pure-power fast path")]
    PurePower,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
