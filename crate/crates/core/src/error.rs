use thiserror::Error;

/// Errors raised by presentation construction, arithmetic and the analysis layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (exponents are stored as u16)")]
    PrimeTooLarge(u64),
    #[error("generator count {0} is out of range (2..={max})", max = crate::MAX_GENERATORS)]
    GeneratorCount(usize),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("invalid relation table: {0}")]
    InvalidTable(String),
    #[error("dimension mismatch: expected {expected} generators, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("exponent {value} at position {index} is not reduced mod {p}")]
    Unreduced { index: usize, value: u64, p: u32 },
    #[error("apply_f is undefined: exponent of the last generator is {0}, not 0")]
    ShiftDomain(u16),
    #[error("capacity exceeded: {what} needs {needed} elements, limit is {limit}")]
    Capacity {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
