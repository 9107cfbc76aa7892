use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid part: {0}")]
    InvalidPart(String),

    #[error("part {value} occurs {available} times, cannot delete {requested}")]
    InsufficientMultiplicity {
        value: u64,
        available: u64,
        requested: u64,
    },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("partition is not sequentially congruent (first violation at index {index})")]
    NotSequentiallyCongruent { index: u64 },

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("extent exceeded: {0}")]
    ExtentExceeded(String),

    #[error("sequence terms are not distinct: {0}")]
    NonDistinct(String),

    #[error("part {0} does not occur in A within its extent")]
    PartNotInA(u64),

    #[error("partition is not a member of P_B(A): {0}")]
    NotMemberPba(String),

    #[error("resource bound of {0} items exceeded")]
    ResourceBound(u64),

    #[error("exponent must be positive: {0}")]
    InvalidExponent(String),

    #[error("truncation bounds differ: {0}")]
    BoundsMismatch(String),

    #[error("divergent parameters: {0}")]
    DivergentParameters(String),

    #[error("out of contract: {0}")]
    OutOfContract(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
