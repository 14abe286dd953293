use thiserror::Error;

/// Errors raised by constructors, parsers, and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part at index {index} is zero")]
    ZeroPart { index: usize },

    #[error("parts are not non-increasing at index {index} ({prev} then {next})")]
    NotNonIncreasing { index: usize, prev: u32, next: u32 },

    #[error("red part must precede green part of equal value {value} at index {index}")]
    TieOrder { index: usize, value: u32 },

    #[error("weight overflows 64 bits")]
    Overflow,

    #[error("triple part {part} exceeds Durfee side {d}")]
    PartExceedsDurfee { part: u32, d: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    /// An input does not belong to the domain of an operation. The message
    /// names the violated rule.
    #[error("domain violation: {0}")]
    Domain(String),

    #[error(transparent)]
    Series(#[from] crate::qseries::SeriesError),
}

pub type Result<T> = std::result::Result<T, Error>;
