use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition at index {index}: {reason}")]
    InvalidPartition { index: usize, reason: String },

    #[error("cell ({row}, {col}) is outside the diagram")]
    CellOutside { row: usize, col: usize },

    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(String),

    #[error("invalid diagonal hook sequence: {0}")]
    InvalidDiagonalHooks(String),

    #[error("({i}, {j}) is not a valid index pair for this word")]
    InvalidIndexPair { i: i64, j: i64 },

    #[error("boundary word is not canonical: {0}")]
    NonCanonicalWord(String),

    #[error("core component {core} is not a {t}-core")]
    NotCore { core: String, t: usize },

    #[error("hook length {hook} is not divisible by {t}")]
    HookNotDivisible { hook: usize, t: usize },

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("series error: {0}")]
    Series(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
