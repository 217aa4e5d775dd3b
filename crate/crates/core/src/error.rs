use thiserror::Error;

/// Errors produced by the series, partition and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The constant term is not ±1, so there is no integer reciprocal.
    #[error("series is not a unit: constant term {0} is not 1 or -1")]
    NonUnit(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// `mex_j` was requested for a `j > 0` that is not a part.
    #[error("mex_{j} is undefined: {j} is not a part of the partition")]
    UndefinedMexJ { j: u64 },

    #[error("malformed Frobenius symbol: {0}")]
    MalformedSymbol(String),

    /// An enumeration oracle was asked for a weight above the configured cap.
    #[error("enumeration budget exceeded: n = {n} is above the cap {cap}")]
    BudgetExceeded { n: i64, cap: u64 },

    #[error("unknown identity check: {0}")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
