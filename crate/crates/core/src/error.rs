//! Crate-wide error type.
//!
//! Operations distinguish *domain* errors (an argument outside the range a
//! formula is defined for), *data* errors (a manifold record missing fields or
//! carrying values that contradict an identity they must satisfy), and
//! *parse* errors (malformed input files).  Internal invariant violations are
//! reported as [`Error::Inconsistent`] rather than panics, so callers can
//! surface them.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an operation's arguments was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// Series inversion requires a nonzero constant term.
    #[error("series is not invertible: constant term is zero")]
    NonInvertibleSeries,

    /// Characteristic series of a multiplicative sequence must have constant
    /// term 1.
    #[error("characteristic series must have constant term 1")]
    CharacteristicSeries,

    /// A graded polynomial was paired against characteristic numbers of
    /// strictly smaller total weight.
    #[error("weight mismatch: polynomial term of weight {poly} cannot pair against numbers of weight {numbers}")]
    WeightMismatch { poly: u32, numbers: u32 },

    /// Data required by the operation is absent from the record.
    #[error("missing data: {0}")]
    MissingData(String),

    /// Stored invariants contradict an identity they are required to satisfy.
    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),

    /// Signature is only defined for symmetric matrices.
    #[error("matrix is not symmetric")]
    NotSymmetric,

    /// Two manifolds (or a manifold and an obstruction class) of different
    /// dimensions were combined.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    /// A plumbing graph failed validation.
    #[error("invalid plumbing graph: {0}")]
    InvalidGraph(String),

    /// Malformed input text.  JSON syntax errors keep line/column info.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn missing(msg: impl Into<String>) -> Self {
        Error::MissingData(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }

    pub(crate) fn graph(msg: impl Into<String>) -> Self {
        Error::InvalidGraph(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
