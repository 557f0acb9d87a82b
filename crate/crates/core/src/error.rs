//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised when an operation's preconditions are violated.
///
/// Exactness failures (an "exact" integer division leaving a remainder,
/// a count coming out negative) are *not* represented here: those indicate
/// a transcription bug in a formula and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("color count mismatch: expected k = {expected}, got k = {got}")]
    ColorCountMismatch { expected: usize, got: usize },

    #[error("color {color} out of range [1, {k}]")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("parts must be weakly decreasing to form a partition: {0:?}")]
    NotWeaklyDecreasing(Vec<u64>),

    #[error("Fuss-Catalan parameter r must be positive")]
    ZeroRaneyParameter,

    #[error("{0}")]
    InvalidParameter(String),

    #[error("cannot delete a root from an empty forest")]
    EmptyForest,

    #[error("enumeration guard exceeded: |lambda| = {weight} > limit {limit}")]
    SizeGuardExceeded { weight: u64, limit: u64 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
