//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor argument violated its documented range or finiteness
    /// requirement. The string names the offending field.
    #[error("validation failed for `{field}`: {reason}")]
    Validation { field: String, reason: String },

    /// A matrix failed a density-matrix check (Hermiticity, trace, or
    /// positivity) beyond the admitted tolerance.
    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    /// A request exceeded an implementation capacity cap, e.g. exhaustive
    /// sector enumeration above N = 24 bath spins.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A distribution or spectrum became degenerate for the given inputs.
    #[error("degenerate distribution: {0}")]
    Degenerate(String),

    /// Dimension bookkeeping mismatch in oracle partial traces.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// LAPACK returned a nonzero info code.
    #[error("eigensolver failed: dsyevd info = {0}")]
    Lapack(i32),
}

impl Error {
    pub(crate) fn validation(field: &str, reason: impl Into<String>) -> Self {
        Error::Validation { field: field.to_string(), reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
