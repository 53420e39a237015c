//! Error type shared by the fallible public operations.
//!
//! Internal invariant violations (inexact division, non-integer character
//! coefficients, factor products that fail to reconstruct their input) are
//! programming errors and panic instead; see the module docs of the
//! operations that assert them.

use thiserror::Error;

/// Errors surfaced by operations whose preconditions depend on user input.
#[derive(Debug, Error)]
pub enum Error {
    /// Degree outside the domain of the requested quantity, e.g. squarefree
    /// measures at `d < 2`.
    #[error("invalid degree: {0}")]
    InvalidDegree(String),

    /// Two class functions (or a class function and a character table) of
    /// different degrees were combined.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    /// Statistic source text failed to parse; `pos` is a byte offset into
    /// the source.
    #[error("parse error at byte {pos}: {message}")]
    StatParse {
        /// Byte offset of the offending token.
        pos: usize,
        /// What was expected or found.
        message: String,
    },

    /// Unknown builtin statistic name.
    #[error("unknown statistic: {0}")]
    UnknownStatistic(String),

    /// `build_field` was asked for a characteristic that is not prime.
    #[error("{0} is not prime")]
    NotPrime(u32),

    /// A requested computation exceeds the configured desk-scale resource
    /// bounds (field order, enumeration size, or stabilization scan depth).
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
