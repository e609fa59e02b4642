//! Unified error type for the toolkit.

use thiserror::Error;

/// All fallible operations in this crate return this error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A value lies outside the mathematical domain of an operation
    /// (e.g. inverting zero in a field).
    #[error("domain error: {0}")]
    Domain(String),

    /// A structural parameter is invalid (bad field degree, reducible
    /// polynomial, in-admissible twist exponent, invalid epsilon, ...).
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An operation was invoked on an object that does not support it
    /// (e.g. asking for a Singer automorphism of a matrix group).
    #[error("unsupported usage: {0}")]
    Usage(String),

    /// A computation would exceed the configured resource guards
    /// (group order caps, lattice size caps).
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// A group/field expression could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Construction of a group object failed a consistency guard
    /// (closure blow-up, wrong expected order, membership violation).
    #[error("construction error: {0}")]
    Construction(String),

    /// An internal invariant was violated; indicates a bug in this crate.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
