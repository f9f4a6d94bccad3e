//! Crate-wide error type.

use crate::Complex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Argument outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at a pole of a gamma-type function.
    #[error("pole at {z}")]
    Pole { z: Complex },

    /// A truncated sum or iteration failed to converge; carries the last two
    /// partial values when available.
    #[error("convergence failure: {what} (last partials: {last:?}, {prev:?})")]
    Convergence {
        what: String,
        last: Option<Complex>,
        prev: Option<Complex>,
    },

    /// Structured-file parse failure, with the JSON-ish path of the offending field.
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    /// Data fails a structural invariant (shape mismatch, missing class, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// Generator data violates the group relations beyond tolerance.
    #[error("structure error: {0}")]
    Structure(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn convergence(what: impl Into<String>, last: Option<Complex>, prev: Option<Complex>) -> Self {
        Error::Convergence {
            what: what.into(),
            last,
            prev,
        }
    }

    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
