//! Crate-wide error type.

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid scalar `{text}`: {reason}")]
    InvalidScalar { text: String, reason: String },

    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("zero vector where a nonzero vector is required: {context}")]
    ZeroVector { context: String },

    #[error("matrix for `{label}` is not a projector")]
    NotAProjector { label: String },

    #[error("unknown label `{label}`")]
    UnknownLabel { label: String },

    #[error("duplicate label `{label}`")]
    DuplicateLabel { label: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid state spec `{spec}`: {reason}")]
    InvalidStateSpec { spec: String, reason: String },

    #[error("context `{name}` is invalid: {reason}")]
    InvalidContext { name: String, reason: String },

    #[error("operand {value} is outside [0, 1]")]
    OutOfRange { value: String },

    #[error("formula mentions `{label}`, which is not a member of context `{context}`")]
    FormulaScope { label: String, context: String },

    #[error("coloring witness leaves `{label}` unassigned")]
    UnassignedVariable { label: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
