use thiserror::Error;

/// Errors produced by arrangement parsing, validation, and the invariant
/// computations. Parse and Validation errors carry enough context to point
/// at the offending line or field.
#[derive(Debug, Error)]
pub enum ArrError {
    #[error("parse error (line {line}): {msg}")]
    Parse { line: usize, msg: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{0} requires a reduced arrangement (all total multiplicities 1)")]
    NonReduced(&'static str),

    #[error("{0} requires a complete factorization (every factor a single hyperplane counted once)")]
    NotComplete(&'static str),

    #[error("{0} requires an essential arrangement")]
    NotEssential(&'static str),

    #[error("not an edge of this arrangement")]
    NotAnEdge,

    #[error("edge is not dense")]
    NotDense,

    #[error("{0} is undefined for an empty arrangement")]
    EmptyArrangement(&'static str),

    #[error("no linear system solution: {0}")]
    Inconsistent(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, ArrError>;
