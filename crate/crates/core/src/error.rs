use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("exact-only operation `{0}` called on the float backend")]
    ExactOnly(&'static str),
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;

pub(crate) fn parse_err(msg: impl Into<String>) -> CoreError {
    CoreError::Parse(msg.into())
}
