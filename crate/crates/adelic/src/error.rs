use tamecm_cmspace::CmError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AdelicError {
    #[error("invalid partition {0}")]
    InvalidPartition(String),
    #[error("no off-diagonal block between hooks of sizes {row_hook} and {col_hook}")]
    FixedPointConstruction { row_hook: usize, col_hook: usize },
    #[error(transparent)]
    Cm(#[from] CmError),
}

pub type Result<T> = std::result::Result<T, AdelicError>;
