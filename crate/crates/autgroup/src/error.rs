use tamecm_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AutError {
    #[error("affine part has determinant {0}, expected 1")]
    NotSymplectic(String),
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("expected a triangular element with zero translation, got {0}")]
    NotTriangular(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

pub type Result<T> = std::result::Result<T, AutError>;
