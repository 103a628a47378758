use tamecm_autgroup::AutError;
use tamecm_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CmError {
    #[error("not a Calogero-Moser point: rank([X,Y] + I) = {rank}")]
    NotCalogeroMoser { rank: usize },
    #[error("matrices must be square of the same size, got {0}")]
    Shape(String),
    #[error("dimension must be at least 1")]
    EmptyDimension,
    #[error("eigenvalues must be pairwise distinct (position {0} repeats)")]
    RepeatedEigenvalue(usize),
    #[error("{0} values given for {1} eigenvalues")]
    LengthMismatch(usize, usize),
    #[error("scaling parameter must be nonzero")]
    ZeroScale,
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Aut(#[from] AutError),
}

pub type Result<T> = std::result::Result<T, CmError>;
