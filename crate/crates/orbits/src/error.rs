use tamecm_adelic::AdelicError;
use tamecm_autgroup::AutError;
use tamecm_cmspace::CmError;
use tamecm_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OrbitError {
    #[error("fiber move requires diagonal distinct spectrum")]
    NotDiagonalDistinct,
    #[error("points are not in the same fiber: {0}")]
    DifferentFiber(String),
    #[error("det(X) = 0: gcd with z^k is {0}")]
    Singular(String),
    #[error("no certificate found within budget ({0})")]
    BudgetExhausted(String),
    #[error("expected n = {expected}, got {found}")]
    WrongSize { expected: usize, found: usize },
    #[error("element does not stabilize the point")]
    NotInStabilizer,
    #[error("stabilizer is not a single triangular element after trace normalization")]
    NotTriangular,
    #[error("torus parameter {0} has order <= n")]
    SmallOrder(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("the two points coincide")]
    SamePoint,
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Cm(#[from] CmError),
    #[error(transparent)]
    Adelic(#[from] AdelicError),
}

pub type Result<T> = std::result::Result<T, OrbitError>;
