use thiserror::Error;

use tamecm_autgroup::AutError;
use tamecm_cmspace::CmError;
use tamecm_orbits::OrbitError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("edge {edge} refers to missing vertex {vertex}")]
    MissingVertex { edge: usize, vertex: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("tree edge set: {0}")]
    BadTree(String),
    #[error("graph of groups for n = {0} unsupported: the graphs are no longer trees")]
    Unsupported(usize),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Cm(#[from] CmError),
    #[error(transparent)]
    Aut(#[from] AutError),
}

pub type Result<T> = std::result::Result<T, GraphError>;
