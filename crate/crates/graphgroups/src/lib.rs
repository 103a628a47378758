//! Graphs of groups, their fundamental group presentations, and the
//! graphs for zero, one and two points.

pub mod error;
pub mod gamma;
pub mod graph;

pub use error::{GraphError, Result};
pub use gamma::{build_gamma, certify_gamma2, orbit_label, Gamma2Certificate};
pub use graph::{pi1_presentation, Edge, EdgeId, GraphOfGroups, Presentation, Vertex, VertexId};
