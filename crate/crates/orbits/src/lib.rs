//! Orbit-moving steps and orbit classifiers on matrix-pair spaces.

pub mod borbit;
pub mod c2;
pub mod error;
pub mod invariants;
pub mod moves;
pub mod navigate;
pub mod solver;

pub use borbit::{classify_b_orbit, conjugate_to_torus, identify_fixed_point, BOrbitType};
pub use c2::{classify_c2_orbit, C2Orbit};
pub use error::{OrbitError, Result};
pub use invariants::{is_nilpotent, matrices_close, pairs_close, signature_residual, trace_signature};
pub use moves::{
    euclid_reduction, lagrange_fiber_move, multi_nonsingular_check, multi_nonsingular_search, shiota_candidates,
    shiota_check, shiota_search, verify_euclid, CertTag, Direction, OrbitMove,
};
pub use navigate::{navigate_n1, navigate_n2, regular_representative, Navigation, PairNavigation};
pub use solver::{solve_system, SolveOutcome};
