//! Partitions, torus-fixed points and the Borel subgroups attached to them.

pub mod borel;
pub mod cofinite;
pub mod error;
pub mod fixed;
pub mod partition;

pub use borel::{
    borel_description, exponents, is_generator, semigroup, verify_stabilizer, BorelDescription, Evidence,
    StabilizerCheck, StabilizerReport,
};
pub use cofinite::CofiniteSet;
pub use error::{AdelicError, Result};
pub use fixed::{fixed_point, is_nilpotent};
pub use partition::{partitions, Hook, Partition};
