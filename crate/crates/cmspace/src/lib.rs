//! Calogero-Moser matrix pairs, the automorphism action on them and
//! conjugacy of pairs.

pub mod error;
pub mod pair;
pub mod pgl;

pub use error::{CmError, Result};
pub use pair::{basepoint, cm_normal_form, make_pair, rank_one_defect, MatrixPair};
pub use pgl::{pgl_equivalent, pgl_equivalent_seeded, same_point, PglVerdict, PglWitness};
