//! The group of symplectic plane automorphisms as an amalgam of its affine
//! and triangular subgroups.

pub mod elem;
pub mod error;
pub mod special;
pub mod word;

pub use elem::{Affine, AutElem, NonZero, Triangular};
pub use error::{AutError, Result};
pub use special::{alpha_poly, beta_expression, beta_poly, iterate_triangular, q_i_poly, special_sigma, special_tau};
pub use word::{classify_dynamics, is_symplectic, pair_degree, psi_monomial, Atom, AutWord, Dynamics, NormalForm};
