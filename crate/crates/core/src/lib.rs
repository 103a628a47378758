//! Scalars, polynomials (commutative and free) and small dense matrices.

pub mod error;
pub mod matrix;
pub mod multipoly;
pub mod ncpoly;
pub mod scalar;
pub mod unipoly;

pub use error::{CoreError, Result};
pub use matrix::{Matrix, SolutionSpace};
pub use multipoly::MultiPoly;
pub use ncpoly::{Letter, NcPoly, Word};
pub use scalar::{qi, qi_c, qr, Backend, Cf, Qi, Scalar};
pub use unipoly::{UniPoly, Var};
