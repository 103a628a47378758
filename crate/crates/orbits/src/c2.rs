//! U-orbits in the two-point space.

use std::fmt;

use tamecm_cmspace::{cm_normal_form, make_pair, MatrixPair};
use tamecm_core::{qi, qr, Matrix, Qi, Scalar};

use crate::error::{OrbitError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum C2Orbit {
    /// `Y` diagonalizable.
    Oreg,
    /// Normalizes to `X(2,1) = ((0,0),(-1,0))`.
    O21,
    /// Normalizes to `X(2,2) = ((0,0),(1,0))`.
    O22,
}

impl C2Orbit {
    pub const ALL: [C2Orbit; 3] = [C2Orbit::Oreg, C2Orbit::O21, C2Orbit::O22];

    pub fn name(self) -> &'static str {
        match self {
            C2Orbit::Oreg => "O_reg",
            C2Orbit::O21 => "O(2,1)",
            C2Orbit::O22 => "O(2,2)",
        }
    }

    /// A representative point of the orbit.
    pub fn representative(self) -> MatrixPair<Qi> {
        let y2 = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        match self {
            C2Orbit::Oreg => cm_normal_form(&[qi(1), qi(2)], &[qi(0), qi(0)]).expect("distinct eigenvalues"),
            C2Orbit::O21 => make_pair(Matrix::from_ints(&[&[0, 0], &[-1, 0]]), y2).expect("rank one"),
            C2Orbit::O22 => make_pair(Matrix::from_ints(&[&[0, 0], &[1, 0]]), y2).expect("rank one"),
        }
    }
}

impl fmt::Display for C2Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Labels a point of the two-point space by its U-orbit.
pub fn classify_c2_orbit(p: &MatrixPair<Qi>) -> Result<C2Orbit> {
    if p.n() != 2 {
        return Err(OrbitError::WrongSize { expected: 2, found: p.n() });
    }
    let y = p.y();
    if !y.char_poly()?.discriminant().is_zero() {
        return Ok(C2Orbit::Oreg);
    }
    let lambda = y.trace() * qr(1, 2);
    let nil = y - &Matrix::scalar(2, lambda);
    // Columns (N u, u) with N u != 0 bring Y to lambda + ((0,1),(0,0)).
    let u = [vec![qi(1), qi(0)], vec![qi(0), qi(1)]]
        .into_iter()
        .find(|u| nil.mul_vec(u).iter().any(|v| !v.is_zero()))
        .ok_or_else(|| OrbitError::InvalidInput("Y is scalar".into()))?;
    let nu = nil.mul_vec(&u);
    let ginv = Matrix::from_fn(2, 2, |i, j| if j == 0 { nu[i].clone() } else { u[i].clone() });
    let g = ginv.inverse().ok_or_else(|| OrbitError::InvalidInput("degenerate normalizer".into()))?;
    let xn = &(&g * p.x()) * &ginv;
    let r = xn[(1, 0)].clone();
    if r == qi(-1) {
        Ok(C2Orbit::O21)
    } else if r == qi(1) {
        Ok(C2Orbit::O22)
    } else {
        Err(OrbitError::InvalidInput(format!("lower-left entry {r} after normalization")))
    }
}
