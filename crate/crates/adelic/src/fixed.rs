//! Torus-fixed points of the Calogero-Moser space.

use tamecm_cmspace::{make_pair, MatrixPair};
use tamecm_core::{Matrix, Scalar};

use crate::error::{AdelicError, Result};
use crate::partition::{Hook, Partition};

/// Subdiagonal `(1, 2, ..., r-1, -(n-r), ..., -2, -1)` of a one-hook block.
fn hook_subdiagonal(h: Hook) -> Vec<i64> {
    let (n, r) = (h.size as i64, h.corner as i64);
    (1..r).chain(-(n - r)..0).collect()
}

fn jordan<S: Scalar>(n: usize) -> Matrix<S> {
    Matrix::from_fn(n, n, |i, j| if j == i + 1 { S::one() } else { S::zero() })
}

/// Solves `Z J_c - J_r Z = sign * c_size * E_{corner_r, corner_c}` with `Z`
/// supported on the diagonal `col - row = corner_c - corner_r - 1`; free
/// entries are 0. The right side is the off-diagonal part of `v w^T` with
/// `v_i = ±e_{corner}` and `w_i = ±size * e_{corner}` on block `i`.
fn off_diagonal_block<S: Scalar>(row: Hook, col: Hook, sign: i64) -> Result<Matrix<S>> {
    let (m, k) = (row.size, col.size);
    let offset = col.corner as i64 - row.corner as i64 - 1;
    let unknowns: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (0..k).map(move |b| (a, b)))
        .filter(|&(a, b)| b as i64 - a as i64 == offset)
        .collect();
    let jr = jordan::<S>(m);
    let jc = jordan::<S>(k);
    // Column u of the system is the image of the u-th unknown unit matrix.
    let images: Vec<Matrix<S>> = unknowns
        .iter()
        .map(|&(a, b)| {
            let mut e = Matrix::zeros(m, k);
            e[(a, b)] = S::one();
            &(&e * &jc) - &(&jr * &e)
        })
        .collect();
    let system = Matrix::from_fn(m * k, unknowns.len(), |eq, u| images[u][(eq / k, eq % k)].clone());
    let mut rhs = vec![S::zero(); m * k];
    rhs[(row.corner - 1) * k + (col.corner - 1)] = S::from_i64(sign * k as i64);
    let sol = system.solve(&rhs).map_err(|_| AdelicError::FixedPointConstruction {
        row_hook: row.size,
        col_hook: col.size,
    })?;
    let mut z = Matrix::zeros(m, k);
    for (&(a, b), v) in unknowns.iter().zip(sol.particular) {
        z[(a, b)] = v;
    }
    Ok(z)
}

/// The fixed point `(X_μ, Y_μ)`: block diagonal over the diagonal hooks, `Y`
/// a sum of Jordan blocks.
pub fn fixed_point<S: Scalar>(mu: &Partition) -> Result<MatrixPair<S>> {
    let hooks = mu.hooks();
    let n = mu.n();
    let offsets: Vec<usize> = hooks
        .iter()
        .scan(0, |acc, h| {
            let o = *acc;
            *acc += h.size;
            Some(o)
        })
        .collect();
    let mut x = Matrix::zeros(n, n);
    let mut y = Matrix::zeros(n, n);
    for (bi, (&hi, &oi)) in hooks.iter().zip(&offsets).enumerate() {
        for (j, a) in hook_subdiagonal(hi).into_iter().enumerate() {
            x[(oi + j + 1, oi + j)] = S::from_i64(a);
        }
        for j in 0..hi.size.saturating_sub(1) {
            y[(oi + j, oi + j + 1)] = S::one();
        }
        for (bj, (&hj, &oj)) in hooks.iter().zip(&offsets).enumerate() {
            if bi == bj {
                continue;
            }
            // Alternating block signs reproduce the listed (2,2) matrices.
            let sign = if (bi + bj) % 2 == 0 { 1 } else { -1 };
            let z = off_diagonal_block::<S>(hi, hj, sign)?;
            for a in 0..hi.size {
                for b in 0..hj.size {
                    x[(oi + a, oj + b)] = z[(a, b)].clone();
                }
            }
        }
    }
    Ok(make_pair(x, y)?)
}

/// `M^n = 0`.
pub fn is_nilpotent<S: Scalar>(m: &Matrix<S>) -> bool {
    m.pow(m.rows() as u32).is_zero()
}
