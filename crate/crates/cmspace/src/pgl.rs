//! Deciding whether two pairs are conjugate under `GL_n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tamecm_core::{Backend, CoreError, Matrix, Qi, Scalar};

use crate::error::{CmError, Result};
use crate::pair::MatrixPair;

/// Invertible `g` with `g X = X' g` and `g Y = Y' g`.
#[derive(Clone, Debug, PartialEq)]
pub struct PglWitness<S> {
    g: Matrix<S>,
}

impl<S: Scalar> PglWitness<S> {
    pub fn matrix(&self) -> &Matrix<S> {
        &self.g
    }

    /// Re-checks invertibility and both intertwining identities.
    pub fn verify(&self, p: &MatrixPair<S>, q: &MatrixPair<S>) -> bool {
        let g = &self.g;
        !g.det().map(|d| d.is_zero()).unwrap_or(true)
            && g * p.x() == q.x() * g
            && g * p.y() == q.y() * g
    }

    pub fn inverse(&self) -> Option<Self> {
        self.g.inverse().map(|g| PglWitness { g })
    }

    /// Witness for `p ~ r` from witnesses for `p ~ q` (`self`) and `q ~ r`.
    pub fn then(&self, o: &Self) -> Self {
        PglWitness { g: &o.g * &self.g }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PglVerdict<S> {
    Equivalent(PglWitness<S>),
    /// The intertwiner space is zero.
    Inequivalent,
    /// Intertwiners exist but the search found no invertible one.
    ProbablyInequivalent { intertwiner_dim: usize },
}

impl<S> PglVerdict<S> {
    pub fn witness(&self) -> Option<&PglWitness<S>> {
        match self {
            PglVerdict::Equivalent(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_equivalent(&self) -> bool {
        matches!(self, PglVerdict::Equivalent(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            PglVerdict::Equivalent(_) => "equivalent",
            PglVerdict::Inequivalent => "inequivalent",
            PglVerdict::ProbablyInequivalent { .. } => "probabilistic-negative",
        }
    }
}

/// Linear map `g ↦ (g A - A' g, g B - B' g)` on `n x n` matrices, as a
/// `2n^2 x n^2` matrix acting on row-major vectors.
fn intertwiner_system<S: Scalar>(p: &MatrixPair<S>, q: &MatrixPair<S>) -> Matrix<S> {
    let n = p.n();
    let blocks = [(p.x(), q.x()), (p.y(), q.y())];
    Matrix::from_fn(2 * n * n, n * n, |row, col| {
        let (src, dst) = blocks[row / (n * n)];
        let (i, j) = ((row % (n * n)) / n, row % n);
        let (a, b) = (col / n, col % n);
        let mut v = S::zero();
        if a == i {
            v = v + src[(b, j)].clone();
        }
        if b == j {
            v = v - dst[(i, a)].clone();
        }
        v
    })
}

const SMALL_COEFFS: usize = 6;
const EXHAUSTIVE_DIM: usize = 4;
const RANDOM_DRAWS: usize = 32;

fn small_coeff<S: Scalar>(k: usize) -> S {
    match k {
        0 => S::zero(),
        1 => S::one(),
        2 => -S::one(),
        3 => S::imag_unit(),
        4 => -S::imag_unit(),
        _ => S::from_i64(2),
    }
}

fn combine<S: Scalar>(n: usize, basis: &[Vec<S>], coeffs: &[S]) -> Matrix<S> {
    let data = (0..n * n)
        .map(|k| basis.iter().zip(coeffs).fold(S::zero(), |acc, (b, c)| acc + b[k].clone() * c.clone()))
        .collect();
    Matrix::from_vec(n, n, data).expect("n x n entries")
}

fn invertible<S: Scalar>(g: &Matrix<S>) -> bool {
    g.det().map(|d| !d.is_zero()).unwrap_or(false)
}

/// Exact search for an invertible intertwiner. `seed` drives the random
/// draws used once the small-coefficient scan is exhausted.
pub fn pgl_equivalent_seeded<S: Scalar>(p: &MatrixPair<S>, q: &MatrixPair<S>, seed: u64) -> Result<PglVerdict<S>> {
    if S::BACKEND != Backend::Exact {
        return Err(CmError::Core(CoreError::ExactOnly("pgl_equivalent")));
    }
    if p.n() != q.n() {
        return Ok(PglVerdict::Inequivalent);
    }
    let n = p.n();
    let basis = intertwiner_system(p, q).nullspace();
    if basis.is_empty() {
        return Ok(PglVerdict::Inequivalent);
    }
    let found = |g: Matrix<S>| invertible(&g).then(|| PglVerdict::Equivalent(PglWitness { g }));
    for b in &basis {
        let g = Matrix::from_vec(n, n, b.clone()).expect("n x n entries");
        if let Some(v) = found(g) {
            return Ok(v);
        }
    }
    let dim = basis.len();
    if dim <= EXHAUSTIVE_DIM {
        let total = SMALL_COEFFS.pow(dim as u32);
        for code in 1..total {
            let coeffs: Vec<S> = (0..dim).map(|k| small_coeff((code / SMALL_COEFFS.pow(k as u32)) % SMALL_COEFFS)).collect();
            if let Some(v) = found(combine(n, &basis, &coeffs)) {
                return Ok(v);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_DRAWS {
        let coeffs: Vec<S> = (0..dim)
            .map(|_| {
                let re = S::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                let im = S::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                re + im * S::imag_unit()
            })
            .collect();
        if let Some(v) = found(combine(n, &basis, &coeffs)) {
            return Ok(v);
        }
    }
    Ok(PglVerdict::ProbablyInequivalent { intertwiner_dim: dim })
}

pub fn pgl_equivalent<S: Scalar>(p: &MatrixPair<S>, q: &MatrixPair<S>) -> Result<PglVerdict<S>> {
    pgl_equivalent_seeded(p, q, 0)
}

/// Convenience for the exact backend.
pub fn same_point(p: &MatrixPair<Qi>, q: &MatrixPair<Qi>) -> bool {
    pgl_equivalent(p, q).map(|v| v.is_equivalent()).unwrap_or(false)
}
