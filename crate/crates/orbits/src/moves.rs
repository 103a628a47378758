//! Single orbit-moving steps: fiber moves, Bezout reductions and the
//! nonsingularity searches.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tamecm_autgroup::{AutElem, AutWord};
use tamecm_cmspace::{basepoint, MatrixPair};
use tamecm_core::{Matrix, Scalar, UniPoly, Var};

use crate::error::{OrbitError, Result};
use crate::invariants::{matrices_close, pairs_close};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertTag {
    Lagrange,
    Euclid,
    Shiota,
    Scaling,
    TorusConj,
}

impl CertTag {
    pub fn name(self) -> &'static str {
        match self {
            CertTag::Lagrange => "lagrange",
            CertTag::Euclid => "euclid",
            CertTag::Shiota => "shiota",
            CertTag::Scaling => "scaling",
            CertTag::TorusConj => "torus-conj",
        }
    }
}

impl fmt::Display for CertTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One audited step: `act(word, source)` should be `target`.
#[derive(Clone, Debug)]
pub struct OrbitMove<S> {
    pub word: AutWord<S>,
    pub source: MatrixPair<S>,
    pub target: MatrixPair<S>,
    pub tag: CertTag,
    pub verified: bool,
}

impl<S: Scalar> OrbitMove<S> {
    /// Applies `word` to `source` and records whether the image is `expected`.
    pub fn checked(word: AutWord<S>, source: &MatrixPair<S>, expected: &MatrixPair<S>, tag: CertTag) -> Result<Self> {
        let target = source.act(&word)?;
        let verified = pairs_close(&target, expected);
        Ok(OrbitMove { word, source: source.clone(), target, tag, verified })
    }
}

fn diagonal_entries<S: Scalar>(m: &Matrix<S>) -> Vec<S> {
    (0..m.rows()).map(|i| m[(i, i)].clone()).collect()
}

fn is_diagonal<S: Scalar>(m: &Matrix<S>) -> bool {
    let scale = m.max_abs();
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_negligible(scale)))
}

/// Moves `p1` to `p2` inside the fiber over a common diagonal `X` with a
/// single `Φ_p`, `p` interpolating the differences of the diagonals of `Y`.
pub fn lagrange_fiber_move<S: Scalar>(p1: &MatrixPair<S>, p2: &MatrixPair<S>) -> Result<OrbitMove<S>> {
    if p1.n() != p2.n() {
        return Err(OrbitError::WrongSize { expected: p1.n(), found: p2.n() });
    }
    if !matrices_close(p1.x(), p2.x()) || !is_diagonal(p1.x()) {
        return Err(OrbitError::NotDiagonalDistinct);
    }
    let lambdas = diagonal_entries(p1.x());
    let diff = p1.y() - p2.y();
    if !is_diagonal(&diff) {
        return Err(OrbitError::DifferentFiber("off-diagonal parts of Y differ".into()));
    }
    let nodes: Vec<(S, S)> = lambdas.into_iter().zip(diagonal_entries(&diff)).collect();
    let p = UniPoly::interpolate(Var::X, &nodes).ok_or(OrbitError::NotDiagonalDistinct)?;
    OrbitMove::checked(AutWord::from(AutElem::phi(p)), p1, p2, CertTag::Lagrange)
}

/// Bezout pair `(f, g)` with `f z^k + g χ_X = 1`.
pub fn euclid_reduction<S: Scalar>(p: &MatrixPair<S>, k: usize) -> Result<(UniPoly<S>, UniPoly<S>)> {
    let chi = p.x().char_poly()?;
    let zk = UniPoly::monomial(Var::Z, S::one(), k);
    let (g, f, h) = zk.xgcd(&chi);
    if g.degree() != Some(0) {
        return Err(OrbitError::Singular(g.to_string()));
    }
    Ok((f, h))
}

/// Checks `sample(X) = (sample f)(X) X^k` (Cayley-Hamilton consequence of the
/// Bezout identity).
pub fn verify_euclid<S: Scalar>(p: &MatrixPair<S>, k: usize, f: &UniPoly<S>, sample: &UniPoly<S>) -> bool {
    let sample = sample.clone().with_var(Var::Z);
    let lhs = sample.eval_matrix(p.x());
    let rhs = &(&sample * f).eval_matrix(p.x()) * &p.x().pow(k as u32);
    matrices_close(&lhs, &rhs)
}

/// Which matrix receives the polynomial shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `Y + q(X)`.
    X,
    /// `X + r(Y)`.
    Y,
}

impl Direction {
    fn var(self) -> Var {
        match self {
            Direction::X => Var::X,
            Direction::Y => Var::Y,
        }
    }
}

/// `Y + q(X)` or `X + r(Y)`.
pub fn shifted<S: Scalar>(p: &MatrixPair<S>, dir: Direction, q: &UniPoly<S>) -> Matrix<S> {
    match dir {
        Direction::X => p.y() + &q.eval_matrix(p.x()),
        Direction::Y => p.x() + &q.eval_matrix(p.y()),
    }
}

/// Nonsingular with squarefree characteristic polynomial.
pub fn shiota_check<S: Scalar>(p: &MatrixPair<S>, dir: Direction, q: &UniPoly<S>) -> bool {
    let m = shifted(p, dir, q);
    let n = m.rows() as i32;
    let scale = m.max_abs().max(1.0);
    let (Ok(det), Ok(chi)) = (m.det(), m.char_poly()) else {
        return false;
    };
    !det.is_negligible(scale.powi(n)) && !chi.discriminant().is_negligible(scale.powi(n * (n - 1)))
}

const SWEEP_VALUES: [(i64, i64); 6] = [(1, 0), (-1, 0), (2, 0), (-2, 0), (0, 1), (0, -1)];

fn gaussian<S: Scalar>(re: i64, im: i64) -> S {
    S::from_i64(re) + S::imag_unit() * S::from_i64(im)
}

/// Deterministic sweep: by degree, leading coefficient from the value list,
/// at most one further nonzero coefficient.
fn sweep<S: Scalar>(var: Var, max_deg: usize) -> impl Iterator<Item = UniPoly<S>> {
    let zero = std::iter::once(UniPoly::zero(var));
    let rest = (0..=max_deg).flat_map(move |d| {
        SWEEP_VALUES.iter().flat_map(move |&(lr, li)| {
            let plain = std::iter::once(None);
            let extra = (0..d).flat_map(|pos| SWEEP_VALUES.iter().map(move |&v| Some((pos, v))));
            plain.chain(extra).map(move |other| {
                let mut coeffs = vec![S::zero(); d + 1];
                coeffs[d] = gaussian(lr, li);
                if let Some((pos, (r, i))) = other {
                    coeffs[pos] = gaussian(r, i);
                }
                UniPoly::from_coeffs(var, coeffs)
            })
        })
    });
    zero.chain(rest)
}

/// Every candidate `shiota_search` would try, in order: the sweep followed by
/// `budget` seeded random draws.
pub fn shiota_candidates<S: Scalar>(
    dir: Direction,
    max_deg: usize,
    budget: usize,
    seed: u64,
) -> impl Iterator<Item = UniPoly<S>> {
    let var = dir.var();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = (0..budget).map(move |_| {
        let d = rng.gen_range(0..=max_deg);
        let coeffs = (0..=d).map(|_| gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect();
        UniPoly::from_coeffs(var, coeffs)
    });
    sweep(var, max_deg).chain(random)
}

/// A polynomial making `Y + q(X)` (or `X + r(Y)`) nonsingular with distinct
/// eigenvalues.
pub fn shiota_search<S: Scalar>(
    p: &MatrixPair<S>,
    dir: Direction,
    max_deg: usize,
    budget: usize,
    seed: u64,
) -> Result<UniPoly<S>> {
    shiota_candidates(dir, max_deg, budget, seed)
        .find(|q| shiota_check(p, dir, q))
        .ok_or_else(|| OrbitError::BudgetExhausted(format!("shiota search, degree <= {max_deg}, {budget} draws")))
}

/// `p(y)` with coefficients only in degrees `k - 1`, `k ∈ set`, such that
/// `X_0(k) + p(Y_0(k))` is invertible for every `k` in the set.
pub fn multi_nonsingular_search<S: Scalar>(set: &[usize]) -> Result<UniPoly<S>> {
    if set.contains(&0) {
        return Err(OrbitError::InvalidInput("sizes must be positive".into()));
    }
    let mut sizes = set.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    let mut p = UniPoly::zero(Var::Y);
    for k in sizes {
        let base = basepoint::<S>(k)?;
        // det is a polynomial of degree <= k in the new coefficient.
        let found = (0..=k as i64 + 1).find_map(|v| {
            let cand = &p + &UniPoly::monomial(Var::Y, S::from_i64(v), k - 1);
            let m = base.x() + &cand.eval_matrix(base.y());
            let det = m.det().ok()?;
            (!det.is_zero()).then_some(cand)
        });
        p = found.ok_or_else(|| OrbitError::BudgetExhausted(format!("no coefficient for size {k}")))?;
    }
    Ok(p)
}

/// Joint check for `multi_nonsingular_search` output.
pub fn multi_nonsingular_check<S: Scalar>(set: &[usize], p: &UniPoly<S>) -> Result<bool> {
    for &k in set {
        let base = basepoint::<S>(k)?;
        let m = base.x() + &p.eval_matrix(base.y());
        if m.det()?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
