//! B-orbit types and the move to a torus-fixed point.

use std::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tamecm_adelic::{fixed_point, partitions, Partition};
use tamecm_autgroup::{AutElem, AutWord, Atom, Triangular};
use tamecm_cmspace::{pgl_equivalent, MatrixPair};
use tamecm_core::{qi, Backend, Matrix, MultiPoly, Qi, Scalar, UniPoly, Var};

use crate::error::{OrbitError, Result};
use crate::invariants::{is_nilpotent, signature_residual};
use crate::moves::{CertTag, OrbitMove};
use crate::solver::{solve_system, SolveOutcome};

/// Type of a B-orbit by the image of the stabilizer in the torus.
#[derive(Clone, Debug)]
pub enum BOrbitType {
    /// Type A: the torus acts freely.
    FreeTorus { reason: String },
    /// Type B: `word` moves the point to the fixed point of `partition`.
    TorusFixed { partition: Partition, word: AutWord<Qi>, point: MatrixPair<Qi> },
    /// Type C: the torus part of the stabilizer is cyclic of this order.
    /// `stabilizer` is a checked generator when one was built.
    Cyclic { order: usize, stabilizer: Option<AutWord<Qi>> },
    /// No decision; the torus part has order dividing `order_divides` when known.
    Undetermined { order_divides: Option<usize>, reason: String },
}

impl BOrbitType {
    pub fn label(&self) -> &'static str {
        match self {
            BOrbitType::FreeTorus { .. } => "A",
            BOrbitType::TorusFixed { .. } => "B",
            BOrbitType::Cyclic { .. } => "C",
            BOrbitType::Undetermined { .. } => "undetermined",
        }
    }
}

impl fmt::Display for BOrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BOrbitType::FreeTorus { reason } => write!(f, "type A (free torus action): {reason}"),
            BOrbitType::TorusFixed { partition, word, .. } => {
                write!(f, "type B (torus-fixed {partition}) via {word}")
            }
            BOrbitType::Cyclic { order, stabilizer } => match stabilizer {
                Some(h) => write!(f, "type C (Z_{order}), stabilizer {h}"),
                None => write!(f, "type C (Z_{order})"),
            },
            BOrbitType::Undetermined { order_divides, reason } => match order_divides {
                Some(d) => write!(f, "undetermined (order divides {d}): {reason}"),
                None => write!(f, "undetermined: {reason}"),
            },
        }
    }
}

fn stabilizes<S: Scalar>(p: &MatrixPair<S>, h: &AutWord<S>) -> Result<bool> {
    let moved = p.act(h)?;
    Ok(match S::BACKEND {
        Backend::Exact => pgl_equivalent(&moved, p)?.is_equivalent(),
        Backend::Float => signature_residual(&moved, p, 4) <= 1e-6,
    })
}

fn single_triangular<S: Scalar>(w: &AutWord<S>) -> Option<Triangular<S>> {
    let nf = w.normal_form();
    match nf.factors() {
        [Atom::B(t)] => Some(t.clone()),
        [Atom::A(a)] if a.in_u() => a.to_triangular(),
        _ => None,
    }
}

/// Given `h` in the stabilizer of `p` whose torus part has order `> n`,
/// builds `b = b1 ∘ Ψ_c` (trace normalization, then a triangular correction)
/// so that `act(b, p)` is nilpotent.
pub fn conjugate_to_torus<S: Scalar>(p: &MatrixPair<S>, h: &AutWord<S>) -> Result<OrbitMove<S>> {
    if !stabilizes(p, h)? {
        return Err(OrbitError::NotInStabilizer);
    }
    let n = p.n();
    let b1 = AutWord::from(p.trace_normalizer());
    let p1 = p.act(&b1)?;
    let h1 = h.conjugate_by(&b1.inverse());
    let tri = single_triangular(&h1).ok_or(OrbitError::NotTriangular)?;
    if !tri.h().is_negligible(1.0) {
        return Err(OrbitError::NotTriangular);
    }
    let t = tri.a().clone();
    if (1..=n as u32).any(|j| t.pow(j).is_one()) {
        return Err(OrbitError::SmallOrder(t.to_string()));
    }
    let chi = p1.y().scale(&t).char_poly()?.with_var(Var::Y);
    let reduced = tri.q().rem(&chi).expect("monic characteristic polynomial");
    let coeffs: Vec<S> = (0..n)
        .map(|i| {
            let ti = t.pow(i as u32);
            let denom = ti.clone() * t.clone() - S::one();
            -(reduced.coeff(i) * ti) / denom
        })
        .collect();
    let correction = AutElem::psi(UniPoly::from_coeffs(Var::Y, coeffs));
    let word = b1.compose(&AutWord::from(correction));
    let target = p.act(&word)?;
    let verified = is_nilpotent(target.x()) && is_nilpotent(target.y());
    Ok(OrbitMove { word, source: p.clone(), target, tag: CertTag::TorusConj, verified })
}

/// The partition whose fixed point is PGL-equivalent to `p`.
pub fn identify_fixed_point(p: &MatrixPair<Qi>) -> Result<Option<Partition>> {
    for mu in partitions(p.n()) {
        if pgl_equivalent(p, &fixed_point::<Qi>(&mu)?)?.is_equivalent() {
            return Ok(Some(mu));
        }
    }
    Ok(None)
}

/// Classifies the B-orbit of an exact point (intended for `n <= 4`).
/// `budget` bounds elimination steps and random draws.
pub fn classify_b_orbit(p: &MatrixPair<Qi>, budget: usize) -> Result<BOrbitType> {
    let n = p.n();
    let b1 = AutWord::from(p.trace_normalizer());
    let p1 = p.act(&b1)?;
    let (x1, y1) = (p1.x(), p1.y());
    if is_nilpotent(y1) {
        return classify_nilpotent_y(p, &b1, x1, y1, budget);
    }
    let chi = y1.char_poly()?;
    let d = (1..=n)
        .filter(|&j| !chi.coeff(n - j).is_zero())
        .fold(0, |acc, j| acc.gcd(&j));
    if d == 1 {
        return Ok(BOrbitType::FreeTorus { reason: "characteristic polynomial of Y has coprime support".into() });
    }
    if chi.discriminant().is_zero() {
        return Ok(BOrbitType::Undetermined {
            order_divides: Some(d),
            reason: "Y is not regular semisimple".into(),
        });
    }
    let stabilizer = cyclic_generator(&p1, d, budget)?.map(|h| AutWord::from(h).conjugate_by(&b1));
    Ok(BOrbitType::Cyclic { order: d, stabilizer })
}

fn classify_nilpotent_y(
    p: &MatrixPair<Qi>,
    b1: &AutWord<Qi>,
    x1: &Matrix<Qi>,
    y1: &Matrix<Qi>,
    budget: usize,
) -> Result<BOrbitType> {
    let n = p.n();
    let nvars = n.saturating_sub(1);
    // M = X1 - sum_{i=1}^{n-1} a_i Y1^i with polynomial entries.
    let mut m: Vec<Vec<MultiPoly<Qi>>> =
        (0..n).map(|i| (0..n).map(|j| MultiPoly::constant(nvars, x1[(i, j)].clone())).collect()).collect();
    for i in 1..n {
        let yi = y1.pow(i as u32);
        let var = MultiPoly::var(nvars, i - 1);
        for r in 0..n {
            for c in 0..n {
                if !yi[(r, c)].is_zero() {
                    m[r][c] = &m[r][c] - &var.scale(&yi[(r, c)]);
                }
            }
        }
    }
    let mut power = m.clone();
    let mut eqs = Vec::with_capacity(n);
    for k in 1..=n {
        if k > 1 {
            power = poly_mat_mul(&power, &m);
        }
        eqs.push((0..n).fold(MultiPoly::zero(nvars), |acc, i| &acc + &power[i][i]));
    }
    match solve_system(eqs, nvars, budget.max(4 * n)) {
        SolveOutcome::Solution(vals) => {
            let mut coeffs = vec![qi(0)];
            coeffs.extend(vals);
            let word = b1.compose(&AutWord::from(AutElem::psi(UniPoly::from_coeffs(Var::Y, coeffs))));
            let point = p.act(&word)?;
            match identify_fixed_point(&point)? {
                Some(partition) => Ok(BOrbitType::TorusFixed { partition, word, point }),
                None => Ok(BOrbitType::Undetermined {
                    order_divides: None,
                    reason: "nilpotent image matched no fixed point".into(),
                }),
            }
        }
        SolveOutcome::Inconsistent => {
            // Invariance of tr(X Y^k) forces t^{k-1} = 1 whenever it is nonzero.
            let d = (2..n)
                .filter(|&k| !(x1 * &y1.pow(k as u32)).trace().is_zero())
                .fold(0, |acc, k| acc.gcd(&(k - 1)));
            Ok(match d {
                1 => BOrbitType::FreeTorus { reason: "tr(X Y^2) != 0 and no nilpotent point in the orbit".into() },
                0 => BOrbitType::Undetermined {
                    order_divides: None,
                    reason: "no nilpotent point in the orbit; torus part unresolved".into(),
                },
                d => BOrbitType::Undetermined {
                    order_divides: Some(d),
                    reason: "no nilpotent point in the orbit".into(),
                },
            })
        }
        SolveOutcome::Stuck => Ok(BOrbitType::Undetermined {
            order_divides: None,
            reason: "nilpotency system not resolved by forced steps".into(),
        }),
    }
}

fn poly_mat_mul(a: &[Vec<MultiPoly<Qi>>], b: &[Vec<MultiPoly<Qi>>]) -> Vec<Vec<MultiPoly<Qi>>> {
    let n = a.len();
    let nvars = a[0][0].nvars();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(MultiPoly::zero(nvars), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

/// Primitive `d`-th root of unity in `Q(i)`, when there is one.
fn exact_root_of_unity(d: usize) -> Option<Qi> {
    match d {
        2 => Some(qi(-1)),
        4 => Some(Qi::imag_unit()),
        _ => None,
    }
}

/// `f` with `f(Z) = Proj_{C[Z]}(A)`, the trace-form projection onto
/// polynomials in a regular semisimple `Z`.
fn projection(z: &Matrix<Qi>, a: &Matrix<Qi>) -> Option<Vec<Qi>> {
    let n = z.rows();
    let powers: Vec<Matrix<Qi>> = (0..2 * n).map(|k| z.pow(k as u32)).collect();
    let hankel = Matrix::from_fn(n, n, |j, k| powers[j + k].trace());
    let rhs: Vec<Qi> = (0..n).map(|j| (a * &powers[j]).trace()).collect();
    hankel.solve(&rhs).ok().map(|s| s.particular)
}

/// For traceless `p` with regular semisimple `Y`, builds `(t x + q(y), t^{-1} y)`
/// with `t` a primitive `d`-th root of unity that stabilizes `p`.
fn cyclic_generator(p: &MatrixPair<Qi>, d: usize, budget: usize) -> Result<Option<AutElem<Qi>>> {
    let Some(t) = exact_root_of_unity(d) else { return Ok(None) };
    let (x, y) = (p.x(), p.y());
    let n = p.n();
    let ty = y.scale(&t);
    // Intertwiners g with g Y = t Y g.
    let system = Matrix::from_fn(n * n, n * n, |eq, u| {
        let (a, b) = (u / n, u % n);
        let mut e = Matrix::zeros(n, n);
        e[(a, b)] = qi(1);
        let img = &(&e * y) - &(&ty * &e);
        img[(eq / n, eq % n)].clone()
    });
    let basis: Vec<Matrix<Qi>> = system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_vec(n, n, v).expect("n*n entries"))
        .collect();
    if basis.is_empty() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut candidates = vec![basis.iter().fold(Matrix::zeros(n, n), |acc, b| &acc + b)];
    for _ in 0..budget.max(8) {
        candidates.push(
            basis
                .iter()
                .fold(Matrix::zeros(n, n), |acc, b| &acc + &b.scale(&qi(rng.gen_range(-3..=3)))),
        );
    }
    let Some((g, ginv)) = candidates.into_iter().find_map(|g| g.inverse().map(|inv| (g, inv))) else {
        return Ok(None);
    };
    let conj = &(&g * x) * &ginv;
    let (Some(fa), Some(fb)) = (projection(&ty, x), projection(&ty, &conj)) else {
        return Ok(None);
    };
    let coeffs: Vec<Qi> = fa.into_iter().zip(fb).map(|(a, b)| a - t.clone() * b).collect();
    let h = AutElem::triangular(t, UniPoly::from_coeffs(Var::Y, coeffs), qi(0))?;
    Ok(stabilizes(p, &AutWord::from(h.clone()))?.then_some(h))
}
