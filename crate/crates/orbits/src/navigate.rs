//! Composite navigation: double transitivity on one point, and the float
//! walk to the regular representative for two points.

use tamecm_autgroup::{Affine, AutElem, AutWord};
use tamecm_cmspace::{cm_normal_form, MatrixPair};
use tamecm_core::{Cf, Matrix, Scalar, UniPoly, Var};

use crate::error::{OrbitError, Result};
use crate::invariants::{pairs_close, signature_residual};
use crate::moves::{shiota_candidates, shiota_check, CertTag, Direction, OrbitMove};

#[derive(Clone, Debug)]
pub struct PairNavigation<S> {
    pub word: AutWord<S>,
    pub images: [MatrixPair<S>; 2],
    pub verified: bool,
}

fn scalar_of<S: Scalar>(m: &Matrix<S>) -> S {
    m[(0, 0)].clone()
}

/// A word sending two distinct points of the one-point space to `(0, 0)` and
/// `(1, 0)`: a translation followed by a unimodular linear map.
pub fn navigate_n1<S: Scalar>(p1: &MatrixPair<S>, p2: &MatrixPair<S>) -> Result<PairNavigation<S>> {
    for p in [p1, p2] {
        if p.n() != 1 {
            return Err(OrbitError::WrongSize { expected: 1, found: p.n() });
        }
    }
    let (x1, y1) = (scalar_of(p1.x()), scalar_of(p1.y()));
    let d1 = scalar_of(p2.x()) - x1.clone();
    let d2 = scalar_of(p2.y()) - y1.clone();
    let linear = if let Some(inv) = d1.inv().filter(|_| !d1.is_zero()) {
        [d1, S::zero(), d2, inv]
    } else if let Some(inv) = d2.inv().filter(|_| !d2.is_zero()) {
        [S::zero(), -inv, d2, S::zero()]
    } else {
        return Err(OrbitError::SamePoint);
    };
    let word = AutWord::new(vec![
        AutElem::Affine(Affine::translation(x1, y1)),
        AutElem::affine(linear, [S::zero(), S::zero()])?,
    ]);
    let images = [p1.act(&word)?, p2.act(&word)?];
    let verified = images[0].x().is_zero()
        && images[0].y().is_zero()
        && scalar_of(images[1].x()).is_one()
        && images[1].y().is_zero();
    Ok(PairNavigation { word, images, verified })
}

/// `(diag(1, 2), ((0, -1), (1, 0)))`.
pub fn regular_representative<S: Scalar>() -> MatrixPair<S> {
    cm_normal_form(&[S::from_i64(1), S::from_i64(2)], &[S::zero(), S::zero()]).expect("distinct eigenvalues")
}

#[derive(Clone, Debug)]
pub struct Navigation {
    pub word: AutWord<Cf>,
    pub point: MatrixPair<Cf>,
    pub residual: f64,
    pub moves: Vec<OrbitMove<Cf>>,
    /// Shiota candidates tried, including the successful one.
    pub attempts: usize,
}

/// Eigenvalues and an eigenvector matrix of a 2x2 matrix with distinct
/// eigenvalues, in the order of the returned values.
fn eigen2(m: &Matrix<Cf>) -> Option<([Cf; 2], Matrix<Cf>)> {
    let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    let tr = a + d;
    let det = a * d - b * c;
    let sq = (tr * tr - Cf::from_i64(4) * det).sqrt();
    let two = Cf::from_i64(2);
    let lams = [(tr + sq) / two, (tr - sq) / two];
    if (lams[0] - lams[1]).abs_f64() < 1e-8 * (1.0 + m.max_abs()) {
        return None;
    }
    let vec_for = |l: Cf| {
        let u = [b, l - a];
        let v = [l - d, c];
        if u[0].abs_f64().hypot(u[1].abs_f64()) >= v[0].abs_f64().hypot(v[1].abs_f64()) {
            u
        } else {
            v
        }
    };
    let (v1, v2) = (vec_for(lams[0]), vec_for(lams[1]));
    let vm = Matrix::from_fn(2, 2, |i, j| if j == 0 { v1[i] } else { v2[i] });
    Some((lams, vm))
}

fn conj_inv(v: &Matrix<Cf>, m: &Matrix<Cf>) -> Option<Matrix<Cf>> {
    Some(&(&v.inverse()? * m) * v)
}

/// Walks a float point of the two-point space to the regular representative:
/// a shiota move makes `Y` regular semisimple, a `Ψ` move puts the spectrum
/// of `X` at `{1, 2}`, and a Lagrange `Φ` move clears the diagonal of `Y`.
pub fn navigate_n2(p: &MatrixPair<Cf>, max_deg: usize, budget: usize, seed: u64, tol: f64) -> Result<Navigation> {
    if p.n() != 2 {
        return Err(OrbitError::WrongSize { expected: 2, found: p.n() });
    }
    let target = regular_representative::<Cf>();
    let mut attempts = 0;
    for q in shiota_candidates::<Cf>(Direction::X, max_deg, budget, seed) {
        if !shiota_check(p, Direction::X, &q) {
            continue;
        }
        attempts += 1;
        if let Some(nav) = try_route(p, &q, &target, tol)? {
            return Ok(Navigation { attempts, ..nav });
        }
    }
    Err(OrbitError::BudgetExhausted(format!("navigation after {attempts} shiota certificates")))
}

fn try_route(p: &MatrixPair<Cf>, q: &UniPoly<Cf>, target: &MatrixPair<Cf>, tol: f64) -> Result<Option<Navigation>> {
    let w1 = AutWord::from(AutElem::phi(q.scale(&Cf::from_i64(-1))));
    let p1 = p.act(&w1)?;
    let m1 = OrbitMove { word: w1.clone(), source: p.clone(), target: p1.clone(), tag: CertTag::Shiota, verified: true };

    let Some((mus, v)) = eigen2(p1.y()) else { return Ok(None) };
    let Some(xh) = conj_inv(&v, p1.x()) else { return Ok(None) };
    let three = Cf::from_i64(3);
    let prod = Cf::from_i64(2) + xh[(0, 1)] * xh[(1, 0)];
    let sq = (three * three - Cf::from_i64(4) * prod).sqrt();
    let s = [(three + sq) / Cf::from_i64(2), (three - sq) / Cf::from_i64(2)];
    let nodes = [(mus[0], xh[(0, 0)] - s[0]), (mus[1], xh[(1, 1)] - s[1])];
    let Some(r) = UniPoly::interpolate(Var::Y, &nodes) else { return Ok(None) };
    let w2 = AutWord::from(AutElem::psi(r));
    let p2 = p1.act(&w2)?;

    let Some((lams, wv)) = eigen2(p2.x()) else { return Ok(None) };
    let spectrum_ok = {
        let mut l = lams;
        l.sort_by(|a, b| a.re().total_cmp(&b.re()));
        (l[0] - Cf::from_i64(1)).abs_f64() < 1e-6 && (l[1] - Cf::from_i64(2)).abs_f64() < 1e-6
    };
    let m2 = OrbitMove { word: w2.clone(), source: p1, target: p2.clone(), tag: CertTag::Shiota, verified: spectrum_ok };
    let Some(yh) = conj_inv(&wv, p2.y()) else { return Ok(None) };
    let Some(pl) = UniPoly::interpolate(Var::X, &[(lams[0], yh[(0, 0)]), (lams[1], yh[(1, 1)])]) else {
        return Ok(None);
    };
    let w3 = AutWord::from(AutElem::phi(pl));
    let p3 = p2.act(&w3)?;
    let residual = signature_residual(&p3, target, 4);
    let m3 = OrbitMove {
        word: w3.clone(),
        source: p2,
        target: p3.clone(),
        tag: CertTag::Lagrange,
        verified: residual <= tol,
    };
    if residual > tol {
        return Ok(None);
    }
    let word = w1.compose(&w2).compose(&w3);
    debug_assert!(pairs_close(&p.act(&word)?, &p3));
    Ok(Some(Navigation { word, point: p3, residual, moves: vec![m1, m2, m3], attempts: 0 }))
}
