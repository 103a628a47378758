//! The three-factor words fixing basepoints, their polynomials, and powers of
//! triangular maps.

use tamecm_core::{Scalar, UniPoly, Var};

use crate::elem::{AutElem, Triangular};
use crate::error::{AutError, Result};
use crate::word::AutWord;

fn factorial(n: usize) -> Result<i64> {
    (1..=n as i64).try_fold(1i64, |acc, k| acc.checked_mul(k)).ok_or_else(|| {
        AutError::OutOfRange(format!("{n}! does not fit in 64 bits"))
    })
}

fn require_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        Err(AutError::OutOfRange(format!("k = {k}, need k >= {min}")))
    } else {
        Ok(())
    }
}

fn conjugated_phi<S: Scalar>(shift: UniPoly<S>, p: &UniPoly<S>) -> AutWord<S> {
    AutWord::new(vec![
        AutElem::psi(shift.clone()),
        AutElem::phi(-p),
        AutElem::psi(-&shift),
    ])
}

/// `(x + y^{k-1}, y) ∘ (x, y - p(x)) ∘ (x - y^{k-1}, y)`.
pub fn special_sigma<S: Scalar>(k: usize, p: &UniPoly<S>) -> Result<AutWord<S>> {
    require_k(k, 2)?;
    Ok(conjugated_phi(UniPoly::monomial(Var::Y, S::one(), k - 1), p))
}

/// `(x + y^{k-2} + y^{k-1}, y) ∘ (x, y - p(x)) ∘ (x - y^{k-2} - y^{k-1}, y)`.
pub fn special_tau<S: Scalar>(k: usize, p: &UniPoly<S>) -> Result<AutWord<S>> {
    require_k(k, 2)?;
    let shift = &UniPoly::monomial(Var::Y, S::one(), k - 2) + &UniPoly::monomial(Var::Y, S::one(), k - 1);
    Ok(conjugated_phi(shift, p))
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^k x^k - (k-1)!`.
pub fn alpha_poly<S: Scalar>(k: usize) -> Result<UniPoly<S>> {
    require_k(k, 2)?;
    let mut c = vec![S::zero(); k + 1];
    c[0] = S::from_i64(-factorial(k - 1)?);
    c[k] = S::from_i64(sign(k));
    Ok(UniPoly::from_coeffs(Var::X, c))
}

/// `x^n + (-1)^n n!/(n-1) x + (-1)^{n+1} (n-1)!`, shared by the first `q_i`.
fn first_family<S: Scalar>(n: usize) -> Result<UniPoly<S>> {
    let mut c = vec![S::zero(); n + 1];
    c[n] = S::one();
    c[1] = S::from_i64(sign(n) * n as i64 * factorial(n - 2)?);
    c[0] = S::from_i64(sign(n + 1) * factorial(n - 1)?);
    Ok(UniPoly::from_coeffs(Var::X, c))
}

/// `x^k + (-1)^k k!/(k-1) x + (-1)^{k+1} (k-1)!`. Only valid for `k >= 3`:
/// at `k = 2` the expression does not annihilate the matrix it is meant for.
pub fn beta_poly<S: Scalar>(k: usize) -> Result<UniPoly<S>> {
    require_k(k, 3)?;
    first_family(k)
}

/// The same expression without the range restriction, for comparison tests.
pub fn beta_expression<S: Scalar>(k: usize) -> Result<UniPoly<S>> {
    require_k(k, 2)?;
    first_family(k)
}

/// Closed forms of the minimal polynomials attached to `(X(n, i), Y_0)`.
pub fn q_i_poly<S: Scalar>(n: usize, i: usize) -> Result<UniPoly<S>> {
    require_k(n, 2)?;
    if i == 0 || i > n {
        return Err(AutError::OutOfRange(format!("i = {i} not in 1..={n}")));
    }
    if i == 1 {
        return first_family(n);
    }
    let mut c = vec![S::zero(); n + 1];
    c[n] = S::one();
    if i == n {
        c[1] = S::from_i64(n as i64 * factorial(n - 2)?);
        c[0] = S::from_i64(factorial(n - 1)?);
    } else {
        c[0] = S::from_i64(sign(n - i) * factorial(i - 1)? * factorial(n - i)?);
    }
    Ok(UniPoly::from_coeffs(Var::X, c))
}

/// `φ^k` for `φ = (λ x + p(y), λ^{-1} y)`.
///
/// When `λ` is a primitive `k`-th root of unity only the coefficients of
/// `y^i` with `i ≡ -1 (mod k)` survive, multiplied by `k λ^i`.
pub fn iterate_triangular<S: Scalar>(phi: &AutElem<S>, k: usize) -> Result<AutElem<S>> {
    let t = phi
        .to_triangular()
        .filter(|t| t.h().is_zero())
        .ok_or_else(|| AutError::NotTriangular(phi.to_string()))?;
    let lambda = t.a().clone();
    let lambda_inv = lambda.inv().ok_or(AutError::ZeroScale)?;
    let p = t.q();
    let q = if is_primitive_root(&lambda, k) {
        let coeffs = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (i + 1) % k == 0 {
                    c.clone() * S::from_i64(k as i64) * lambda.pow(i as u32)
                } else {
                    S::zero()
                }
            })
            .collect();
        UniPoly::from_coeffs(Var::Y, coeffs)
    } else {
        (1..=k).fold(UniPoly::zero(Var::Y), |acc, j| {
            let inner = lambda_inv.pow(j as u32 - 1);
            let term = p.compose_affine(&inner, &S::zero()).scale(&lambda.pow((k - j) as u32));
            &acc + &term
        })
    };
    Ok(AutElem::Triangular(Triangular::new(lambda.pow(k as u32), q, S::zero())?))
}

fn is_primitive_root<S: Scalar>(lambda: &S, k: usize) -> bool {
    k >= 1 && lambda.pow(k as u32).is_one() && (1..k).all(|j| !lambda.pow(j as u32).is_one())
}
