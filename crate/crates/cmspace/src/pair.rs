//! Matrix pairs with `[X, Y] + I` of rank one.

use std::fmt;

use tamecm_autgroup::{Affine, AutElem, AutWord};
use tamecm_core::{Matrix, Scalar};

use crate::error::{CmError, Result};

/// A point `(X, Y)` together with `v`, `w` such that `[X, Y] + I = v w`.
#[derive(Clone)]
pub struct MatrixPair<S> {
    x: Matrix<S>,
    y: Matrix<S>,
    v: Vec<S>,
    w: Vec<S>,
}

impl<S: Scalar> PartialEq for MatrixPair<S> {
    fn eq(&self, o: &Self) -> bool {
        self.x == o.x && self.y == o.y
    }
}

impl<S: fmt::Debug> fmt::Debug for MatrixPair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X = {:?}, Y = {:?}", self.x, self.y)
    }
}

impl<S: fmt::Display> fmt::Display for MatrixPair<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X = {}, Y = {}", self.x, self.y)
    }
}

/// `[X, Y] + I`.
pub fn rank_one_defect<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
    &Matrix::commutator(x, y) + &Matrix::identity(x.rows())
}

/// Validates the rank-one condition and factors `[X, Y] + I`.
pub fn make_pair<S: Scalar>(x: Matrix<S>, y: Matrix<S>) -> Result<MatrixPair<S>> {
    let n = x.rows();
    if !x.is_square() || !y.is_square() || y.rows() != n {
        return Err(CmError::Shape(format!(
            "{}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    if n == 0 {
        return Err(CmError::EmptyDimension);
    }
    let m = rank_one_defect(&x, &y);
    let rank = m.rank();
    if rank != 1 {
        return Err(CmError::NotCalogeroMoser { rank });
    }
    let (i0, j0) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .max_by(|a, b| m[*a].abs_f64().total_cmp(&m[*b].abs_f64()))
        .expect("nonempty");
    let pivot = m[(i0, j0)].inv().ok_or(CmError::NotCalogeroMoser { rank: 0 })?;
    let w = m.row(i0).to_vec();
    let v = (0..n).map(|i| m[(i, j0)].clone() * pivot.clone()).collect();
    Ok(MatrixPair { x, y, v, w })
}

/// `X_0` lower shift with ones, `Y_0` upper shift with entries `1-n, ..., -1`.
pub fn basepoint<S: Scalar>(n: usize) -> Result<MatrixPair<S>> {
    if n == 0 {
        return Err(CmError::EmptyDimension);
    }
    let x = Matrix::from_fn(n, n, |i, j| if i == j + 1 { S::one() } else { S::zero() });
    let y = Matrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            S::from_i64(j as i64 - n as i64)
        } else {
            S::zero()
        }
    });
    make_pair(x, y)
}

impl<S: Scalar> MatrixPair<S> {
    pub fn n(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &Matrix<S> {
        &self.x
    }

    pub fn y(&self) -> &Matrix<S> {
        &self.y
    }

    pub fn v(&self) -> &[S] {
        &self.v
    }

    pub fn w(&self) -> &[S] {
        &self.w
    }

    pub fn into_matrices(self) -> (Matrix<S>, Matrix<S>) {
        (self.x, self.y)
    }

    /// Moves the point by `g`, evaluating the inverse pair at `(X, Y)`.
    /// Composite words act from the right: `act(u ∘ v) = act(v) after act(u)`.
    pub fn act(&self, g: &AutWord<S>) -> Result<Self> {
        let (x, y) = g.act(&self.x, &self.y);
        make_pair(x, y)
    }

    pub fn act_elem(&self, g: &AutElem<S>) -> Result<Self> {
        let (x, y) = g.act(&self.x, &self.y);
        make_pair(x, y)
    }

    /// `(g X g^{-1}, g Y g^{-1})`.
    pub fn conjugate(&self, g: &Matrix<S>) -> Option<Self> {
        let x = self.x.conjugate_by(g)?;
        let y = self.y.conjugate_by(g)?;
        make_pair(x, y).ok()
    }

    /// Translation `(x + tr X / n, y + tr Y / n)`; acting by it makes both
    /// matrices traceless.
    pub fn trace_normalizer(&self) -> AutElem<S> {
        let n = S::from_i64(self.n() as i64);
        AutElem::Affine(Affine::translation(
            self.x.trace() / n.clone(),
            self.y.trace() / n,
        ))
    }

    pub fn is_traceless(&self) -> bool {
        self.x.trace().is_zero() && self.y.trace().is_zero()
    }

    /// Scaling by `t` followed by conjugation with `diag(1, t, ..., t^{n-1})`.
    pub fn apply_q_scaling(&self, t: &S) -> Result<Self> {
        let scale = AutElem::scale(t.clone()).map_err(|_| CmError::ZeroScale)?;
        let moved = self.act_elem(&scale)?;
        let d: Vec<S> = (0..self.n()).map(|k| t.pow(k as u32)).collect();
        let dinv: Vec<S> = d.iter().map(|v| v.inv().expect("nonzero power")).collect();
        let conj = |m: &Matrix<S>| Matrix::from_fn(m.rows(), m.cols(), |i, j| d[i].clone() * m[(i, j)].clone() * dinv[j].clone());
        make_pair(conj(&moved.x), conj(&moved.y))
    }
}

/// `X = diag(λ)`, `Y` with the given diagonal and `Y_ij = (λ_i - λ_j)^{-1}`.
pub fn cm_normal_form<S: Scalar>(lambdas: &[S], diag: &[S]) -> Result<MatrixPair<S>> {
    let n = lambdas.len();
    if diag.len() != n {
        return Err(CmError::LengthMismatch(diag.len(), n));
    }
    for j in 0..n {
        if lambdas[..j].iter().any(|l| (l.clone() - lambdas[j].clone()).is_zero()) {
            return Err(CmError::RepeatedEigenvalue(j));
        }
    }
    let x = Matrix::diag(lambdas);
    let y = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            diag[i].clone()
        } else {
            (lambdas[i].clone() - lambdas[j].clone()).inv().expect("distinct")
        }
    });
    make_pair(x, y)
}
