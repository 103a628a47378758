//! Conjugation invariants used as float-side equivalence checks.

use tamecm_cmspace::MatrixPair;
use tamecm_core::{Matrix, Scalar};

/// `tr(w(X, Y))` for every word `w` of length `1..=max_len`, in shortlex order.
pub fn trace_signature<S: Scalar>(p: &MatrixPair<S>, max_len: usize) -> Vec<S> {
    let mut out = Vec::new();
    let mut layer = vec![Matrix::identity(p.n())];
    for _ in 0..max_len {
        let next: Vec<Matrix<S>> = layer
            .iter()
            .flat_map(|m| [m * p.x(), m * p.y()])
            .collect();
        out.extend(next.iter().map(Matrix::trace));
        layer = next;
    }
    out
}

/// Largest relative deviation between the trace signatures of two points.
pub fn signature_residual<S: Scalar>(p: &MatrixPair<S>, q: &MatrixPair<S>, max_len: usize) -> f64 {
    trace_signature(p, max_len)
        .into_iter()
        .zip(trace_signature(q, max_len))
        .map(|(a, b)| (a - b.clone()).abs_f64() / (1.0 + b.abs_f64()))
        .fold(0.0, f64::max)
}

/// Entrywise equality, up to the float tolerance on the float backend.
pub fn matrices_close<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    let scale = a.max_abs().max(b.max_abs());
    (a - b).entries().all(|v| v.is_negligible(scale))
}

pub fn pairs_close<S: Scalar>(p: &MatrixPair<S>, q: &MatrixPair<S>) -> bool {
    matrices_close(p.x(), q.x()) && matrices_close(p.y(), q.y())
}

/// `M^n = 0` up to tolerance.
pub fn is_nilpotent<S: Scalar>(m: &Matrix<S>) -> bool {
    let p = m.pow(m.rows() as u32);
    let scale = m.max_abs().powi(m.rows() as i32);
    p.to_vec().iter().all(|v| v.is_negligible(scale))
}
