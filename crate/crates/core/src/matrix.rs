//! Small dense matrices and the linear algebra the rest of the workspace needs.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{CoreError, Result};
use crate::scalar::{Backend, Scalar};
use crate::unipoly::{UniPoly, Var};

/// Row-major dense matrix. Most of the library uses square ones; linear
/// systems use rectangular ones.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Affine solution set `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSpace<S> {
    pub particular: Vec<S>,
    pub kernel: Vec<Vec<S>>,
}

impl<S: Scalar> SolutionSpace<S> {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, S::one())
    }

    pub fn scalar(n: usize, c: S) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(CoreError::DimensionMismatch {
                expected: format!("rows of length {c}"),
                found: "ragged rows".into(),
            });
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| S::from_i64(x)).collect()).collect();
        Self::from_rows(v).expect("rectangular integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(CoreError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(S::abs_f64).fold(0.0, f64::max)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(CoreError::DimensionMismatch {
                expected: format!("{} rows", self.cols),
                found: format!("{} rows", o.rows),
            });
        }
        Ok(self * o)
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Conjugation `g * self * g^{-1}`.
    pub fn conjugate_by(&self, g: &Self) -> Option<Self> {
        let gi = g.inverse()?;
        Some(&(g * self) * &gi)
    }

    fn pivot_row(&self, col: usize, from: usize, scale: f64) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for r in from..self.rows {
            let v = &self[(r, col)];
            if v.is_negligible(scale) {
                continue;
            }
            match S::BACKEND {
                Backend::Exact => return Some(r),
                Backend::Float => {
                    let a = v.abs_f64();
                    if best.is_none_or(|(_, b)| a > b) {
                        best = Some((r, a));
                    }
                }
            }
        }
        best.map(|(r, _)| r)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let scale = self.max_abs();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = m.pivot_row(c, r, scale) else {
                for rr in r..m.rows {
                    m[(rr, c)] = S::zero();
                }
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for rr in 0..m.rows {
                if rr == r {
                    continue;
                }
                let f = m[(rr, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m[(rr, j)].clone() - f.clone() * m[(r, j)].clone();
                    m[(rr, j)] = v;
                }
                m[(rr, c)] = S::zero();
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Solves `self * v = rhs`.
    pub fn solve(&self, rhs: &[S]) -> Result<SolutionSpace<S>> {
        if rhs.len() != self.rows {
            return Err(CoreError::DimensionMismatch {
                expected: format!("right-hand side of length {}", self.rows),
                found: rhs.len().to_string(),
            });
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[i].clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(CoreError::Inconsistent);
        }
        let mut particular = vec![S::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            particular[pc] = m[(row, self.cols)].clone();
        }
        Ok(SolutionSpace { particular, kernel: self.nullspace() })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<S> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(S::one());
        }
        let scale = self.max_abs();
        let mut m = self.clone();
        let mut sign = S::one();
        let mut prev = S::one();
        for k in 0..n - 1 {
            let Some(p) = m.pivot_row(k, k, scale) else {
                return Ok(S::zero());
            };
            if p != k {
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone())
                        / prev.clone();
                    m[(i, j)] = v;
                }
                m[(i, k)] = S::zero();
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * m[(n - 1, n - 1)].clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.require_square().ok()?;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| m[(i, n + j)].clone()))
    }

    /// Characteristic polynomial `det(z I - self)` (Faddeev–LeVerrier).
    pub fn char_poly(&self) -> Result<UniPoly<S>> {
        let n = self.require_square()?;
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = S::one();
        let mut aux = Self::zeros(n, n);
        for k in 1..=n {
            aux = &(self * &aux) + &Self::scalar(n, coeffs[n - k + 1].clone());
            let t = (self * &aux).trace();
            coeffs[n - k] = -t / S::from_i64(k as i64);
        }
        Ok(UniPoly::from_coeffs(Var::Z, coeffs))
    }

    /// Minimal polynomial as the lcm of the local annihilators of the basis vectors.
    pub fn minimal_polynomial(&self) -> Result<UniPoly<S>> {
        if S::BACKEND != Backend::Exact {
            return Err(CoreError::ExactOnly("minimal_polynomial"));
        }
        let n = self.require_square()?;
        let mut acc = UniPoly::constant(Var::Z, S::one());
        for j in 0..n {
            let mut e = vec![S::zero(); n];
            e[j] = S::one();
            let local = self.local_annihilator(e);
            acc = acc.lcm(&local);
        }
        Ok(acc)
    }

    /// Monic least-degree polynomial `p` with `p(self) v = 0`.
    fn local_annihilator(&self, v: Vec<S>) -> UniPoly<S> {
        let n = self.rows;
        let mut krylov = vec![v];
        for d in 1..=n {
            let next = self.mul_vec(krylov.last().expect("nonempty"));
            krylov.push(next);
            let k = Self::from_fn(n, d + 1, |i, j| krylov[j][i].clone());
            let ns = k.nullspace();
            if let Some(c) = ns.into_iter().find(|c| !c[d].is_zero()) {
                let lead = c[d].clone();
                let coeffs = c.into_iter().map(|x| x / lead.clone()).collect();
                return UniPoly::from_coeffs(Var::Z, coeffs);
            }
        }
        unreachable!("Cayley-Hamilton bounds the Krylov length")
    }

    /// Stacks the entries of `self` column-wise into a vector (row-major order).
    pub fn to_vec(&self) -> Vec<S> {
        self.data.clone()
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(CoreError::DimensionMismatch {
                expected: format!("{} entries", rows * cols),
                found: data.len().to_string(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> Add for &Matrix<S> {
    type Output = Matrix<S>;
    fn add(self, o: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<S: Scalar> Sub for &Matrix<S> {
    type Output = Matrix<S>;
    fn sub(self, o: &Matrix<S>) -> Matrix<S> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, o: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut out = Matrix::<S>::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = out[(i, j)].clone() + a.clone() * o[(k, j)].clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &Matrix<S> {
    type Output = Matrix<S>;
    fn neg(self) -> Matrix<S> {
        self.map(|a| -a.clone())
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[S]> = self.data.chunks(self.cols.max(1)).take(self.rows).collect();
        write!(f, "{rows:?}")
    }
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in self.data[i * self.cols..(i + 1) * self.cols].iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
