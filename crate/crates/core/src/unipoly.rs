//! Dense univariate polynomials over a [`Scalar`] field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Display tag for the indeterminate; it does not take part in equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }
}

/// Coefficients stored low degree first; trailing zeros are trimmed.
#[derive(Clone, Debug)]
pub struct UniPoly<S> {
    var: Var,
    coeffs: Vec<S>,
}

impl<S: PartialEq> PartialEq for UniPoly<S> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<S: Scalar> UniPoly<S> {
    pub fn from_coeffs(var: Var, coeffs: Vec<S>) -> Self {
        let mut p = UniPoly { var, coeffs };
        p.trim();
        p
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: S) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    pub fn monomial(var: Var, c: S, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(var, coeffs)
    }

    /// The indeterminate itself.
    pub fn ident(var: Var) -> Self {
        Self::monomial(var, S::one(), 1)
    }

    /// Builds from small integers, low degree first.
    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::from_coeffs(var, coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.var, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading().and_then(S::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn eval(&self, at: &S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix<S>) -> Matrix<S> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::scalar(n, c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * S::from_i64(k as i64))
            .collect();
        Self::from_coeffs(self.var, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.var, S::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(a*v + b)`.
    pub fn compose_affine(&self, a: &S, b: &S) -> Self {
        let lin = Self::from_coeffs(self.var, vec![b.clone(), a.clone()]);
        let mut acc = Self::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(self.var, c.clone());
        }
        acc
    }

    /// `p(q(v))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(self.var, c.clone());
        }
        acc.with_var(self.var)
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.leading()?.clone();
        let dinv = dl.inv()?;
        let dd = d.degree()?;
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(dd);
        let mut quo = vec![S::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + dd].clone() * dinv.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
                }
            }
            rem[k + dd] = S::zero();
            quo[k] = c;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(self.var, quo), Self::from_coeffs(self.var, rem)))
    }

    pub fn rem(&self, d: &Self) -> Option<Self> {
        self.div_rem(d).map(|(_, r)| r)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (g, _, _) = self.xgcd(other);
        g
    }

    /// Extended Euclid: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let var = self.var;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(var, S::one()), Self::zero(var));
        let (mut t0, mut t1) = (Self::zero(var), Self::constant(var, S::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s2 = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().and_then(S::inv) {
            Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
            None => (r0, s0, t0),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        let g = self.gcd(other);
        let (q, _) = (self * other).div_rem(&g).expect("nonzero gcd");
        q.monic()
    }

    /// Resultant via the Sylvester determinant.
    pub fn resultant(&self, other: &Self) -> S {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return S::zero();
        };
        if m == 0 && n == 0 {
            return S::one();
        }
        let size = m + n;
        let mut syl = Matrix::zeros(size, size);
        for row in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                syl[(row, row + k)] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in other.coeffs.iter().rev().enumerate() {
                syl[(n + row, row + k)] = c.clone();
            }
        }
        syl.det().expect("square Sylvester matrix")
    }

    /// Discriminant, normalized so that `z^2 + b z + c` gives `b^2 - 4c`.
    pub fn discriminant(&self) -> S {
        match self.degree() {
            None | Some(0) => S::zero(),
            Some(1) => S::one(),
            Some(n) => {
                let r = self.resultant(&self.derivative());
                let lead = self.leading().expect("nonzero").clone();
                let r = r / lead;
                if (n * (n - 1) / 2) % 2 == 1 {
                    -r
                } else {
                    r
                }
            }
        }
    }

    /// Interpolating polynomial through `(node, value)` pairs; `None` on repeated nodes.
    pub fn interpolate(var: Var, points: &[(S, S)]) -> Option<Self> {
        let mut acc = Self::zero(var);
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::constant(var, S::one());
            let mut denom = S::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = &basis * &Self::from_coeffs(var, vec![-xj.clone(), S::one()]);
                denom = denom * (xi.clone() - xj.clone());
            }
            let scale = yi.clone() * denom.inv()?;
            acc = &acc + &basis.scale(&scale);
        }
        Some(acc)
    }
}

impl<'a, S: Scalar> Add<&'a UniPoly<S>> for &'a UniPoly<S> {
    type Output = UniPoly<S>;
    fn add(self, o: &UniPoly<S>) -> UniPoly<S> {
        let len = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + o.coeff(k)).collect();
        UniPoly::from_coeffs(self.var, coeffs)
    }
}

impl<'a, S: Scalar> Sub<&'a UniPoly<S>> for &'a UniPoly<S> {
    type Output = UniPoly<S>;
    fn sub(self, o: &UniPoly<S>) -> UniPoly<S> {
        let len = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - o.coeff(k)).collect();
        UniPoly::from_coeffs(self.var, coeffs)
    }
}

impl<'a, S: Scalar> Mul<&'a UniPoly<S>> for &'a UniPoly<S> {
    type Output = UniPoly<S>;
    fn mul(self, o: &UniPoly<S>) -> UniPoly<S> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut coeffs = vec![S::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(self.var, coeffs)
    }
}

impl<S: Scalar> Neg for &UniPoly<S> {
    type Output = UniPoly<S>;
    fn neg(self) -> UniPoly<S> {
        UniPoly::from_coeffs(self.var, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<S: Scalar> fmt::Display for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = signed_coeff(c);
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mono = match k {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{k}"),
            };
            let term = match (body.as_str(), mono.is_empty()) {
                (b, true) => b.to_string(),
                ("1", false) => mono,
                (b, false) => format!("{b}*{mono}"),
            };
            write!(f, "{sign}{term}")?;
            first = false;
        }
        Ok(())
    }
}

/// Splits a coefficient into an overall sign and a printable magnitude,
/// parenthesizing values with both real and imaginary parts.
pub(crate) fn signed_coeff<S: Scalar>(c: &S) -> (bool, String) {
    let text = c.to_string();
    let z = c.to_c64();
    if z.re != 0.0 && z.im != 0.0 {
        return (false, format!("({text})"));
    }
    match text.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, text),
    }
}
