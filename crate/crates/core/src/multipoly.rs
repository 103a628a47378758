//! Sparse commutative polynomials in a fixed number of variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;
use crate::unipoly::{signed_coeff, UniPoly, Var};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq)]
pub struct MultiPoly<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> MultiPoly<S> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The `i`-th variable.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, S::one());
        p
    }

    fn add_term(&mut self, e: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(e, merged);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.degree_in(i) > 0).collect()
    }

    /// Value of a constant polynomial.
    pub fn as_constant(&self) -> Option<S> {
        match self.total_degree() {
            None => Some(S::zero()),
            Some(0) => Some(self.terms.values().next().cloned().unwrap_or_else(S::zero)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, S::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, at: &[S]) -> S {
        self.terms.iter().fold(S::zero(), |acc, (e, c)| {
            let m = e.iter().zip(at).fold(c.clone(), |m, (&k, v)| m * v.pow(k));
            acc + m
        })
    }

    /// Substitutes variable `i` by `value`.
    pub fn substitute(&self, i: usize, value: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        let mut powers = vec![Self::constant(self.nvars, S::one())];
        for (e, c) in &self.terms {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().expect("nonempty") * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let mut mono = Self::zero(self.nvars);
            mono.add_term(rest, c.clone());
            out = &out + &(&mono * &powers[k]);
        }
        out
    }

    /// When the polynomial is `c * x_i + rest` with `rest` free of `x_i` and
    /// `c` a nonzero constant, returns `x_i = -rest / c`.
    pub fn solve_linear_in(&self, i: usize) -> Option<Self> {
        if self.degree_in(i) != 1 {
            return None;
        }
        let mut lead = S::zero();
        let mut rest = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 1 {
                if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                    return None;
                }
                lead = c.clone();
            } else {
                rest.add_term(e.clone(), c.clone());
            }
        }
        let inv = lead.inv()?;
        Some(rest.scale(&-inv))
    }

    /// Views a polynomial involving only variable `i` as univariate.
    pub fn to_univariate(&self, i: usize) -> Option<UniPoly<S>> {
        let mut coeffs = vec![S::zero(); self.degree_in(i) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &k)| j != i && k > 0) {
                return None;
            }
            coeffs[e[i] as usize] = c.clone();
        }
        Some(UniPoly::from_coeffs(Var::Z, coeffs))
    }

    pub fn from_univariate(nvars: usize, i: usize, p: &UniPoly<S>) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<S: Scalar> Add for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn add(self, o: &MultiPoly<S>) -> MultiPoly<S> {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn sub(self, o: &MultiPoly<S>) -> MultiPoly<S> {
        self + &(-o)
    }
}

impl<S: Scalar> Neg for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn neg(self) -> MultiPoly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Mul for &MultiPoly<S> {
    type Output = MultiPoly<S>;
    fn mul(self, o: &MultiPoly<S>) -> MultiPoly<S> {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Debug for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for MultiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = signed_coeff(c);
            let sign = match (k == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("a{}", i + 1) } else { format!("a{}^{p}", i + 1) })
                .collect();
            let mono = mono.join("*");
            let term = match (body.as_str(), mono.is_empty()) {
                (b, true) => b.to_string(),
                ("1", false) => mono,
                (b, false) => format!("{b}*{mono}"),
            };
            write!(f, "{sign}{term}")?;
        }
        Ok(())
    }
}
