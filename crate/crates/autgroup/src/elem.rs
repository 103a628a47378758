//! Single automorphisms of the plane with Jacobian one.

use std::fmt;

use tamecm_core::{Matrix, NcPoly, Scalar, UniPoly, Var};

use crate::error::{AutError, Result};

/// `(a x + q(y), a^{-1} y + h)` with `a != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangular<S> {
    a: S,
    q: UniPoly<S>,
    h: S,
}

/// `(a x + b y + e, c x + d y + f)` with `a d - b c = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Affine<S> {
    a: S,
    b: S,
    c: S,
    d: S,
    e: S,
    f: S,
}

/// A scalar known to be nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct NonZero<S>(S);

impl<S: Scalar> NonZero<S> {
    pub fn new(v: S) -> Result<Self> {
        if v.is_zero() {
            Err(AutError::ZeroScale)
        } else {
            Ok(NonZero(v))
        }
    }

    pub fn get(&self) -> &S {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AutElem<S> {
    Triangular(Triangular<S>),
    Affine(Affine<S>),
    /// `(x, y + p(x))`.
    Phi(UniPoly<S>),
    /// `(x + q(y), y)`.
    Psi(UniPoly<S>),
    /// `(t x, t^{-1} y)`.
    Scale(NonZero<S>),
}

impl<S: Scalar> Triangular<S> {
    pub fn new(a: S, q: UniPoly<S>, h: S) -> Result<Self> {
        if a.is_zero() {
            return Err(AutError::ZeroScale);
        }
        Ok(Triangular { a, q: q.with_var(Var::Y), h })
    }

    pub fn identity() -> Self {
        Triangular { a: S::one(), q: UniPoly::zero(Var::Y), h: S::zero() }
    }

    pub fn a(&self) -> &S {
        &self.a
    }

    pub fn q(&self) -> &UniPoly<S> {
        &self.q
    }

    pub fn h(&self) -> &S {
        &self.h
    }

    fn a_inv(&self) -> S {
        self.a.inv().expect("triangular scale is nonzero")
    }

    pub fn in_u(&self) -> bool {
        self.q.degree().is_none_or(|d| d <= 1)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.q.is_zero() && self.h.is_zero()
    }

    /// `max(1, deg q)`.
    pub fn degree(&self) -> usize {
        self.q.degree().unwrap_or(0).max(1)
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        let a2_inv = o.a_inv();
        let shifted = self.q.compose_affine(&a2_inv, &o.h);
        let q = &o.q.scale(&self.a) + &shifted;
        let h = self.a_inv() * o.h.clone() + self.h.clone();
        Triangular { a: self.a.clone() * o.a.clone(), q, h }
    }

    pub fn inverse(&self) -> Self {
        let ai = self.a_inv();
        let ah = self.a.clone() * self.h.clone();
        let q = self.q.compose_affine(&self.a, &-ah.clone()).scale(&-ai.clone());
        Triangular { a: ai, q, h: -ah }
    }

    /// The same map as an affine element, when `deg q <= 1`.
    pub fn to_affine(&self) -> Option<Affine<S>> {
        if !self.in_u() {
            return None;
        }
        Some(Affine {
            a: self.a.clone(),
            b: self.q.coeff(1),
            c: S::zero(),
            d: self.a_inv(),
            e: self.q.coeff(0),
            f: self.h.clone(),
        })
    }

    pub fn nc_pair(&self) -> (NcPoly<S>, NcPoly<S>) {
        let p = &NcPoly::x().scale(&self.a) + &NcPoly::from_unipoly(&self.q);
        let q = &NcPoly::y().scale(&self.a_inv()) + &NcPoly::constant(self.h.clone());
        (p, q)
    }

    /// Evaluates the inverse map at a pair of matrices.
    pub fn act(&self, x: &Matrix<S>, y: &Matrix<S>) -> (Matrix<S>, Matrix<S>) {
        let n = x.rows();
        let ai = self.a_inv();
        let y_new = (y - &Matrix::scalar(n, self.h.clone())).scale(&self.a);
        let x_new = (x - &self.q.eval_matrix(&y_new)).scale(&ai);
        (x_new, y_new)
    }
}

impl<S: Scalar> Affine<S> {
    /// Rejects linear parts whose determinant is not one.
    pub fn new(linear: [S; 4], translation: [S; 2]) -> Result<Self> {
        let [a, b, c, d] = linear;
        let [e, f] = translation;
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        if !det.is_one() {
            return Err(AutError::NotSymplectic(det.to_string()));
        }
        Ok(Affine { a, b, c, d, e, f })
    }

    pub fn identity() -> Self {
        Affine { a: S::one(), b: S::zero(), c: S::zero(), d: S::one(), e: S::zero(), f: S::zero() }
    }

    /// The flip `(y, -x)`.
    pub fn flip() -> Self {
        Affine { a: S::zero(), b: S::one(), c: -S::one(), d: S::zero(), e: S::zero(), f: S::zero() }
    }

    /// Translation `(x + e, y + f)`.
    pub fn translation(e: S, f: S) -> Self {
        Affine { e, f, ..Self::identity() }
    }

    pub fn linear(&self) -> [&S; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn translation_part(&self) -> [&S; 2] {
        [&self.e, &self.f]
    }

    pub fn in_u(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn compose(&self, o: &Self) -> Self {
        let m = |p: &S, q: &S, r: &S, s: &S| p.clone() * q.clone() + r.clone() * s.clone();
        Affine {
            a: m(&self.a, &o.a, &self.b, &o.c),
            b: m(&self.a, &o.b, &self.b, &o.d),
            c: m(&self.c, &o.a, &self.d, &o.c),
            d: m(&self.c, &o.b, &self.d, &o.d),
            e: m(&self.a, &o.e, &self.b, &o.f) + self.e.clone(),
            f: m(&self.c, &o.e, &self.d, &o.f) + self.f.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        let (a, b, c, d) = (self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone());
        let e = -(a.clone() * self.e.clone() + b.clone() * self.f.clone());
        let f = -(c.clone() * self.e.clone() + d.clone() * self.f.clone());
        Affine { a, b, c, d, e, f }
    }

    /// The same map as a triangular element, when `c = 0`.
    pub fn to_triangular(&self) -> Option<Triangular<S>> {
        if !self.in_u() {
            return None;
        }
        let q = UniPoly::from_coeffs(Var::Y, vec![self.e.clone(), self.b.clone()]);
        Some(Triangular { a: self.a.clone(), q, h: self.f.clone() })
    }

    pub fn nc_pair(&self) -> (NcPoly<S>, NcPoly<S>) {
        let lin = |u: &S, v: &S, w: &S| {
            &(&NcPoly::x().scale(u) + &NcPoly::y().scale(v)) + &NcPoly::constant(w.clone())
        };
        (lin(&self.a, &self.b, &self.e), lin(&self.c, &self.d, &self.f))
    }

    pub fn act(&self, x: &Matrix<S>, y: &Matrix<S>) -> (Matrix<S>, Matrix<S>) {
        let inv = self.inverse();
        let n = x.rows();
        let comb = |u: &S, v: &S, w: &S| {
            &(&x.scale(u) + &y.scale(v)) + &Matrix::scalar(n, w.clone())
        };
        (comb(&inv.a, &inv.b, &inv.e), comb(&inv.c, &inv.d, &inv.f))
    }
}

impl<S: Scalar> AutElem<S> {
    pub fn phi(p: UniPoly<S>) -> Self {
        AutElem::Phi(p.with_var(Var::X))
    }

    pub fn psi(q: UniPoly<S>) -> Self {
        AutElem::Psi(q.with_var(Var::Y))
    }

    pub fn scale(t: S) -> Result<Self> {
        Ok(AutElem::Scale(NonZero::new(t)?))
    }

    pub fn triangular(a: S, q: UniPoly<S>, h: S) -> Result<Self> {
        Ok(AutElem::Triangular(Triangular::new(a, q, h)?))
    }

    pub fn affine(linear: [S; 4], translation: [S; 2]) -> Result<Self> {
        Ok(AutElem::Affine(Affine::new(linear, translation)?))
    }

    /// `s = (y, -x)`.
    pub fn flip() -> Self {
        AutElem::Affine(Affine::flip())
    }

    /// `s^{-1} = (-y, x)`.
    pub fn flip_inv() -> Self {
        AutElem::Affine(Affine::flip().inverse())
    }

    pub fn identity() -> Self {
        AutElem::Affine(Affine::identity())
    }

    pub fn inverse(&self) -> Self {
        match self {
            AutElem::Triangular(t) => AutElem::Triangular(t.inverse()),
            AutElem::Affine(a) => AutElem::Affine(a.inverse()),
            AutElem::Phi(p) => AutElem::Phi(-p),
            AutElem::Psi(q) => AutElem::Psi(-q),
            AutElem::Scale(t) => AutElem::Scale(NonZero(t.0.inv().expect("nonzero"))),
        }
    }

    /// B-factor form, when the element is triangular.
    pub fn to_triangular(&self) -> Option<Triangular<S>> {
        match self {
            AutElem::Triangular(t) => Some(t.clone()),
            AutElem::Affine(a) => a.to_triangular(),
            AutElem::Phi(p) if p.degree().is_none_or(|d| d == 0) => {
                Some(Triangular { a: S::one(), q: UniPoly::zero(Var::Y), h: p.coeff(0) })
            }
            AutElem::Phi(_) => None,
            AutElem::Psi(q) => Some(Triangular { a: S::one(), q: q.clone(), h: S::zero() }),
            AutElem::Scale(t) => Some(Triangular { a: t.0.clone(), q: UniPoly::zero(Var::Y), h: S::zero() }),
        }
    }

    /// A-factor form, when the element is affine.
    pub fn to_affine(&self) -> Option<Affine<S>> {
        match self {
            AutElem::Affine(a) => Some(a.clone()),
            AutElem::Phi(p) if p.degree().is_none_or(|d| d <= 1) => {
                Some(Affine { c: p.coeff(1), f: p.coeff(0), ..Affine::identity() })
            }
            AutElem::Phi(_) => None,
            other => other.to_triangular().and_then(|t| t.to_affine()),
        }
    }

    /// Images of `x` and `y`.
    pub fn nc_pair(&self) -> (NcPoly<S>, NcPoly<S>) {
        match self {
            AutElem::Triangular(t) => t.nc_pair(),
            AutElem::Affine(a) => a.nc_pair(),
            AutElem::Phi(p) => (NcPoly::x(), &NcPoly::y() + &NcPoly::from_unipoly(p)),
            AutElem::Psi(q) => (&NcPoly::x() + &NcPoly::from_unipoly(q), NcPoly::y()),
            AutElem::Scale(t) => {
                (NcPoly::x().scale(&t.0), NcPoly::y().scale(&t.0.inv().expect("nonzero")))
            }
        }
    }

    /// Polynomial degree of the map.
    pub fn degree(&self) -> usize {
        match self {
            AutElem::Phi(p) => p.degree().unwrap_or(0).max(1),
            AutElem::Affine(_) => 1,
            other => other.to_triangular().map_or(1, |t| t.degree()),
        }
    }

    /// Moves the pair of matrices by this element: the inverse map is
    /// evaluated at `(x, y)`.
    pub fn act(&self, x: &Matrix<S>, y: &Matrix<S>) -> (Matrix<S>, Matrix<S>) {
        match self {
            AutElem::Phi(p) => (x.clone(), y - &p.eval_matrix(x)),
            AutElem::Psi(q) => (x - &q.eval_matrix(y), y.clone()),
            AutElem::Scale(t) => (x.scale(&t.0.inv().expect("nonzero")), y.scale(&t.0)),
            AutElem::Triangular(t) => t.act(x, y),
            AutElem::Affine(a) => a.act(x, y),
        }
    }
}

impl<S: Scalar> fmt::Display for Triangular<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tri({}; {}; {})", self.a, self.q, self.h)
    }
}

impl<S: Scalar> fmt::Display for Affine<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Aff({}, {}, {}, {}; {}, {})", self.a, self.b, self.c, self.d, self.e, self.f)
    }
}

impl<S: Scalar> fmt::Display for AutElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutElem::Triangular(t) => write!(f, "{t}"),
            AutElem::Affine(a) => write!(f, "{a}"),
            AutElem::Phi(p) => write!(f, "Phi({p})"),
            AutElem::Psi(q) => write!(f, "Psi({q})"),
            AutElem::Scale(t) => write!(f, "Scale({})", t.0),
        }
    }
}
