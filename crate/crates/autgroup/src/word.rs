//! Words in the generators, amalgam normal forms and dynamical type.

use std::fmt;

use tamecm_core::{Matrix, NcPoly, Result as CoreResult, Scalar, UniPoly, Var};

use crate::elem::{Affine, AutElem, Triangular};

/// `[g1, ..., gm]` stands for the composite map `g1 ∘ ... ∘ gm`.
#[derive(Clone, Debug, PartialEq)]
pub struct AutWord<S> {
    elems: Vec<AutElem<S>>,
}

impl<S: Scalar> AutWord<S> {
    pub fn identity() -> Self {
        AutWord { elems: Vec::new() }
    }

    pub fn new(elems: Vec<AutElem<S>>) -> Self {
        AutWord { elems }
    }

    pub fn elems(&self) -> &[AutElem<S>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &Self) -> Self {
        AutWord { elems: self.elems.iter().chain(&o.elems).cloned().collect() }
    }

    pub fn inverse(&self) -> Self {
        AutWord { elems: self.elems.iter().rev().map(AutElem::inverse).collect() }
    }

    /// `g ∘ self ∘ g^{-1}`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.compose(self).compose(&g.inverse())
    }

    /// Images of `x` and `y` under the composite map.
    pub fn nc_pair(&self) -> CoreResult<(NcPoly<S>, NcPoly<S>)> {
        let mut acc = (NcPoly::x(), NcPoly::y());
        for g in self.elems.iter().rev() {
            let (p, q) = g.nc_pair();
            acc = (p.substitute(&acc.0, &acc.1)?, q.substitute(&acc.0, &acc.1)?);
        }
        Ok(acc)
    }

    /// Moves a pair of matrices: `act(u ∘ v, P) = act(v, act(u, P))`.
    pub fn act(&self, x: &Matrix<S>, y: &Matrix<S>) -> (Matrix<S>, Matrix<S>) {
        self.elems
            .iter()
            .fold((x.clone(), y.clone()), |(x, y), g| g.act(&x, &y))
    }

    pub fn normal_form(&self) -> NormalForm<S> {
        let mut stack = Vec::new();
        for g in &self.elems {
            for atom in Atom::split(g) {
                push_atom(&mut stack, atom);
            }
        }
        NormalForm { factors: stack }
    }
}

impl<S: Scalar> From<AutElem<S>> for AutWord<S> {
    fn from(g: AutElem<S>) -> Self {
        AutWord { elems: vec![g] }
    }
}

impl<S: Scalar> FromIterator<AutElem<S>> for AutWord<S> {
    fn from_iter<I: IntoIterator<Item = AutElem<S>>>(it: I) -> Self {
        AutWord { elems: it.into_iter().collect() }
    }
}

impl<S: Scalar> fmt::Display for AutWord<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elems.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.elems.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" ∘ "))
    }
}

/// A factor of the amalgam: an affine (`A`) or triangular (`B`) element.
#[derive(Clone, Debug, PartialEq)]
pub enum Atom<S> {
    A(Affine<S>),
    B(Triangular<S>),
}

impl<S: Scalar> Atom<S> {
    fn split(g: &AutElem<S>) -> Vec<Atom<S>> {
        match g {
            AutElem::Affine(a) => vec![Atom::A(a.clone())],
            AutElem::Phi(p) if p.degree().is_none_or(|d| d <= 1) => {
                vec![Atom::A(g.to_affine().expect("low-degree Phi is affine"))]
            }
            AutElem::Phi(p) => {
                // (x, y + p(x)) = s^{-1} ∘ (x + p(-y), y) ∘ s with s = (y, -x).
                let q = p.compose_affine(&-S::one(), &S::zero()).with_var(Var::Y);
                let flip = Affine::flip();
                vec![
                    Atom::A(flip.inverse()),
                    Atom::B(Triangular::new(S::one(), q, S::zero()).expect("unit scale")),
                    Atom::A(flip),
                ]
            }
            _ => vec![Atom::B(g.to_triangular().expect("remaining generators are triangular"))],
        }
    }

    pub fn in_u(&self) -> bool {
        match self {
            Atom::A(a) => a.in_u(),
            Atom::B(b) => b.in_u(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Atom::A(a) => a.is_identity(),
            Atom::B(b) => b.is_identity(),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            Atom::A(a) => Atom::A(a.inverse()),
            Atom::B(b) => Atom::B(b.inverse()),
        }
    }

    pub fn to_elem(&self) -> AutElem<S> {
        match self {
            Atom::A(a) => AutElem::Affine(a.clone()),
            Atom::B(b) => AutElem::Triangular(b.clone()),
        }
    }

    /// `self ∘ o` when both lie in a common factor, in the factor of `self`
    /// whenever possible.
    fn merge(&self, o: &Self) -> Option<Self> {
        match (self, o) {
            (Atom::A(a), Atom::A(b)) => Some(Atom::A(a.compose(b))),
            (Atom::B(a), Atom::B(b)) => Some(Atom::B(a.compose(b))),
            (Atom::A(a), Atom::B(b)) => match b.to_affine() {
                Some(b) => Some(Atom::A(a.compose(&b))),
                None => a.to_triangular().map(|a| Atom::B(a.compose(b))),
            },
            (Atom::B(a), Atom::A(b)) => match b.to_triangular() {
                Some(b) => Some(Atom::B(a.compose(&b))),
                None => a.to_affine().map(|a| Atom::A(a.compose(b))),
            },
        }
    }
}

/// Appends `atom`, folding it into the top of the stack while the two lie in a
/// common factor.
fn push_atom<S: Scalar>(stack: &mut Vec<Atom<S>>, atom: Atom<S>) {
    if atom.is_identity() {
        return;
    }
    if let Some(top) = stack.last() {
        if let Some(merged) = top.merge(&atom) {
            stack.pop();
            push_atom(stack, merged);
            return;
        }
    }
    stack.push(atom);
}

/// Reduced alternating product `a_1 b_1 ... a_l b_l a_{l+1}`; factors from `U`
/// are absorbed into their left neighbour.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalForm<S> {
    factors: Vec<Atom<S>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dynamics {
    /// Conjugate into the affine or the triangular factor.
    Elementary,
    /// Cyclically reduced length at least two.
    Henon,
}

impl fmt::Display for Dynamics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dynamics::Elementary => "elementary",
            Dynamics::Henon => "henon",
        })
    }
}

impl<S: Scalar> NormalForm<S> {
    pub fn factors(&self) -> &[Atom<S>] {
        &self.factors
    }

    /// Number of triangular factors outside `U`.
    pub fn length(&self) -> usize {
        self.factors.iter().filter(|a| matches!(a, Atom::B(b) if !b.in_u())).count()
    }

    /// Product of the degrees of the triangular factors outside `U`.
    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .filter_map(|a| match a {
                Atom::B(b) if !b.in_u() => Some(b.degree()),
                _ => None,
            })
            .product()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn to_word(&self) -> AutWord<S> {
        self.factors.iter().map(Atom::to_elem).collect()
    }

    /// Conjugates away matching ends until the word is cyclically reduced.
    pub fn cyclically_reduced(&self) -> NormalForm<S> {
        let mut cur = self.factors.clone();
        loop {
            if cur.len() < 2 {
                break;
            }
            let first = &cur[0];
            let last = &cur[cur.len() - 1];
            if last.merge(first).is_none() {
                break;
            }
            // g ~ x_m ∘ x_1 ∘ ... ∘ x_{m-1}
            let mut rotated = Vec::with_capacity(cur.len());
            let last = cur.pop().expect("len >= 2");
            rotated.push(last);
            rotated.extend(cur);
            let mut stack = Vec::new();
            for a in rotated {
                push_atom(&mut stack, a);
            }
            cur = stack;
        }
        NormalForm { factors: cur }
    }

    pub fn dynamics(&self) -> Dynamics {
        if self.cyclically_reduced().factors.len() <= 1 {
            Dynamics::Elementary
        } else {
            Dynamics::Henon
        }
    }
}

impl<S: Scalar> fmt::Display for NormalForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// `true` iff `[p, q] = xy - yx`.
pub fn is_symplectic<S: Scalar>(p: &NcPoly<S>, q: &NcPoly<S>) -> bool {
    let w = NcPoly::commutator(&NcPoly::x(), &NcPoly::y());
    (&NcPoly::commutator(p, q) - &w).is_zero()
}

/// Polynomial degree of the pair `(p, q)`.
pub fn pair_degree<S: Scalar>(p: &NcPoly<S>, q: &NcPoly<S>) -> usize {
    p.degree().unwrap_or(0).max(q.degree().unwrap_or(0))
}

pub fn classify_dynamics<S: Scalar>(w: &AutWord<S>) -> Dynamics {
    w.normal_form().dynamics()
}

/// `(x + q(y), y)` for `q = c y^k`.
pub fn psi_monomial<S: Scalar>(c: S, k: usize) -> AutElem<S> {
    AutElem::psi(UniPoly::monomial(Var::Y, c, k))
}
