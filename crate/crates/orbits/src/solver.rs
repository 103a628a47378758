//! Elimination for the small polynomial systems met in orbit classification.

use tamecm_core::{MultiPoly, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<S> {
    /// A common zero; variables left free are set to 0.
    Solution(Vec<S>),
    /// Every step taken was forced, so there is no common zero.
    Inconsistent,
    /// No forced step is available (or the step budget ran out).
    Stuck,
}

/// Repeatedly eliminates a variable that occurs linearly with constant
/// coefficient, or pins a variable whose univariate equations share exactly
/// one root. Only forced steps are taken, so `Inconsistent` is a proof.
pub fn solve_system<S: Scalar>(mut eqs: Vec<MultiPoly<S>>, nvars: usize, max_steps: usize) -> SolveOutcome<S> {
    let mut bindings: Vec<(usize, MultiPoly<S>)> = Vec::new();
    for _ in 0..max_steps {
        eqs.retain(|e| !e.is_zero());
        if eqs.iter().any(|e| e.as_constant().is_some()) {
            return SolveOutcome::Inconsistent;
        }
        if eqs.is_empty() {
            return SolveOutcome::Solution(back_substitute(nvars, &bindings));
        }
        let step = linear_step(&eqs).or_else(|| univariate_step(&eqs, nvars));
        match step {
            Some(Step::Bind(i, value)) => {
                eqs = eqs.iter().map(|e| e.substitute(i, &value)).collect();
                bindings.push((i, value));
            }
            Some(Step::NoRoot) => return SolveOutcome::Inconsistent,
            None => return SolveOutcome::Stuck,
        }
    }
    SolveOutcome::Stuck
}

enum Step<S> {
    Bind(usize, MultiPoly<S>),
    NoRoot,
}

fn linear_step<S: Scalar>(eqs: &[MultiPoly<S>]) -> Option<Step<S>> {
    let mut sorted: Vec<&MultiPoly<S>> = eqs.iter().collect();
    sorted.sort_by_key(|e| e.total_degree());
    sorted.into_iter().find_map(|e| {
        e.support()
            .into_iter()
            .rev()
            .find_map(|i| e.solve_linear_in(i).map(|v| Step::Bind(i, v)))
    })
}

fn univariate_step<S: Scalar>(eqs: &[MultiPoly<S>], nvars: usize) -> Option<Step<S>> {
    for i in 0..nvars {
        let polys: Vec<_> = eqs
            .iter()
            .filter(|e| e.support() == [i])
            .filter_map(|e| e.to_univariate(i))
            .collect();
        let Some(first) = polys.first() else { continue };
        let g = polys[1..].iter().fold(first.clone(), |acc, p| acc.gcd(p));
        let shared = g.gcd(&g.derivative());
        let squarefree = g.div_rem(&shared).map(|(q, _)| q).unwrap_or(g);
        match squarefree.degree() {
            Some(0) | None => return Some(Step::NoRoot),
            Some(1) => {
                let c = squarefree.coeffs();
                let root = -(c[0].clone() / c[1].clone());
                return Some(Step::Bind(i, MultiPoly::constant(nvars, root)));
            }
            _ => continue,
        }
    }
    None
}

fn back_substitute<S: Scalar>(nvars: usize, bindings: &[(usize, MultiPoly<S>)]) -> Vec<S> {
    let mut values = vec![S::zero(); nvars];
    for (i, expr) in bindings.iter().rev() {
        values[*i] = expr.eval(&values);
    }
    values
}
