//! Exponent sets, their stabilizing semigroups and the Borel generator lists.

use std::fmt;

use tamecm_autgroup::psi_monomial;
use tamecm_cmspace::{pgl_equivalent, PglVerdict};
use tamecm_core::{qi, Qi, Scalar};

use crate::cofinite::CofiniteSet;
use crate::error::Result;
use crate::fixed::{fixed_point, is_nilpotent};
use crate::partition::Partition;

/// `R_μ = {0} ∪ {r_i = i + n_k - n_{k-i} : i >= 1}`.
pub fn exponents(mu: &Partition) -> CofiniteSet {
    let k = mu.len() as i64;
    let nk = mu.part(k);
    let r = |i: i64| i as usize + nk - mu.part(k - i);
    let members = std::iter::once(0).chain((1..k).map(r));
    CofiniteSet::new(r(k), members)
}

/// `S = {k >= 1 : k + R ⊆ R}`.
pub fn semigroup(r: &CofiniteSet) -> CofiniteSet {
    r.stabilizing_semigroup()
}

/// `B(μ) = T ⋉ <(x + λ y^e, y) : e in generators>`.
#[derive(Clone, Debug, PartialEq)]
pub struct BorelDescription {
    partition: Partition,
    generators: CofiniteSet,
}

impl BorelDescription {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Exponents `s - 1` for `s` in the semigroup.
    pub fn generator_exponents(&self) -> &CofiniteSet {
        &self.generators
    }

    /// Text such as `Cy^2 + y^4C[y]`.
    pub fn span(&self) -> String {
        let mono = |e: usize| if e == 1 { "y".to_string() } else { format!("y^{e}") };
        let mut parts: Vec<String> = self.generators.finite_part().iter().map(|&e| format!("C{}", mono(e))).collect();
        parts.push(format!("{}C[y]", mono(self.generators.threshold())));
        parts.join(" + ")
    }

    pub fn table_line(&self) -> String {
        format!("B{} = T ⋉ {{Psi_q : q ∈ {}}}", self.partition, self.span())
    }
}

impl fmt::Display for BorelDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.table_line())
    }
}

pub fn borel_description(mu: &Partition) -> BorelDescription {
    let s = semigroup(&exponents(mu));
    BorelDescription { partition: mu.clone(), generators: s.shifted_down() }
}

/// How a single `Ψ_{λ y^e}` was judged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// An invertible intertwiner back to the fixed point.
    Witness,
    /// The moved `X` is not nilpotent.
    NotNilpotent,
    /// The intertwiner space is zero.
    NoIntertwiner,
    /// Intertwiners exist but none invertible was found.
    SearchExhausted,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerCheck {
    pub exponent: usize,
    pub lambda: Qi,
    pub expected_fixed: bool,
    pub evidence: Evidence,
}

impl StabilizerCheck {
    pub fn passed(&self) -> bool {
        self.expected_fixed == (self.evidence == Evidence::Witness)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StabilizerReport {
    pub partition: Partition,
    pub checks: Vec<StabilizerCheck>,
}

impl StabilizerReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(StabilizerCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &StabilizerCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Acts by `Ψ_{λ y^e}` on the fixed point for `e <= max_exp` and
/// `λ in {1, i, 2}` and compares the outcome with the generator list.
pub fn verify_stabilizer(mu: &Partition, max_exp: usize) -> Result<StabilizerReport> {
    let point = fixed_point::<Qi>(mu)?;
    let gens = borel_description(mu).generators;
    let mut checks = Vec::new();
    for e in 1..=max_exp {
        for lambda in [qi(1), Qi::imag_unit(), qi(2)] {
            let moved = point.act_elem(&psi_monomial(lambda.clone(), e))?;
            let evidence = if !is_nilpotent(moved.x()) {
                Evidence::NotNilpotent
            } else {
                match pgl_equivalent(&moved, &point)? {
                    PglVerdict::Equivalent(_) => Evidence::Witness,
                    PglVerdict::Inequivalent => Evidence::NoIntertwiner,
                    PglVerdict::ProbablyInequivalent { .. } => Evidence::SearchExhausted,
                }
            };
            checks.push(StabilizerCheck { exponent: e, lambda, expected_fixed: gens.contains(e), evidence });
        }
    }
    Ok(StabilizerReport { partition: mu.clone(), checks })
}

/// Whether `Ψ_{c y^e}` is listed for `μ`; `c` only has to be nonzero.
pub fn is_generator<S: Scalar>(mu: &Partition, e: usize, c: &S) -> bool {
    !c.is_zero() && borel_description(mu).generators.contains(e)
}
