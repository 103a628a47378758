use std::fmt;

/// A set of naturals containing every integer from `threshold` on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofiniteSet {
    threshold: usize,
    below: Vec<usize>,
}

impl CofiniteSet {
    /// `members ∪ {k : k >= threshold}`, canonicalized.
    pub fn new(threshold: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut below: Vec<usize> = members.into_iter().filter(|&m| m < threshold).collect();
        below.sort_unstable();
        below.dedup();
        let mut threshold = threshold;
        while below.last() == Some(&(threshold.wrapping_sub(1))) && threshold > 0 {
            below.pop();
            threshold -= 1;
        }
        CofiniteSet { threshold, below }
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// Members smaller than the threshold.
    pub fn finite_part(&self) -> &[usize] {
        &self.below
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= self.threshold || self.below.binary_search(&k).is_ok()
    }

    /// Members up to and including `bound`.
    pub fn members_up_to(&self, bound: usize) -> Vec<usize> {
        (0..=bound).filter(|&k| self.contains(k)).collect()
    }

    /// `{k >= 1 : k + self ⊆ self}`.
    pub fn stabilizing_semigroup(&self) -> CofiniteSet {
        let members = (1..self.threshold).filter(|&k| {
            (0..self.threshold).filter(|&r| self.contains(r)).all(|r| self.contains(k + r))
        });
        CofiniteSet::new(self.threshold.max(1), members)
    }

    /// Shifts every member down by one, dropping 0.
    pub fn shifted_down(&self) -> CofiniteSet {
        CofiniteSet::new(
            self.threshold.saturating_sub(1),
            self.below.iter().filter(|&&k| k > 0).map(|k| k - 1),
        )
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = self.below.iter().map(ToString::to_string).collect();
        for k in self.threshold..self.threshold + 3 {
            items.push(k.to_string());
        }
        write!(f, "{{{}, ...}}", items.join(", "))
    }
}
