use std::fmt;
use std::str::FromStr;

use crate::error::{AdelicError, Result};

/// Positive parts stored in weakly increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// One diagonal hook of the Young diagram: `size` boxes, `leg + 1` of them in
/// the first column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hook {
    pub size: usize,
    /// 1-based position of the corner box counted down the column.
    pub corner: usize,
}

impl Partition {
    /// Accepts the parts in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(AdelicError::InvalidPartition(format!("{parts:?}")));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `n_j` with the convention `n_j = 0` for `j <= 0`.
    pub fn part(&self, j: i64) -> usize {
        if j <= 0 {
            0
        } else {
            self.parts.get(j as usize - 1).copied().unwrap_or(0)
        }
    }

    /// Diagonal hooks of the Young diagram whose rows are the parts in
    /// decreasing order, outermost first.
    pub fn hooks(&self) -> Vec<Hook> {
        let rows: Vec<usize> = self.parts.iter().rev().copied().collect();
        let col_len = |c: usize| rows.iter().filter(|&&r| r > c).count();
        (0..rows.len())
            .take_while(|&i| rows[i] > i)
            .map(|i| {
                let arm = rows[i] - i - 1;
                let leg = col_len(i) - i - 1;
                Hook { size: arm + leg + 1, corner: leg + 1 }
            })
            .collect()
    }
}

/// All partitions of `n`, each with weakly increasing parts, in
/// lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in min..=rest {
            if rest - p != 0 && rest - p < p {
                continue;
            }
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, 1, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = AdelicError;

    /// Accepts `1+1+2`, `1,1,2` and `(1,1,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(['+', ','])
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| AdelicError::InvalidPartition(s.to_string()))?;
        Partition::new(parts)
    }
}
