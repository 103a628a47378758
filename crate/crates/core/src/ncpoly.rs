//! Polynomials in the free associative algebra on `x` and `y`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{parse_err, CoreError, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::unipoly::{signed_coeff, UniPoly, Var};

/// Maximum word length that fits the packed representation.
pub const MAX_WORD_LEN: usize = 128;

/// A word over `{x, y}` packed one bit per letter (`x = 0`, `y = 1`), first
/// letter in the most significant position. The derived order is
/// length first, then lexicographic with `x < y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u8,
    bits: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    pub fn letter(l: Letter) -> Word {
        Word { len: 1, bits: u128::from(l == Letter::Y) }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at position `i` counted from the left.
    pub fn at(&self, i: usize) -> Letter {
        assert!(i < self.len(), "word index out of range");
        if (self.bits >> (self.len() - 1 - i)) & 1 == 1 {
            Letter::Y
        } else {
            Letter::X
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(|i| self.at(i))
    }

    pub fn concat(&self, o: &Word) -> Option<Word> {
        let len = self.len() + o.len();
        if len > MAX_WORD_LEN {
            return None;
        }
        let bits = match (self.len, o.len) {
            (0, _) => o.bits,
            (_, 0) => self.bits,
            _ => (self.bits << o.len) | o.bits,
        };
        Some(Word { len: len as u8, bits })
    }

    pub fn reversed(&self) -> Word {
        let mut bits = 0u128;
        for i in 0..self.len() {
            bits |= ((self.bits >> i) & 1) << (self.len() - 1 - i);
        }
        Word { len: self.len, bits }
    }

    pub fn from_letters(ls: impl IntoIterator<Item = Letter>) -> Result<Word> {
        let mut w = Word::EMPTY;
        for l in ls {
            w = w.concat(&Word::letter(l)).ok_or_else(|| parse_err("word too long"))?;
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let ls: Vec<Letter> = self.letters().collect();
        let mut i = 0;
        while i < ls.len() {
            let mut j = i;
            while j < ls.len() && ls[j] == ls[i] {
                j += 1;
            }
            let c = if ls[i] == Letter::X { 'x' } else { 'y' };
            match j - i {
                1 => write!(f, "{c}")?,
                k => write!(f, "{c}^{k}")?,
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = CoreError;

    /// Accepts run-length text such as `xy^2x^2`, or `1` for the empty word.
    fn from_str(s: &str) -> Result<Word> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "1" || t.is_empty() {
            return Ok(Word::EMPTY);
        }
        let mut out = Vec::new();
        let mut chars = t.chars().peekable();
        while let Some(c) = chars.next() {
            let l = match c {
                'x' => Letter::X,
                'y' => Letter::Y,
                _ => return Err(parse_err(format!("unexpected `{c}` in word `{s}`"))),
            };
            let mut reps = 1usize;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                reps = digits.parse().map_err(|_| parse_err(format!("bad exponent in `{s}`")))?;
            }
            out.extend(std::iter::repeat_n(l, reps));
        }
        Word::from_letters(out)
    }
}

/// Element of the free algebra: a finitely supported map from words to
/// nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct NcPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> NcPoly<S> {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Word::EMPTY, c)
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn x() -> Self {
        Self::monomial(Word::letter(Letter::X), S::one())
    }

    pub fn y() -> Self {
        Self::monomial(Word::letter(Letter::Y), S::one())
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Embeds a commutative polynomial in one of the generators.
    pub fn from_unipoly(p: &UniPoly<S>) -> Self {
        let letter = match p.var() {
            Var::Y => Letter::Y,
            _ => Letter::X,
        };
        let mut out = Self::zero();
        let mut w = Word::EMPTY;
        for c in p.coeffs() {
            out.add_term(w, c.clone());
            w = w.concat(&Word::letter(letter)).expect("univariate degree within word limit");
        }
        out
    }

    fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&w) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(w, merged);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of the longest stored word; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, a)| (*w, a.clone() * c.clone())))
    }

    /// Product; fails only when a word would exceed [`MAX_WORD_LEN`].
    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &o.terms {
                let w = wa.concat(wb).ok_or_else(|| CoreError::DimensionMismatch {
                    expected: format!("word length <= {MAX_WORD_LEN}"),
                    found: (wa.len() + wb.len()).to_string(),
                })?;
                out.add_term(w, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    /// Reverses every word.
    pub fn dagger(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())))
    }

    /// Evaluates at a pair of square matrices; the empty word maps to the identity.
    pub fn eval(&self, x: &Matrix<S>, y: &Matrix<S>) -> Result<Matrix<S>> {
        let n = x.rows();
        if !x.is_square() || !y.is_square() || y.rows() != n {
            return Err(CoreError::DimensionMismatch {
                expected: format!("two {n}x{n} matrices"),
                found: format!("{}x{} and {}x{}", x.rows(), x.cols(), y.rows(), y.cols()),
            });
        }
        let mut acc = Matrix::zeros(n, n);
        let mut memo: HashMap<Word, Matrix<S>> = HashMap::new();
        memo.insert(Word::EMPTY, Matrix::identity(n));
        for (w, c) in &self.terms {
            let m = word_product(*w, x, y, &mut memo);
            acc = &acc + &m.scale(c);
        }
        Ok(acc)
    }

    /// Replaces `x` by `p` and `y` by `q`.
    pub fn substitute(&self, p: &Self, q: &Self) -> Result<Self> {
        let mut out = Self::zero();
        let mut px = vec![Self::one()];
        let mut py = vec![Self::one()];
        for (w, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            let ls: Vec<Letter> = w.letters().collect();
            let mut i = 0;
            while i < ls.len() {
                let mut j = i;
                while j < ls.len() && ls[j] == ls[i] {
                    j += 1;
                }
                let (pows, base) = match ls[i] {
                    Letter::X => (&mut px, p),
                    Letter::Y => (&mut py, q),
                };
                while pows.len() <= j - i {
                    let next = pows.last().expect("nonempty").checked_mul(base)?;
                    pows.push(next);
                }
                term = term.checked_mul(&pows[j - i])?;
                i = j;
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

/// Product of the letters of `w`, sharing prefixes through `memo`.
fn word_product<S: Scalar>(
    w: Word,
    x: &Matrix<S>,
    y: &Matrix<S>,
    memo: &mut HashMap<Word, Matrix<S>>,
) -> Matrix<S> {
    if let Some(m) = memo.get(&w) {
        return m.clone();
    }
    let prefix = Word { len: w.len - 1, bits: w.bits >> 1 };
    let head = word_product(prefix, x, y, memo);
    let m = match w.at(w.len() - 1) {
        Letter::X => &head * x,
        Letter::Y => &head * y,
    };
    memo.insert(w, m.clone());
    m
}

impl<S: Scalar> Add for &NcPoly<S> {
    type Output = NcPoly<S>;
    fn add(self, o: &NcPoly<S>) -> NcPoly<S> {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(*w, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &NcPoly<S> {
    type Output = NcPoly<S>;
    fn sub(self, o: &NcPoly<S>) -> NcPoly<S> {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(*w, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul for &NcPoly<S> {
    type Output = NcPoly<S>;
    fn mul(self, o: &NcPoly<S>) -> NcPoly<S> {
        self.checked_mul(o).expect("word length overflow")
    }
}

impl<S: Scalar> Neg for &NcPoly<S> {
    type Output = NcPoly<S>;
    fn neg(self) -> NcPoly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> fmt::Debug for NcPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for NcPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, body) = signed_coeff(c);
            let sign = match (k == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let term = match (body.as_str(), w.is_empty()) {
                (b, true) => b.to_string(),
                ("1", false) => w.to_string(),
                (b, false) => format!("{b}*{w}"),
            };
            write!(f, "{sign}{term}")?;
        }
        Ok(())
    }
}

impl<S: Scalar> FromStr for NcPoly<S> {
    type Err = CoreError;

    /// Parses sums of terms `coeff*word`, `word` or `coeff`, for example
    /// `xy^2x^2 - 3/2*yx + (1+2*i)*x + 4`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(parse_err("empty polynomial"));
        }
        let mut out = Self::zero();
        for (neg, term) in split_terms(&t)? {
            let (c, w) = parse_term::<S>(term)?;
            let c = if neg { -c } else { c };
            out.add_term(w, c);
        }
        Ok(out)
    }
}

fn split_terms(t: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = t.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let prev = if i == 0 { None } else { Some(bytes[i - 1]) };
                if matches!(prev, Some(b'*' | b'^' | b'e' | b'E' | b'/')) {
                    continue;
                }
                if i > start {
                    out.push((neg, &t[start..i]));
                } else if i > 0 {
                    return Err(parse_err(format!("dangling sign in `{t}`")));
                }
                neg = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(parse_err(format!("unbalanced parentheses in `{t}`")));
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced parentheses in `{t}`")));
    }
    if start >= t.len() {
        return Err(parse_err(format!("trailing sign in `{t}`")));
    }
    out.push((neg, &t[start..]));
    Ok(out)
}

fn looks_like_word(s: &str) -> bool {
    s.starts_with(['x', 'y']) && s.chars().all(|c| matches!(c, 'x' | 'y' | '^') || c.is_ascii_digit())
}

fn parse_term<S: Scalar>(term: &str) -> Result<(S, Word)> {
    if looks_like_word(term) {
        return Ok((S::one(), term.parse()?));
    }
    if let Some(pos) = term.rfind('*') {
        let (c, w) = (&term[..pos], &term[pos + 1..]);
        if looks_like_word(w) {
            return Ok((S::parse(c)?, w.parse()?));
        }
    }
    Ok((S::parse(term)?, Word::EMPTY))
}
