//! Ground fields: exact Gaussian rationals `Qi` and tolerance-compared complex floats `Cf`.
//!
//! Algebra in the rest of the workspace is generic over [`Scalar`], so the two
//! backends can never meet inside one computation.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{parse_err, CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

impl FromStr for Backend {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(parse_err(format!("unknown backend `{other}`"))),
        }
    }
}

/// Field contract shared by both backends.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// `num/den`; panics when `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    /// The imaginary unit.
    fn imag_unit() -> Self;
    fn is_zero(&self) -> bool;
    /// Zero relative to a magnitude scale (exact backend ignores the scale).
    fn is_negligible(&self, scale: f64) -> bool;
    fn inv(&self) -> Option<Self>;
    /// Approximate modulus, used for pivoting and reporting.
    fn abs_f64(&self) -> f64;
    fn to_c64(&self) -> Complex64;
    /// Exact conversion of the binary float value (exact backend) or a copy (float backend).
    fn from_c64(c: Complex64) -> Self;
    fn parse(s: &str) -> Result<Self>;

    fn is_one(&self) -> bool {
        (self.clone() - Self::one()).is_zero()
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Integer power allowing negative exponents.
    fn powi(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.inv().map(|v| v.pow((-e) as u32))
        }
    }
}

// ---------------------------------------------------------------------------
// exact backend

/// Gaussian rational `re + im*i` with arbitrary-precision components.
#[derive(Clone, PartialEq, Eq)]
pub struct Qi {
    re: BigRational,
    im: BigRational,
}

impl Hash for Qi {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.re.numer().hash(state);
        self.re.denom().hash(state);
        self.im.numer().hash(state);
        self.im.denom().hash(state);
    }
}

impl Qi {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Qi { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Qi { re, im: BigRational::zero() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Qi { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Debug for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Qi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Add for Qi {
    type Output = Qi;
    fn add(self, o: Qi) -> Qi {
        Qi { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Qi {
    type Output = Qi;
    fn sub(self, o: Qi) -> Qi {
        Qi { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Qi {
    type Output = Qi;
    fn mul(self, o: Qi) -> Qi {
        if self.im.is_zero() && o.im.is_zero() {
            return Qi::real(self.re * o.re);
        }
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        Qi { re, im }
    }
}

impl Div for Qi {
    type Output = Qi;
    fn div(self, o: Qi) -> Qi {
        self * o.inv().expect("division by zero Gaussian rational")
    }
}

impl Neg for Qi {
    type Output = Qi;
    fn neg(self) -> Qi {
        Qi { re: -self.re, im: -self.im }
    }
}

impl Scalar for Qi {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Qi::real(BigRational::zero())
    }
    fn one() -> Self {
        Qi::real(BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        Qi::real(BigRational::from_integer(BigInt::from(v)))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Qi::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    fn from_bigint(v: &BigInt) -> Self {
        Qi::real(BigRational::from_integer(v.clone()))
    }
    fn imag_unit() -> Self {
        Qi { re: BigRational::zero(), im: BigRational::one() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn is_negligible(&self, _scale: f64) -> bool {
        self.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Qi::real(self.re.recip()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Qi { re: &self.re / &norm, im: -(&self.im / &norm) })
    }
    fn abs_f64(&self) -> f64 {
        let c = self.to_c64();
        c.norm()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn from_c64(c: Complex64) -> Self {
        let conv = |v: f64| BigRational::from_float(v).unwrap_or_else(BigRational::zero);
        Qi { re: conv(c.re), im: conv(c.im) }
    }
    fn parse(s: &str) -> Result<Self> {
        let (re, im) = split_complex(s)?;
        let re = match re {
            Some(t) => parse_exact_real(&t)?,
            None => BigRational::zero(),
        };
        let im = match im {
            Some(t) => parse_exact_real(&t)?,
            None => BigRational::zero(),
        };
        Ok(Qi { re, im })
    }
}

impl FromStr for Qi {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        <Qi as Scalar>::parse(s)
    }
}

// ---------------------------------------------------------------------------
// float backend

pub const DEFAULT_TOL: f64 = 1e-9;

/// Complex float carrying its own comparison tolerance.
#[derive(Clone, Copy)]
pub struct Cf {
    re: f64,
    im: f64,
    tol: f64,
}

impl Cf {
    pub fn new(re: f64, im: f64) -> Self {
        Cf { re, im, tol: DEFAULT_TOL }
    }

    pub fn with_tol(re: f64, im: f64, tol: f64) -> Self {
        assert!(tol > 0.0, "tolerance must be positive");
        Cf { re, im, tol }
    }

    pub fn retol(self, tol: f64) -> Self {
        Cf::with_tol(self.re, self.im, tol)
    }

    pub fn re(&self) -> f64 {
        self.re
    }
    pub fn im(&self) -> f64 {
        self.im
    }
    pub fn tol(&self) -> f64 {
        self.tol
    }

    fn c(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    fn lift(c: Complex64, tol: f64) -> Cf {
        Cf { re: c.re, im: c.im, tol }
    }

    pub fn sqrt(&self) -> Cf {
        Cf::lift(self.c().sqrt(), self.tol)
    }

    /// `exp(2*pi*i*k/d)`.
    pub fn root_of_unity(k: i64, d: i64) -> Cf {
        let ang = 2.0 * std::f64::consts::PI * (k as f64) / (d as f64);
        Cf::new(ang.cos(), ang.sin())
    }
}

impl fmt::Debug for Cf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Sign bit rather than `< 0.0` so that -0.0 survives a round trip.
        if self.im == 0.0 && self.im.is_sign_positive() {
            write!(f, "{}", self.re)
        } else if self.im.is_sign_negative() {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl PartialEq for Cf {
    fn eq(&self, o: &Cf) -> bool {
        let tol = self.tol.max(o.tol);
        let d = (self.c() - o.c()).norm();
        d <= tol * 1f64.max(self.c().norm()).max(o.c().norm())
    }
}

impl Add for Cf {
    type Output = Cf;
    fn add(self, o: Cf) -> Cf {
        Cf::lift(self.c() + o.c(), self.tol.max(o.tol))
    }
}
impl Sub for Cf {
    type Output = Cf;
    fn sub(self, o: Cf) -> Cf {
        Cf::lift(self.c() - o.c(), self.tol.max(o.tol))
    }
}
impl Mul for Cf {
    type Output = Cf;
    fn mul(self, o: Cf) -> Cf {
        Cf::lift(self.c() * o.c(), self.tol.max(o.tol))
    }
}
impl Div for Cf {
    type Output = Cf;
    fn div(self, o: Cf) -> Cf {
        Cf::lift(self.c() / o.c(), self.tol.max(o.tol))
    }
}
impl Neg for Cf {
    type Output = Cf;
    fn neg(self) -> Cf {
        Cf::lift(-self.c(), self.tol)
    }
}

impl Scalar for Cf {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Cf::new(0.0, 0.0)
    }
    fn one() -> Self {
        Cf::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Cf::new(v as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Cf::new(num as f64 / den as f64, 0.0)
    }
    fn from_bigint(v: &BigInt) -> Self {
        Cf::new(v.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn imag_unit() -> Self {
        Cf::new(0.0, 1.0)
    }
    fn is_zero(&self) -> bool {
        self.c().norm() <= self.tol
    }
    fn is_negligible(&self, scale: f64) -> bool {
        self.c().norm() <= self.tol * scale.max(1.0)
    }
    fn inv(&self) -> Option<Self> {
        if self.re == 0.0 && self.im == 0.0 {
            None
        } else {
            Some(Cf::lift(self.c().inv(), self.tol))
        }
    }
    fn abs_f64(&self) -> f64 {
        self.c().norm()
    }
    fn to_c64(&self) -> Complex64 {
        self.c()
    }
    fn from_c64(c: Complex64) -> Self {
        Cf::new(c.re, c.im)
    }
    fn parse(s: &str) -> Result<Self> {
        let (re, im) = split_complex(s)?;
        let re = match re {
            Some(t) => parse_float_real(&t)?,
            None => 0.0,
        };
        let im = match im {
            Some(t) => parse_float_real(&t)?,
            None => 0.0,
        };
        Ok(Cf::new(re, im))
    }
}

impl FromStr for Cf {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        <Cf as Scalar>::parse(s)
    }
}

// ---------------------------------------------------------------------------
// text forms

/// Splits `a+b*i`, `a-bi`, `b*i`, `i`, `a` into real and imaginary substrings
/// (imaginary one keeps its sign, `"+"`/`"-"`/`""` mean unit).
fn split_complex(s: &str) -> Result<(Option<String>, Option<String>)> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(parse_err("empty scalar"));
    }
    let t = t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).map(str::to_string).unwrap_or(t);
    let Some(body) = t.strip_suffix('i') else {
        return Ok((Some(t), None));
    };
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        let ch = bytes[k];
        if (ch == b'+' || ch == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let (re, im) = match split {
        Some(k) => (Some(body[..k].to_string()), body[k..].to_string()),
        None => (None, body.to_string()),
    };
    let im = im.strip_suffix('*').map(str::to_string).unwrap_or(im);
    let im = match im.as_str() {
        "" | "+" => "1".to_string(),
        "-" => "-1".to_string(),
        other => other.to_string(),
    };
    Ok((re, Some(im)))
}

fn parse_exact_real(s: &str) -> Result<BigRational> {
    let s = s.strip_prefix('+').unwrap_or(s);
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_decimal(n)?;
        let d = parse_decimal(d)?;
        if d.is_zero() {
            return Err(parse_err("zero denominator"));
        }
        return Ok(n / d);
    }
    parse_decimal(s)
}

/// Exact value of a decimal literal such as `-12.5e-3`.
fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || parse_err(format!("invalid number `{s}`"));
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (mant, exp) = match body.find(['e', 'E']) {
        Some(k) => (&body[..k], body[k + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(digits.parse::<BigInt>().map_err(|_| bad())?);
    let shift = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= num_traits::pow(ten, shift as usize);
    } else {
        value /= num_traits::pow(ten, (-shift) as usize);
    }
    Ok(if neg { -value } else { value })
}

fn parse_float_real(s: &str) -> Result<f64> {
    let s = s.strip_prefix('+').unwrap_or(s);
    if let Some((n, d)) = s.split_once('/') {
        let n: f64 = n.parse().map_err(|_| parse_err(format!("invalid number `{s}`")))?;
        let d: f64 = d.parse().map_err(|_| parse_err(format!("invalid number `{s}`")))?;
        return Ok(n / d);
    }
    s.parse().map_err(|_| parse_err(format!("invalid number `{s}`")))
}

/// Shorthand for small exact integers in tests and tables.
pub fn qi(v: i64) -> Qi {
    Qi::from_i64(v)
}

/// Shorthand for `re + im*i` with integer parts.
pub fn qi_c(re: i64, im: i64) -> Qi {
    Qi::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

/// Shorthand for `num/den`.
pub fn qr(num: i64, den: i64) -> Qi {
    Qi::from_ratio(num, den)
}
