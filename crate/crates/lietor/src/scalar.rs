//! Exact scalars over Q(i): pairs of arbitrary-precision rationals kept in
//! lowest terms. Text form is canonical on output ("3", "-1/2", "i", "2-3i")
//! while the parser accepts a generous superset (whitespace, explicit "+",
//! "1i", "+i").

use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// A Gaussian rational `re + im*i`, both parts reduced `BigRational`s.
///
/// Ordering is lexicographic on (re, im); it has no algebraic meaning and
/// exists so root vectors and report rows sort deterministically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Rational `p/q`. Panics if `q == 0`; use the parser for untrusted input.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        Scalar::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, the rational norm; zero exactly when `self` is zero.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse.
    ///
    /// Returns `Error::SingularMatrix` on zero so elimination code can surface
    /// a uniform failure; internal callers divide only by known pivots.
    pub fn inv(&self) -> Result<Self, Error> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::SingularMatrix("division by zero scalar".into()));
        }
        Ok(Scalar::new(&self.re / &n, -&self.im / &n))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// Field division; panics on a zero divisor (internal callers divide only
    /// by pivot entries, which are nonzero by construction).
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inv().expect("scalar division by zero");
        self * &inv
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

/// Parses a single rational component: optional sign, digits, optional
/// `/digits`. Rejects empty digit runs and zero denominators.
fn parse_rat(s: &str) -> Result<BigRational, Error> {
    let (sign, body) = match s.as_bytes().first() {
        Some(b'-') => (-1, &s[1..]),
        Some(b'+') => (1, &s[1..]),
        _ => (1, s),
    };
    let (num_str, den_str) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if num_str.is_empty() || !num_str.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad rational '{s}'")));
    }
    let mut num = BigInt::from_str(num_str).map_err(|e| Error::Parse(e.to_string()))?;
    let den = match den_str {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad denominator in '{s}'")));
            }
            BigInt::from_str(d).map_err(|e| Error::Parse(e.to_string()))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    if sign < 0 {
        num = -num;
    }
    Ok(BigRational::new(num, den))
}

/// Parses one term that may carry a trailing `i`. Bare `i`/`-i`/`+i` mean
/// coefficient one.
fn parse_term(s: &str) -> Result<(BigRational, bool), Error> {
    if let Some(coeff) = s.strip_suffix('i') {
        let r = match coeff {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            c => parse_rat(c)?,
        };
        Ok((r, true))
    } else {
        Ok((parse_rat(s)?, false))
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `RAT`, `RATi`, `i`, `-i`, and `RAT±RATi` with optional
    /// whitespace anywhere; emission is always canonical regardless of the
    /// accepted spelling.
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // A '+' or '-' past position 0 separates the two terms; signs inside a
        // rational only ever lead it, so the first such operator is the split.
        let split = compact
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx);
        match split {
            None => {
                let (r, imag) = parse_term(&compact)?;
                if imag {
                    Ok(Scalar::new(BigRational::zero(), r))
                } else {
                    Ok(Scalar::new(r, BigRational::zero()))
                }
            }
            Some(idx) => {
                let (re, re_imag) = parse_term(&compact[..idx])?;
                let (im, im_imag) = parse_term(&compact[idx..])?;
                if re_imag || !im_imag {
                    return Err(Error::Parse(format!(
                        "expected real then imaginary term in '{s}'"
                    )));
                }
                Ok(Scalar::new(re, im))
            }
        }
    }
}

impl fmt::Display for Scalar {
    /// Canonical form: reduced rationals, `i` coefficient 1 elided, imaginary
    /// part sign folded into the separator ("2-3i", "-1/2+i", "0").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return if self.im.is_one() {
                write!(f, "i")
            } else if (-&self.im).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{}i", self.im)
            };
        }
        let (sign, mag) = if self.im.is_negative() {
            ('-', -&self.im)
        } else {
            ('+', self.im.clone())
        };
        if mag.is_one() {
            write!(f, "{}{}i", self.re, sign)
        } else {
            write!(f, "{}{}{}i", self.re, sign, mag)
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
