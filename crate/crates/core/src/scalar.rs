//! Exact arithmetic over the Gaussian rationals ℚ(i).
//!
//! Every scalar in this crate is a [`GaussianRational`]: a complex number
//! whose real and imaginary parts are arbitrary-precision rationals in
//! canonical reduced form. Equality is therefore structural, and every
//! arithmetic identity this crate asserts holds exactly.
//!
//! The text encoding is strict and canonical so that parsing and printing
//! round-trip bit-exactly: rationals print as `n/d` (`n` when the
//! denominator is 1), complex values as `re`, `imi`, or `re±imi` with an
//! explicit sign between the parts, e.g. `1/4-1/4i`, `0`, `1i`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar; reduced form with positive denominator is
/// maintained by every operation.
pub type Rational = BigRational;

/// Builds the rational `n/d`. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form of a rational: `n/d`, or `n` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical rational encoding. Rejects anything that does not
/// reprint to the input byte-for-byte (unreduced fractions, leading zeros,
/// explicit `+`, `/1` denominators).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let value = parse_rational_loose(text)?;
    if format_rational(&value) != text {
        return Err(Error::InvalidScalar {
            text: text.to_string(),
            reason: "not in canonical form".to_string(),
        });
    }
    Ok(value)
}

fn parse_rational_loose(text: &str) -> Result<Rational> {
    let err = |reason: &str| Error::InvalidScalar {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = parse_int(numer_text).ok_or_else(|| err("invalid numerator"))?;
    let denom = match denom_text {
        Some(d) => {
            let d = parse_int(d).ok_or_else(|| err("invalid denominator"))?;
            if d.is_negative() {
                return Err(err("denominator must be positive"));
            }
            if d.is_zero() {
                return Err(err("denominator is zero"));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(numer, denom))
}

fn parse_int(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text).ok()
}

/// An exact complex scalar `re + im·i` with rational components.
///
/// Values are immutable and all operations are pure, so they are freely
/// shareable between threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(integer(n))
    }

    /// The rational `n/d` as a complex scalar. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_real(rational(n, d))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate `re − im·i`; an involution.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus `re² + im²`, always a nonnegative rational.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Exact division; errors when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Divides by a rational scalar. Panics if `rhs` is zero.
    pub fn div_rational(&self, rhs: &Rational) -> Self {
        assert!(!rhs.is_zero(), "division by zero rational");
        Self::new(&self.re / rhs, &self.im / rhs)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics when `rhs` is zero; use [`GaussianRational::checked_div`] for a
/// fallible division.
impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: Self) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}i", format_rational(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}i",
            format_rational(&self.re),
            sign,
            format_rational(&self.im.abs())
        )
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Parses the canonical complex encoding; anything that would not
    /// reprint identically is rejected.
    fn from_str(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::InvalidScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() || !text.is_ascii() {
            return Err(err("empty or non-ascii scalar"));
        }
        let value = match text.strip_suffix('i') {
            None => Self::from_real(parse_rational_loose(text)?),
            Some(body) => {
                if body.is_empty() {
                    return Err(err("imaginary part must spell its coefficient, e.g. `1i`"));
                }
                // The only interior sign in a canonical string separates the
                // real part from the imaginary part.
                match body[1..].find(['+', '-']).map(|p| p + 1) {
                    None => Self::new(Rational::zero(), parse_rational_loose(body)?),
                    Some(pos) => {
                        let re = parse_rational_loose(&body[..pos])?;
                        let magnitude = parse_rational_loose(&body[pos + 1..])?;
                        let im = if body.as_bytes()[pos] == b'-' {
                            -magnitude
                        } else {
                            magnitude
                        };
                        Self::new(re, im)
                    }
                }
            }
        };
        if value.to_string() != text {
            return Err(err("not in canonical form"));
        }
        Ok(value)
    }
}
