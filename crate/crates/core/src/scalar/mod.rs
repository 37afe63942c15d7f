//! Numeric tower: exact rationals and complex floats with principal-branch powers.
//!
//! Arithmetic between two exact values stays exact. Anything touching a float
//! is carried out in floating point at the widest precision involved.

mod cfloat;
mod qparam;

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use cfloat::CFloat;
pub use qparam::{Mode, QParam};

use crate::error::{Error, Result};

/// Float divisors with modulus below this are treated as zero.
pub const UNDERFLOW_GUARD: f64 = 1e-300;

/// Binary precision of float values, in bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Precision(u32);

impl Precision {
    pub const DOUBLE: Precision = Precision(53);
    pub const MAX_BITS: u32 = 1 << 16;

    pub fn new(bits: u32) -> Result<Self> {
        if (2..=Self::MAX_BITS).contains(&bits) {
            Ok(Precision(bits))
        } else {
            Err(Error::invalid(format!(
                "precision must be between 2 and {} bits, got {bits}",
                Self::MAX_BITS
            )))
        }
    }

    pub(crate) fn new_unchecked(bits: u32) -> Self {
        Precision(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Whether values at this precision fit in an `f64`.
    pub fn is_native(self) -> bool {
        self.0 <= 53
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DOUBLE
    }
}

#[derive(Clone, Debug)]
pub enum Number {
    Exact(BigRational),
    Float(CFloat),
}

impl Number {
    pub fn zero() -> Self {
        Number::Exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Number::Exact(BigRational::one())
    }

    pub fn int(v: i64) -> Self {
        Number::Exact(BigRational::from_integer(BigInt::from(v)))
    }

    /// Exact `num/den`. Panics if `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        Number::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn complex(re: f64, im: f64) -> Self {
        Number::Float(CFloat::from_f64(re, im))
    }

    pub fn real(re: f64) -> Self {
        Number::complex(re, 0.0)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Number::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Number::Exact(r) => Some(r),
            Number::Float(_) => None,
        }
    }

    /// The integer value of an exact integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Number::Exact(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// `Some(n)` when the value is the integer `-n <= 0`; floats qualify
    /// when they are real and integral.
    pub fn as_nonpositive_integer(&self) -> Option<u32> {
        let k = match self {
            Number::Exact(_) => self.as_integer()?,
            Number::Float(f) => f.as_integer()?,
        };
        if k.is_positive() {
            return None;
        }
        (-k).to_u32()
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Number::Exact(r) => r.is_zero(),
            Number::Float(f) => f.is_zero(),
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Number::Exact(_) => true,
            Number::Float(f) => f.is_real(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Number::Exact(_) => true,
            Number::Float(f) => f.is_finite(),
        }
    }

    /// Precision of a float value; `None` for exact values.
    pub fn precision(&self) -> Option<Precision> {
        match self {
            Number::Exact(_) => None,
            Number::Float(f) => Some(f.precision()),
        }
    }

    pub fn to_cfloat(&self, prec: Precision) -> CFloat {
        match self {
            Number::Exact(r) => CFloat::from_rational(r, prec),
            Number::Float(f) if f.precision() == prec => f.clone(),
            Number::Float(f) => f.with_precision(prec),
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        match self {
            Number::Exact(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Number::Float(f) => f.to_complex64(),
        }
    }

    pub fn re(&self) -> f64 {
        self.to_complex64().re
    }

    pub fn modulus(&self) -> f64 {
        match self {
            Number::Exact(r) => r.abs().to_f64().unwrap_or(f64::INFINITY),
            Number::Float(f) => f.norm(),
        }
    }

    fn float_pair(&self, other: &Number) -> (CFloat, CFloat) {
        let prec = self
            .precision()
            .into_iter()
            .chain(other.precision())
            .max()
            .unwrap_or_default();
        (self.to_cfloat(prec), other.to_cfloat(prec))
    }

    fn combine(
        &self,
        other: &Number,
        exact: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        float: impl FnOnce(&CFloat, &CFloat) -> CFloat,
    ) -> Number {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => Number::Exact(exact(a, b)),
            (Number::Float(a), Number::Float(b)) => Number::Float(float(a, b)),
            _ => {
                let (a, b) = self.float_pair(other);
                Number::Float(float(&a, &b))
            }
        }
    }

    pub fn checked_div(&self, other: &Number) -> Result<Number> {
        match other {
            Number::Exact(r) if r.is_zero() => return Err(Error::DivisionByZero),
            Number::Float(f) if f.is_zero() || f.norm() < UNDERFLOW_GUARD => {
                return Err(Error::DivisionByZero)
            }
            _ => {}
        }
        Ok(self.combine(other, |a, b| a / b, |a, b| a.div(b)))
    }

    pub fn recip(&self) -> Result<Number> {
        self.unit().checked_div(self)
    }

    /// One, in the same representation as `self`.
    pub fn unit(&self) -> Number {
        match self {
            Number::Exact(_) => Number::one(),
            Number::Float(f) => Number::Float(f.one_like()),
        }
    }

    /// Integer power; stays exact for exact bases.
    pub fn powi(&self, k: i64) -> Result<Number> {
        if k == 0 {
            if self.is_zero() {
                return Err(Error::ZeroPower);
            }
            return Ok(self.unit());
        }
        if self.is_zero() {
            return if k > 0 { Ok(self.clone()) } else { Err(Error::ZeroPower) };
        }
        let positive = match self {
            Number::Exact(r) => {
                let e = i32::try_from(k.unsigned_abs())
                    .map_err(|_| Error::invalid(format!("exponent {k} too large")))?;
                Number::Exact(num_traits::Pow::pow(r, e))
            }
            Number::Float(f) => Number::Float(f.powu(k.unsigned_abs())),
        };
        if k > 0 {
            Ok(positive)
        } else {
            positive.recip()
        }
    }

    /// Principal logarithm (always a float).
    pub fn ln(&self, prec: Precision) -> Result<Number> {
        if self.is_zero() {
            return Err(Error::invalid("logarithm of zero"));
        }
        Ok(Number::Float(self.to_cfloat(prec).ln()))
    }

    pub fn render(&self, digits: Option<usize>) -> String {
        match self {
            Number::Exact(r) => r.to_string(),
            Number::Float(f) => f.render(digits),
        }
    }

    /// Parses a literal: `p`, `p/q` are exact; decimals and `a+bi` forms are
    /// floats at `prec`.
    pub fn parse_with_precision(s: &str, prec: Precision) -> Result<Number> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::parse("number", s));
        }
        if let Some(r) = parse_exact(&t) {
            return Ok(Number::Exact(r));
        }
        let (re, im) = split_complex(&t).ok_or_else(|| Error::parse("number", s))?;
        CFloat::parse_parts(&re, &im, prec)
            .map(Number::Float)
            .ok_or_else(|| Error::parse("number", s))
    }
}

fn parse_exact(t: &str) -> Option<BigRational> {
    let is_int = |p: &str| {
        let digits = p.strip_prefix(['+', '-']).unwrap_or(p);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    match t.split_once('/') {
        Some((n, d)) if is_int(n) && is_int(d) => {
            let n: BigInt = n.trim_start_matches('+').parse().ok()?;
            let d: BigInt = d.trim_start_matches('+').parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None if is_int(t) => Some(BigRational::from_integer(
            t.trim_start_matches('+').parse().ok()?,
        )),
        _ => None,
    }
}

/// Splits `a+bi`, `a-bi`, `bi`, `i` or `a` into decimal component strings.
fn split_complex(t: &str) -> Option<(String, String)> {
    let Some(body) = t.strip_suffix('i') else {
        return Some((t.to_owned(), "0".to_owned()));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1".to_owned(),
        "-" => "-1".to_owned(),
        other => other.trim_start_matches('+').to_owned(),
    };
    Some((re.to_owned(), im))
}

impl FromStr for Number {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Number::parse_with_precision(s, Precision::DOUBLE)
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

impl PartialEq for Number {
    fn eq(&self, other: &Number) -> bool {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => a == b,
            _ => {
                let (a, b) = self.float_pair(other);
                a.approx_cmp_parts(&b)
            }
        }
    }
}

impl From<BigRational> for Number {
    fn from(r: BigRational) -> Self {
        Number::Exact(r)
    }
}

impl From<i64> for Number {
    fn from(v: i64) -> Self {
        Number::int(v)
    }
}

impl From<CFloat> for Number {
    fn from(f: CFloat) -> Self {
        Number::Float(f)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $exact:expr, $float:ident) => {
        impl $trait<&Number> for &Number {
            type Output = Number;
            fn $method(self, rhs: &Number) -> Number {
                self.combine(rhs, $exact, |a, b| a.$float(b))
            }
        }
        impl $trait<Number> for Number {
            type Output = Number;
            fn $method(self, rhs: Number) -> Number {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Number> for Number {
            type Output = Number;
            fn $method(self, rhs: &Number) -> Number {
                (&self).$method(rhs)
            }
        }
        impl $trait<Number> for &Number {
            type Output = Number;
            fn $method(self, rhs: Number) -> Number {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a + b, add);
binop!(Sub, sub, |a, b| a - b, sub);
binop!(Mul, mul, |a, b| a * b, mul);

impl Neg for &Number {
    type Output = Number;
    fn neg(self) -> Number {
        match self {
            Number::Exact(r) => Number::Exact(-r),
            Number::Float(f) => Number::Float(f.neg()),
        }
    }
}

impl Neg for Number {
    type Output = Number;
    fn neg(self) -> Number {
        -&self
    }
}

impl Sum for Number {
    fn sum<I: Iterator<Item = Number>>(iter: I) -> Number {
        iter.fold(Number::zero(), |acc, v| acc + v)
    }
}

impl<'a> Sum<&'a Number> for Number {
    fn sum<I: Iterator<Item = &'a Number>>(iter: I) -> Number {
        iter.fold(Number::zero(), |acc, v| acc + v)
    }
}

/// `base^exponent` on the principal branch, `exp(exponent * Log base)`.
///
/// Integer exponents on exact bases stay exact; every other combination
/// yields a float at the widest precision among the operands.
pub fn pow_principal(base: &Number, exponent: &Number) -> Result<Number> {
    if let Some(k) = exponent.as_integer() {
        let k = k
            .to_i64()
            .ok_or_else(|| Error::invalid(format!("exponent {k} too large")))?;
        return base.powi(k);
    }
    let prec = base
        .precision()
        .into_iter()
        .chain(exponent.precision())
        .max()
        .unwrap_or_default();
    if base.is_zero() {
        return if exponent.re() > 0.0 {
            Ok(Number::Float(CFloat::from_rational(&BigRational::zero(), prec)))
        } else {
            Err(Error::ZeroPower)
        };
    }
    let b = base.to_cfloat(prec);
    if let Number::Float(e) = exponent {
        if let Some(k) = e.as_integer().and_then(|k| k.to_i64()) {
            let p = Number::Float(b).powi(k)?;
            return Ok(p);
        }
    }
    let e = exponent.to_cfloat(prec);
    Ok(Number::Float(e.mul(&b.ln()).exp()))
}

/// Like [`pow_principal`] but refuses anything that would leave exact arithmetic.
pub fn pow_exact(base: &Number, exponent: &Number) -> Result<Number> {
    if base.is_exact() && exponent.as_integer().is_none() {
        return Err(Error::InexactPower(exponent.to_string()));
    }
    pow_principal(base, exponent)
}

/// Rounds to the nearest float at `prec`.
pub fn to_float(x: &Number, prec: Precision) -> Number {
    Number::Float(x.to_cfloat(prec))
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
