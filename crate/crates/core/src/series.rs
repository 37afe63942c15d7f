//! Truncation policy and tail bounds shared by every series evaluator.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{pow_principal, to_float, Number, QParam};

/// Truncation depth, tolerance and tail-bound policy.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SeriesConfig {
    /// Terms per collapsed index, or per coordinate for lattice sums.
    pub max_terms: usize,
    pub tolerance: f64,
    pub enforce_tail_bound: bool,
    /// Upper limit on the number of lattice points in an r-fold sum.
    pub term_cap: u64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            max_terms: 400,
            tolerance: 1e-10,
            enforce_tail_bound: true,
            term_cap: 10_000_000,
        }
    }
}

impl SeriesConfig {
    pub fn with_terms(mut self, m: usize) -> Self {
        self.max_terms = m;
        self
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn unchecked(mut self) -> Self {
        self.enforce_tail_bound = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 1 {
            return Err(Error::invalid("max_terms must be at least 1"));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::invalid("tolerance must be positive"));
        }
        Ok(())
    }

    pub(crate) fn accept(&self, value: Number, tail_bound: f64) -> Result<Evaluation> {
        if self.enforce_tail_bound && !(tail_bound <= self.tolerance) {
            return Err(Error::TailBound {
                bound: tail_bound,
                tolerance: self.tolerance,
                terms: self.max_terms,
            });
        }
        Ok(Evaluation { value, tail_bound })
    }

    pub(crate) fn lattice_size(&self, r: usize) -> Result<()> {
        let side = self.max_terms as u128 + 1;
        let total = side.checked_pow(r as u32).unwrap_or(u128::MAX);
        if total > self.term_cap as u128 {
            return Err(Error::TermCap {
                terms: total,
                cap: self.term_cap,
            });
        }
        Ok(())
    }
}

/// A value together with a certified bound on the discarded tail.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Number,
    pub tail_bound: f64,
}

impl Evaluation {
    pub fn exact(value: Number) -> Self {
        Evaluation {
            value,
            tail_bound: 0.0,
        }
    }
}

/// Upper bound on `|[y]_q^e|` over every bracket whose shift satisfies
/// `|q^y| <= delta`.
///
/// With `w = q^y`, `|1 - w|` lies in `[1 - delta, 1 + delta]` and its argument
/// within `asin(delta)` of zero, which bounds both the modulus and the
/// principal argument of `(1 - w) / (1 - q)`.
pub fn bracket_power_bound(q: &QParam, delta: f64, exponent: &Number) -> f64 {
    if !(delta < 1.0) {
        return f64::INFINITY;
    }
    let one_minus_q = (num_complex::Complex64::new(1.0, 0.0)) - q.value().to_complex64();
    let scale = one_minus_q.norm();
    let upper = (1.0 + delta) / scale;
    let lower = (1.0 - delta) / scale;
    let e = exponent.to_complex64();
    let modulus = upper.powf(e.re).max(lower.powf(e.re));
    if e.im == 0.0 {
        return modulus;
    }
    let arg = (one_minus_q.arg().abs() + delta.asin()).min(std::f64::consts::PI);
    modulus * (e.im.abs() * arg).exp()
}

/// Bound on `sum_{m > M} c_m` given `c_{M+1}` and a ratio `theta` valid past `M`.
pub fn ratio_tail(first: f64, theta: f64) -> f64 {
    if first == 0.0 {
        return 0.0;
    }
    if !(theta < 1.0) {
        return f64::INFINITY;
    }
    first / (1.0 - theta)
}

/// `binom(m + r - 1, m) rho^m` evaluated in floating point.
pub fn binomial_weight(m: usize, r: usize, rho: f64) -> f64 {
    let mut c = 1.0f64;
    for i in 1..r {
        c *= (m + i) as f64 / i as f64;
    }
    c * rho.powi(m as i32)
}

/// `[y]_q^e` along the brackets `y = m + x`, `m = 0, 1, ...`.
pub(crate) struct Brackets {
    one: Number,
    denom: Number,
    shift: Number,
    step: Number,
}

impl Brackets {
    /// Brackets `[x + m * step_exp]_q`, with `q^{step_exp}` supplied as `step`.
    pub(crate) fn new(q: &QParam, x: &Number, step: Number) -> Result<Self> {
        let one = q.lift(&Number::one());
        let denom = &one - q.value();
        Ok(Brackets {
            shift: q.lift(&q.pow(x)?),
            one,
            denom,
            step,
        })
    }

    pub(crate) fn unit(q: &QParam, x: &Number) -> Result<Self> {
        Self::new(q, x, q.value().clone())
    }

    /// `[x]` for the current shift, then advances by one step.
    pub(crate) fn next_bracket(&mut self) -> Result<Number> {
        let b = (&self.one - &self.shift).checked_div(&self.denom)?;
        self.shift = &self.shift * &self.step;
        Ok(b)
    }
}

/// `b^e`, with `0^e` for integer `e > 0` allowed.
pub(crate) fn bracket_power(b: &Number, e: &Number) -> Result<Number> {
    if b.is_zero() {
        if let Some(k) = e.as_integer() {
            if k > 0.into() {
                return Ok(b.clone());
            }
            if k == 0.into() {
                return Ok(match b.precision() {
                    None => Number::one(),
                    Some(p) => to_float(&Number::one(), p),
                });
            }
        }
        return Err(Error::invalid(
            "bracket [m + x]_q vanishes at a point where the exponent is not a nonnegative integer",
        ));
    }
    pow_principal(b, e)
}
