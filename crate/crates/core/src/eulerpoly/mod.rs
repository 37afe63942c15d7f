//! q-Euler polynomial families: basic, order `r`, `(h, r)`, their
//! character twists, and the Barnes-type families.

mod barnes;
mod plain;
mod twisted;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use barnes::{barnes_euler, barnes_euler_chi, BarnesParams};
pub use plain::{euler_poly, euler_poly_hr, euler_poly_order};
pub use twisted::{euler_chi, euler_chi_hr, euler_chi_order};

pub(crate) use barnes::barnes_series;
pub(crate) use plain::{hr_guard, hr_weights, order_weights};
pub(crate) use twisted::{chi_hr_weights, chi_order_weights, distribution_points, residue_argument};

use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::scalar::{Number, QParam};
use crate::series::{
    bracket_power, bracket_power_bound, ratio_tail, Brackets, Evaluation, SeriesConfig,
};

/// Which representation of a family to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Finite sum over `l = 0..=n`.
    Closed,
    /// Truncated infinite series.
    Series,
    /// Finite sum over residues mod `f`, with modulus `q^f`.
    Distribution,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Closed => "closed",
            Method::Series => "series",
            Method::Distribution => "distribution",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "series" => Ok(Method::Series),
            "distribution" => Ok(Method::Distribution),
            _ => Err(Error::parse("method", s)),
        }
    }
}

/// A polynomial family together with its indices.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Basic,
    OrderR { r: u32 },
    HR { h: i64, r: u32 },
    Chi { chi: DirichletCharacter },
    ChiOrderR { r: u32, chi: DirichletCharacter },
    ChiHR { h: i64, r: u32, chi: DirichletCharacter },
    Barnes { params: BarnesParams },
    BarnesChi { chi: DirichletCharacter, params: BarnesParams },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Basic => "basic",
            Family::OrderR { .. } => "order-r",
            Family::HR { .. } => "hr",
            Family::Chi { .. } => "chi",
            Family::ChiOrderR { .. } => "chi-order-r",
            Family::ChiHR { .. } => "chi-hr",
            Family::Barnes { .. } => "barnes",
            Family::BarnesChi { .. } => "barnes-chi",
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            Family::Basic | Family::Chi { .. } => 1,
            Family::OrderR { r } | Family::HR { r, .. } => *r,
            Family::ChiOrderR { r, .. } | Family::ChiHR { r, .. } => *r,
            Family::Barnes { params } | Family::BarnesChi { params, .. } => params.order(),
        }
    }

    pub fn character(&self) -> Option<&DirichletCharacter> {
        match self {
            Family::Chi { chi }
            | Family::ChiOrderR { chi, .. }
            | Family::ChiHR { chi, .. }
            | Family::BarnesChi { chi, .. } => Some(chi),
            _ => None,
        }
    }

    pub fn methods(&self) -> &'static [Method] {
        use Method::*;
        match self {
            Family::Basic => &[Closed],
            Family::OrderR { .. } | Family::HR { .. } | Family::Barnes { .. } => &[Closed, Series],
            Family::Chi { .. } => &[Series, Distribution],
            Family::ChiOrderR { .. } => &[Closed, Series],
            Family::ChiHR { .. } => &[Closed, Series, Distribution],
            Family::BarnesChi { .. } => &[Series],
        }
    }

    pub fn default_method(&self) -> Method {
        self.methods()[0]
    }
}

/// Degree plus family; evaluates `E_n` of the family at `(q, x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerFamilySpec {
    pub family: Family,
    pub n: u32,
}

impl EulerFamilySpec {
    pub fn new(family: Family, n: u32) -> Self {
        EulerFamilySpec { family, n }
    }

    pub fn evaluate(
        &self,
        q: &QParam,
        x: &Number,
        method: Option<Method>,
        cfg: &SeriesConfig,
    ) -> Result<Evaluation> {
        let method = method.unwrap_or_else(|| self.family.default_method());
        if !self.family.methods().contains(&method) {
            return Err(Error::invalid(format!(
                "method {method} is not available for family {}",
                self.family.name()
            )));
        }
        let n = self.n;
        match &self.family {
            Family::Basic => euler_poly(n, q, x).map(Evaluation::exact),
            Family::OrderR { r } => euler_poly_order(n, *r, q, x, method, cfg),
            Family::HR { h, r } => euler_poly_hr(n, *h, *r, q, x, method, cfg),
            Family::Chi { chi } => euler_chi(n, chi, q, x, method, cfg),
            Family::ChiOrderR { r, chi } => euler_chi_order(n, *r, chi, q, x, method, cfg),
            Family::ChiHR { h, r, chi } => euler_chi_hr(n, *h, *r, chi, q, x, method, cfg),
            Family::Barnes { params } => barnes_euler(n, params, q, x, method, cfg),
            Family::BarnesChi { chi, params } => barnes_euler_chi(n, chi, params, q, x, cfg),
        }
    }
}

pub(crate) fn check_order(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::invalid("order r must be at least 1"));
    }
    Ok(())
}

/// `[2]_q = 1 + q`.
pub(crate) fn two_q(q: &QParam) -> Number {
    q.lift(&Number::one()) + q.value()
}

pub(crate) fn signed_binomial(n: u32, l: u32) -> Number {
    let c = crate::scalar::binomial(n as u64, l as u64);
    let c = if l % 2 == 1 { -c } else { c };
    Number::Exact(BigRational::from_integer(c))
}

/// `(1 - q)^{-n} sum_l binom(n, l) (-1)^l q^{lx} factor(l)`.
pub(crate) fn binomial_transform(
    n: u32,
    q: &QParam,
    x: &Number,
    mut factor: impl FnMut(u32) -> Result<Number>,
) -> Result<Number> {
    let qx = q.lift(&q.pow(x)?);
    let one = q.lift(&Number::one());
    let mut qlx = one.clone();
    let mut sum = q.lift(&Number::zero());
    for l in 0..=n {
        sum = sum + signed_binomial(n, l) * &qlx * factor(l)?;
        qlx = qlx * &qx;
    }
    sum.checked_div(&(&one - q.value()).powi(n as i64)?)
}

/// Weights `c_m` of a single-index series `[2]_q^r sum_m c_m [m + x]_q^e`,
/// with the data needed to bound its tail: `|c_m| <= majorant_m` where
/// `majorant_{M+1} = first` and `majorant_{m+1} / majorant_m <= theta` for `m > M`.
pub(crate) struct Collapsed {
    pub weights: Vec<Number>,
    pub first: f64,
    pub theta: f64,
    pub r: u32,
}

/// Evaluates a collapsed series with exponent `e` (`n` for polynomials, `-s`
/// for zeta values) and certifies its tail.
pub(crate) fn eval_collapsed(
    c: Collapsed,
    q: &QParam,
    x: &Number,
    e: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    let mut brackets = Brackets::unit(q, x)?;
    let mut sum = q.lift(&Number::zero());
    for w in &c.weights {
        let b = brackets.next_bracket()?;
        if !w.is_zero() {
            sum = sum + w * bracket_power(&b, e)?;
        }
    }
    let two = two_q(q);
    let prefactor = two.powi(c.r as i64)?;
    let value = prefactor * sum;
    let m = c.weights.len();
    let delta = q.pow(x)?.modulus() * q.modulus().powi(m as i32);
    let majorant = ratio_tail(c.first, c.theta);
    let tail = if majorant == 0.0 {
        0.0
    } else {
        two.modulus().powi(c.r as i32) * majorant * bracket_power_bound(q, delta, e)
    };
    cfg.accept(value, tail)
}

pub(crate) fn degree(n: u32) -> Number {
    Number::Exact(BigRational::from_integer(BigInt::from(n)))
}

#[cfg(test)]
mod tests;
