use num_bigint::BigInt;
use num_rational::BigRational;

use super::{
    binomial_transform, check_order, degree, eval_collapsed, two_q, Collapsed, Method,
};
use crate::error::{Error, Result};
use crate::qcore::{q_pochhammer, QBinomialTable};
use crate::scalar::{Number, QParam};
use crate::series::{binomial_weight, Evaluation, SeriesConfig};

/// `E_{n,q}(x) = [2]_q / (1-q)^n sum_l binom(n,l) (-1)^l q^{lx} / (1 + q^{l+1})`.
pub fn euler_poly(n: u32, q: &QParam, x: &Number) -> Result<Number> {
    let two = two_q(q);
    let one = q.lift(&Number::one());
    let sum = binomial_transform(n, q, x, |l| (&one + q.pow_int(l as i64 + 1)?).recip())?;
    Ok(two * sum)
}

/// `E^{(r)}_{n,q}(x)`, by the finite closed form or the collapsed series
/// `[2]_q^r sum_m binom(m+r-1, m) (-q)^m [m+x]_q^n`.
pub fn euler_poly_order(
    n: u32,
    r: u32,
    q: &QParam,
    x: &Number,
    method: Method,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_order(r)?;
    match method {
        Method::Closed => {
            let one = q.lift(&Number::one());
            let sum = binomial_transform(n, q, x, |l| {
                (&one + q.pow_int(l as i64 + 1)?).powi(-(r as i64))
            })?;
            Ok(Evaluation::exact(two_q(q).powi(r as i64)? * sum))
        }
        Method::Series => {
            cfg.validate()?;
            eval_collapsed(order_weights(r, q, cfg.max_terms)?, q, x, &degree(n), cfg)
        }
        Method::Distribution => Err(unsupported(method, "order-r")),
    }
}

/// `E^{(h,r)}_{n,q}(x)`: closed form with `(-q^{h-r+l+1} : q)_r` in the
/// denominator, or the series with weights `binom(m+r-1, m)_q (-q^{h-r+1})^m`.
pub fn euler_poly_hr(
    n: u32,
    h: i64,
    r: u32,
    q: &QParam,
    x: &Number,
    method: Method,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_order(r)?;
    match method {
        Method::Closed => {
            let shift = h - r as i64 + 1;
            let sum = binomial_transform(n, q, x, |l| {
                let base = -q.pow_int(shift + l as i64)?;
                q_pochhammer(&base, q, r)?.recip()
            })?;
            Ok(Evaluation::exact(two_q(q).powi(r as i64)? * sum))
        }
        Method::Series => {
            cfg.validate()?;
            eval_collapsed(hr_weights(h, r, q, cfg.max_terms)?, q, x, &degree(n), cfg)
        }
        Method::Distribution => Err(unsupported(method, "hr")),
    }
}

pub(super) fn unsupported(method: Method, family: &str) -> Error {
    Error::invalid(format!("method {method} is not available for family {family}"))
}

/// Weights `binom(m+r-1, m) (-q)^m`, `m = 0..=M`.
pub(crate) fn order_weights(r: u32, q: &QParam, m_max: usize) -> Result<Collapsed> {
    check_order(r)?;
    let minus_q = -q.value();
    let mut weights = Vec::with_capacity(m_max + 1);
    let mut binom = BigRational::from_integer(BigInt::from(1));
    let mut power = q.lift(&Number::one());
    for m in 0..=m_max {
        if m > 0 {
            binom = binom * BigInt::from(m + r as usize - 1) / BigInt::from(m);
        }
        weights.push(Number::Exact(binom.clone()) * &power);
        power = power * &minus_q;
    }
    let rho = q.modulus();
    let next = m_max + 1;
    Ok(Collapsed {
        weights,
        first: binomial_weight(next, r as usize, rho),
        theta: rho * (next + r as usize) as f64 / (next + 1) as f64,
        r,
    })
}

/// Requires `h - r + 1 >= 1`: the weakest coordinate decays like `|q|^{h-r+1}`.
pub(crate) fn hr_guard(h: i64, r: u32) -> Result<i64> {
    let e = h - r as i64 + 1;
    if e < 1 {
        return Err(Error::Divergence("requires h−r+1 ≥ 1".into()));
    }
    Ok(e)
}

/// Weights `binom(m+r-1, m)_q (-q^{h-r+1})^m`, `m = 0..=M`.
pub(crate) fn hr_weights(h: i64, r: u32, q: &QParam, m_max: usize) -> Result<Collapsed> {
    check_order(r)?;
    let e = hr_guard(h, r)?;
    let ratio = -q.pow_int(e)?;
    let table = QBinomialTable::new(q, Some(r as usize - 1));
    let mut weights = Vec::with_capacity(m_max + 1);
    let mut power = q.lift(&Number::one());
    for m in 0..=m_max {
        let b = table.get((m + r as usize - 1) as u32, m as i64)?;
        weights.push(b * &power);
        power = power * &ratio;
    }
    let rho = q.modulus();
    let decay = rho.powi(e as i32);
    let next = m_max + 1;
    let b_next = table.get((next + r as usize - 1) as u32, next as i64)?.modulus();
    let growth = (1.0 + rho.powi((next + r as usize) as i32)) / (1.0 - rho.powi(next as i32 + 1));
    Ok(Collapsed {
        weights,
        first: b_next * decay.powi(next as i32),
        theta: decay * growth,
        r,
    })
}
