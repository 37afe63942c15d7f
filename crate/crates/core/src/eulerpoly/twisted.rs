use super::plain::{hr_guard, unsupported};
use super::{
    binomial_transform, check_order, degree, eval_collapsed, euler_poly, euler_poly_hr, two_q,
    Collapsed, Method,
};
use crate::characters::{
    character_convolution, twisted_geometric_sum, CoordinateWeight, DirichletCharacter,
};
use crate::error::{Error, Result};
use crate::qcore::q_number;
use crate::scalar::{Number, QParam};
use crate::series::{binomial_weight, Evaluation, SeriesConfig};

/// `E_{n,chi,q}(x)`: the series `[2]_q sum_m (-q)^m chi(m) [m+x]_q^n`, or the
/// finite sum over residues `a mod f` of basic polynomials at modulus `q^f`.
pub fn euler_chi(
    n: u32,
    chi: &DirichletCharacter,
    q: &QParam,
    x: &Number,
    method: Method,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    chi.check_mode(q.mode())?;
    match method {
        Method::Series => {
            cfg.validate()?;
            eval_collapsed(chi_order_weights(1, chi, q, cfg.max_terms)?, q, x, &degree(n), cfg)
        }
        Method::Distribution => {
            let f = chi.conductor();
            let qf = q.raised(f as u32)?;
            let mut sum = q.lift(&Number::zero());
            for (coef, shift) in distribution_points(chi, 1, 1, q, cfg)? {
                let y = residue_argument(x, shift, f);
                sum = sum + coef * euler_poly(n, &qf, &y)?;
            }
            let scale = two_q(q).checked_div(&two_q(&qf))?
                * q_number(&Number::int(f as i64), q)?.powi(n as i64)?;
            Ok(Evaluation::exact(scale * sum))
        }
        Method::Closed => Err(unsupported(method, "chi")),
    }
}

/// `E^{(r)}_{n,chi,q}(x)`. The closed form factors each coordinate's twisted
/// geometric sum; the series collapses the r-fold sum by convolution.
pub fn euler_chi_order(
    n: u32,
    r: u32,
    chi: &DirichletCharacter,
    q: &QParam,
    x: &Number,
    method: Method,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_order(r)?;
    chi.check_mode(q.mode())?;
    match method {
        Method::Closed => {
            let sum = binomial_transform(n, q, x, |l| {
                twisted_geometric_sum(chi, &q.pow_int(l as i64 + 1)?)?.powi(r as i64)
            })?;
            Ok(Evaluation::exact(two_q(q).powi(r as i64)? * sum))
        }
        Method::Series => {
            cfg.validate()?;
            eval_collapsed(chi_order_weights(r, chi, q, cfg.max_terms)?, q, x, &degree(n), cfg)
        }
        Method::Distribution => Err(unsupported(method, "chi-order-r")),
    }
}

/// `E^{(h,r)}_{n,chi,q}(x)` with per-coordinate weights
/// `(-1)^m q^{(h-j+1) m} chi(m)`, `j = 1..=r`.
#[allow(clippy::too_many_arguments)]
pub fn euler_chi_hr(
    n: u32,
    h: i64,
    r: u32,
    chi: &DirichletCharacter,
    q: &QParam,
    x: &Number,
    method: Method,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_order(r)?;
    chi.check_mode(q.mode())?;
    match method {
        Method::Closed => {
            let sum = binomial_transform(n, q, x, |l| {
                let mut prod = q.lift(&Number::one());
                for j in 1..=r as i64 {
                    let z = q.pow_int(h - j + 1 + l as i64)?;
                    prod = prod * twisted_geometric_sum(chi, &z)?;
                }
                Ok(prod)
            })?;
            Ok(Evaluation::exact(two_q(q).powi(r as i64)? * sum))
        }
        Method::Series => {
            cfg.validate()?;
            eval_collapsed(chi_hr_weights(h, r, chi, q, cfg.max_terms)?, q, x, &degree(n), cfg)
        }
        Method::Distribution => {
            let f = chi.conductor();
            let qf = q.raised(f as u32)?;
            let mut sum = q.lift(&Number::zero());
            for (coef, shift) in distribution_points(chi, h, r, q, cfg)? {
                let y = residue_argument(x, shift, f);
                let inner = euler_poly_hr(n, h, r, &qf, &y, Method::Closed, cfg)?;
                sum = sum + coef * inner.value;
            }
            let ratio = two_q(q).checked_div(&two_q(&qf))?;
            let scale = ratio.powi(r as i64)?
                * q_number(&Number::int(f as i64), q)?.powi(n as i64)?;
            Ok(Evaluation::exact(scale * sum))
        }
    }
}

/// `(x + shift) / f`.
pub(crate) fn residue_argument(x: &Number, shift: u64, f: u64) -> Number {
    (x + &Number::int(shift as i64)) * Number::ratio(1, f as i64)
}

/// Points `a in [0, f)^r` with nonzero coefficient
/// `(-1)^{sum a} prod_j chi(a_j) q^{sum_j (h-j+1) a_j}`, paired with `sum a`.
pub(crate) fn distribution_points(
    chi: &DirichletCharacter,
    h: i64,
    r: u32,
    q: &QParam,
    cfg: &SeriesConfig,
) -> Result<Vec<(Number, u64)>> {
    let f = chi.conductor();
    let count = (f as u128).checked_pow(r).unwrap_or(u128::MAX);
    if count > cfg.term_cap as u128 {
        return Err(Error::TermCap {
            terms: count,
            cap: cfg.term_cap,
        });
    }
    let r = r as usize;
    let mut a = vec![0u64; r];
    let mut out = Vec::new();
    loop {
        let mut coef = q.lift(&Number::one());
        let mut exponent = 0i64;
        let mut total = 0u64;
        for (j, &aj) in a.iter().enumerate() {
            coef = coef * chi.value(aj);
            exponent += (h - j as i64) * aj as i64;
            total += aj;
        }
        if !coef.is_zero() {
            if total % 2 == 1 {
                coef = -coef;
            }
            out.push((coef * q.pow_int(exponent)?, total));
        }
        let mut k = 0;
        loop {
            if k == r {
                return Ok(out);
            }
            a[k] += 1;
            if a[k] < f {
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
}

/// Weights `c[m] (-q)^m` with `c` the r-fold convolution of `chi`.
pub(crate) fn chi_order_weights(
    r: u32,
    chi: &DirichletCharacter,
    q: &QParam,
    m_max: usize,
) -> Result<Collapsed> {
    check_order(r)?;
    let unit = vec![CoordinateWeight::character(); r as usize];
    let c = character_convolution(chi, &unit, m_max)?;
    let minus_q = -q.value();
    let mut power = q.lift(&Number::one());
    let mut weights = Vec::with_capacity(m_max + 1);
    for cm in c {
        weights.push(cm * &power);
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

/// Convolution of the coordinate weights `(-q^{h-j+1})^m chi(m)`.
pub(crate) fn chi_hr_weights(
    h: i64,
    r: u32,
    chi: &DirichletCharacter,
    q: &QParam,
    m_max: usize,
) -> Result<Collapsed> {
    check_order(r)?;
    let e = hr_guard(h, r)?;
    let coords = (1..=r as i64)
        .map(|j| Ok(CoordinateWeight::new(-q.pow_int(h - j + 1)?, true)))
        .collect::<Result<Vec<_>>>()?;
    let weights = character_convolution(chi, &coords, m_max)?;
    let decay = q.modulus().powi(e as i32);
    let next = m_max + 1;
    Ok(Collapsed {
        weights,
        first: binomial_weight(next, r as usize, decay),
        theta: decay * (next + r as usize) as f64 / (next + 1) as f64,
        r,
    })
}
