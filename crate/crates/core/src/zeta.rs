//! Multiple q-zeta and q-l functions interpolating the polynomial families.
//!
//! Each function is a convergent series for every complex `s` when
//! `0 < |q| < 1`. The default entry points evaluate the finite closed form
//! at `s = -n` when the family has one; the `*_series` variants always sum
//! the series.

use crate::characters::DirichletCharacter;
use crate::eulerpoly::{
    self, barnes_euler, chi_hr_weights, chi_order_weights, distribution_points, euler_chi_hr,
    euler_chi_order, euler_poly_hr, euler_poly_order, eval_collapsed, hr_weights, order_weights,
    two_q, BarnesParams, Family, Method,
};
use crate::error::{Error, Result};
use crate::qcore::q_number;
use crate::scalar::{pow_principal, Mode, Number, QParam};
use crate::series::{Evaluation, SeriesConfig};

/// A zeta-type evaluation request.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaQuery {
    pub s: Number,
    pub x: Number,
    pub family: Family,
}

impl ZetaQuery {
    pub fn new(s: Number, x: Number, family: Family) -> Self {
        ZetaQuery { s, x, family }
    }

    pub fn evaluate(&self, q: &QParam, cfg: &SeriesConfig) -> Result<Evaluation> {
        self.dispatch(q, cfg, false)
    }

    /// Always sums the series, even at `s = -n`.
    pub fn evaluate_series(&self, q: &QParam, cfg: &SeriesConfig) -> Result<Evaluation> {
        self.dispatch(q, cfg, true)
    }

    fn dispatch(&self, q: &QParam, cfg: &SeriesConfig, series: bool) -> Result<Evaluation> {
        let (s, x) = (&self.s, &self.x);
        match &self.family {
            Family::Basic => pick(series, zeta_multi_series, zeta_multi)(s, 1, q, x, cfg),
            Family::OrderR { r } => pick(series, zeta_multi_series, zeta_multi)(s, *r, q, x, cfg),
            Family::HR { h, r } => if series {
                zeta_multi_h_series(s, *h, *r, q, x, cfg)
            } else {
                zeta_multi_h(s, *h, *r, q, x, cfg)
            },
            Family::Chi { chi } => if series {
                l_multi_series(s, chi, 1, q, x, cfg)
            } else {
                l_multi(s, chi, 1, q, x, cfg)
            },
            Family::ChiOrderR { r, chi } => if series {
                l_multi_series(s, chi, *r, q, x, cfg)
            } else {
                l_multi(s, chi, *r, q, x, cfg)
            },
            Family::ChiHR { h, r, chi } => if series {
                l_multi_h_series(s, chi, *h, *r, q, x, cfg)
            } else {
                l_multi_h(s, chi, *h, *r, q, x, cfg)
            },
            Family::Barnes { params } => if series {
                barnes_zeta_series(s, params, q, x, cfg)
            } else {
                barnes_zeta(s, params, q, x, cfg)
            },
            Family::BarnesChi { chi, params } => barnes_l(s, chi, params, q, x, cfg),
        }
    }
}

type OrderFn = fn(&Number, u32, &QParam, &Number, &SeriesConfig) -> Result<Evaluation>;

fn pick(series: bool, a: OrderFn, b: OrderFn) -> OrderFn {
    if series {
        a
    } else {
        b
    }
}

/// Validates `(s, x)` and returns `n` when `s = -n`.
fn check_args(s: &Number, x: &Number, q: &QParam) -> Result<Option<u32>> {
    if x.as_nonpositive_integer().is_some() {
        return Err(Error::invalid(format!("x must not be 0, -1, -2, ...; got {x}")));
    }
    let n = s.as_nonpositive_integer();
    if q.mode() == Mode::Exact && n.is_none() {
        return Err(Error::invalid(format!(
            "exact mode requires s to be a nonpositive integer; got {s}"
        )));
    }
    Ok(n)
}

/// `zeta_{q,r}(s, x) = [2]_q^r sum_m binom(m+r-1, m) (-q)^m [m+x]_q^{-s}`.
pub fn zeta_multi(s: &Number, r: u32, q: &QParam, x: &Number, cfg: &SeriesConfig) -> Result<Evaluation> {
    match check_args(s, x, q)? {
        Some(n) => euler_poly_order(n, r, q, x, Method::Closed, cfg),
        None => zeta_multi_series(s, r, q, x, cfg),
    }
}

pub fn zeta_multi_series(
    s: &Number,
    r: u32,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_args(s, x, q)?;
    cfg.validate()?;
    eval_collapsed(order_weights(r, q, cfg.max_terms)?, q, x, &-s, cfg)
}

/// `zeta^{(h)}_{q,r}(s, x) = [2]_q^r sum_m binom(m+r-1, m)_q (-q^{h-r+1})^m [m+x]_q^{-s}`.
pub fn zeta_multi_h(
    s: &Number,
    h: i64,
    r: u32,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    eulerpoly::hr_guard(h, r)?;
    match check_args(s, x, q)? {
        Some(n) => euler_poly_hr(n, h, r, q, x, Method::Closed, cfg),
        None => zeta_multi_h_series(s, h, r, q, x, cfg),
    }
}

pub fn zeta_multi_h_series(
    s: &Number,
    h: i64,
    r: u32,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_args(s, x, q)?;
    cfg.validate()?;
    eval_collapsed(hr_weights(h, r, q, cfg.max_terms)?, q, x, &-s, cfg)
}

/// `l_{q,r}(s, x | chi)`, the r-fold series with `prod chi(m_j)` inserted.
pub fn l_multi(
    s: &Number,
    chi: &DirichletCharacter,
    r: u32,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    match check_args(s, x, q)? {
        Some(n) => euler_chi_order(n, r, chi, q, x, Method::Closed, cfg),
        None => l_multi_series(s, chi, r, q, x, cfg),
    }
}

pub fn l_multi_series(
    s: &Number,
    chi: &DirichletCharacter,
    r: u32,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_args(s, x, q)?;
    chi.check_mode(q.mode())?;
    cfg.validate()?;
    eval_collapsed(chi_order_weights(r, chi, q, cfg.max_terms)?, q, x, &-s, cfg)
}

/// `l^{(h)}_{q,r}(s, x | chi)` with coordinate weights `(-1)^m q^{(h-j+1) m} chi(m)`.
pub fn l_multi_h(
    s: &Number,
    chi: &DirichletCharacter,
    h: i64,
    r: u32,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    eulerpoly::hr_guard(h, r)?;
    match check_args(s, x, q)? {
        Some(n) => euler_chi_hr(n, h, r, chi, q, x, Method::Closed, cfg),
        None => l_multi_h_series(s, chi, h, r, q, x, cfg),
    }
}

pub fn l_multi_h_series(
    s: &Number,
    chi: &DirichletCharacter,
    h: i64,
    r: u32,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_args(s, x, q)?;
    chi.check_mode(q.mode())?;
    cfg.validate()?;
    eval_collapsed(chi_hr_weights(h, r, chi, q, cfg.max_terms)?, q, x, &-s, cfg)
}

/// `l^{(h)}_{q,r}(s, x | chi)` regrouped by residues mod `f`:
/// `[2]_q^r / [2]_{q^f}^r [f]_q^{-s} sum_a c_a zeta^{(h)}_{q^f,r}(s, (x + sum a)/f)`.
///
/// Splitting `[f]_q^{-s} [y]_{q^f}^{-s}` uses the principal branch of each
/// factor, which matches the direct series when both brackets have positive
/// real part (for instance real `q` in `(0, 1)` and real `x > 0`).
pub fn l_multi_h_factored(
    s: &Number,
    chi: &DirichletCharacter,
    h: i64,
    r: u32,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_args(s, x, q)?;
    chi.check_mode(q.mode())?;
    eulerpoly::hr_guard(h, r)?;
    cfg.validate()?;
    let f = chi.conductor();
    let qf = q.raised(f as u32)?;
    let inner_cfg = cfg.clone().unchecked();
    let mut sum = q.lift(&Number::zero());
    let mut tail = 0.0;
    for (coef, shift) in distribution_points(chi, h, r, q, cfg)? {
        let y = eulerpoly::residue_argument(x, shift, f);
        let inner = zeta_multi_h_series(s, h, r, &qf, &y, &inner_cfg)?;
        tail += coef.modulus() * inner.tail_bound;
        sum = sum + coef * inner.value;
    }
    let ratio = two_q(q).checked_div(&two_q(&qf))?;
    let scale = ratio.powi(r as i64)? * pow_principal(&q_number(&Number::int(f as i64), q)?, &-s)?;
    let tail = scale.modulus() * tail;
    cfg.accept(scale * sum, tail)
}

/// Barnes-type multiple q-zeta function.
pub fn barnes_zeta(
    s: &Number,
    params: &BarnesParams,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    match check_args(s, x, q)? {
        Some(n) => barnes_euler(n, params, q, x, Method::Closed, cfg),
        None => barnes_zeta_series(s, params, q, x, cfg),
    }
}

pub fn barnes_zeta_series(
    s: &Number,
    params: &BarnesParams,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_args(s, x, q)?;
    eulerpoly::barnes_series(&-s, params, None, q, x, cfg)
}

/// Barnes-type multiple q-l function (series only).
pub fn barnes_l(
    s: &Number,
    chi: &DirichletCharacter,
    params: &BarnesParams,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    check_args(s, x, q)?;
    chi.check_mode(q.mode())?;
    eulerpoly::barnes_series(&-s, params, Some(chi), q, x, cfg)
}
