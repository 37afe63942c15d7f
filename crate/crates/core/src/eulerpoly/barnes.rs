use rayon::prelude::*;

use super::plain::unsupported;
use super::{binomial_transform, check_order, degree, two_q, Method};
use crate::characters::DirichletCharacter;
use crate::error::{Error, Result};
use crate::scalar::{Number, QParam};
use crate::series::{bracket_power, bracket_power_bound, Evaluation, SeriesConfig};

/// Barnes parameters `(a_1..a_r; b_1..b_r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BarnesParams {
    a: Vec<Number>,
    b: Vec<i64>,
}

impl BarnesParams {
    pub fn new(a: Vec<Number>, b: Vec<i64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::invalid("Barnes parameters need r >= 1"));
        }
        if a.len() != b.len() {
            return Err(Error::invalid(format!(
                "a has {} entries but b has {}",
                a.len(),
                b.len()
            )));
        }
        if let Some(bad) = a.iter().find(|v| !(v.re() > 0.0)) {
            return Err(Error::invalid(format!("a_j must have positive real part, got {bad}")));
        }
        Ok(BarnesParams { a, b })
    }

    /// `a = (1, ..., 1)`, `b = (0, ..., 0)`.
    pub fn uniform(r: u32) -> Result<Self> {
        Self::new(vec![Number::one(); r as usize], vec![0; r as usize])
    }

    pub fn order(&self) -> u32 {
        self.a.len() as u32
    }

    pub fn a(&self) -> &[Number] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub(crate) fn series_guard(&self) -> Result<()> {
        if let Some(b) = self.b.iter().find(|&&b| b < 0) {
            return Err(Error::Divergence(format!(
                "requires every b_j ≥ 0 for the lattice series, got {b}"
            )));
        }
        Ok(())
    }
}

/// `E^{(r)}_{n,q}(x | a; b)`: the finite closed form with denominators
/// `prod_j (1 + q^{l a_j + b_j + 1})`, or the r-fold lattice sum.
pub fn barnes_euler(
    n: u32,
    params: &BarnesParams,
    q: &QParam,
    x: &Number,
    method: Method,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    let r = params.order();
    check_order(r)?;
    match method {
        Method::Closed => {
            let one = q.lift(&Number::one());
            let qa = params.a.iter().map(|a| q.pow(a)).collect::<Result<Vec<_>>>()?;
            let shifts = params
                .b
                .iter()
                .map(|&b| q.pow_int(b + 1))
                .collect::<Result<Vec<_>>>()?;
            let sum = binomial_transform(n, q, x, |l| {
                let mut denom = one.clone();
                for (qa, shift) in qa.iter().zip(&shifts) {
                    denom = denom * (&one + qa.powi(l as i64)? * shift);
                }
                denom.recip()
            })?;
            Ok(Evaluation::exact(two_q(q).powi(r as i64)? * sum))
        }
        Method::Series => barnes_series(&degree(n), params, None, q, x, cfg),
        Method::Distribution => Err(unsupported(method, "barnes")),
    }
}

/// `E^{(r)}_{n,chi,q}(x | a; b)`, by the r-fold lattice sum.
pub fn barnes_euler_chi(
    n: u32,
    chi: &DirichletCharacter,
    params: &BarnesParams,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    chi.check_mode(q.mode())?;
    barnes_series(&degree(n), params, Some(chi), q, x, cfg)
}

pub(crate) fn barnes_series(
    e: &Number,
    params: &BarnesParams,
    chi: Option<&DirichletCharacter>,
    q: &QParam,
    x: &Number,
    cfg: &SeriesConfig,
) -> Result<Evaluation> {
    cfg.validate()?;
    params.series_guard()?;
    cfg.lattice_size(params.order() as usize)?;
    let sum = barnes_lattice_sum(q, x, e, params, chi, cfg.max_terms)?;
    let value = two_q(q).powi(params.order() as i64)? * sum;
    cfg.accept(value, barnes_tail(q, x, e, params, cfg.max_terms)?)
}

struct Coordinate {
    weight: Vec<Number>,
    step: Vec<Number>,
}

struct Lattice<'a> {
    coords: Vec<Coordinate>,
    zero: Number,
    one: Number,
    denom: Number,
    qx: Number,
    e: &'a Number,
}

impl Lattice<'_> {
    fn sum_from(&self, k: usize, w: &Number, s: &Number) -> Result<Number> {
        if k == self.coords.len() {
            let b = (&self.one - &self.qx * s).checked_div(&self.denom)?;
            return Ok(w * bracket_power(&b, self.e)?);
        }
        let c = &self.coords[k];
        let mut acc = self.zero.clone();
        for (wm, sm) in c.weight.iter().zip(&c.step) {
            if wm.is_zero() {
                continue;
            }
            acc = acc + self.sum_from(k + 1, &(w * wm), &(s * sm))?;
        }
        Ok(acc)
    }
}

/// `sum_{m in [0, M]^r} (-1)^{sum m} q^{sum (b_j+1) m_j} [prod chi(m_j)] [sum a_j m_j + x]_q^e`.
///
/// The outermost coordinate is split across threads; partial sums are added
/// in index order so the result does not depend on scheduling.
pub(crate) fn barnes_lattice_sum(
    q: &QParam,
    x: &Number,
    e: &Number,
    params: &BarnesParams,
    chi: Option<&DirichletCharacter>,
    m_max: usize,
) -> Result<Number> {
    let one = q.lift(&Number::one());
    let mut coords = Vec::with_capacity(params.a.len());
    for (a, &b) in params.a.iter().zip(&params.b) {
        let ratio = -q.pow_int(b + 1)?;
        let qa = q.lift(&q.pow(a)?);
        let mut weight = Vec::with_capacity(m_max + 1);
        let mut step = Vec::with_capacity(m_max + 1);
        let (mut wp, mut sp) = (one.clone(), one.clone());
        for m in 0..=m_max {
            let w = match chi {
                Some(chi) => &wp * chi.value(m as u64),
                None => wp.clone(),
            };
            weight.push(w);
            step.push(sp.clone());
            wp = wp * &ratio;
            sp = sp * &qa;
        }
        coords.push(Coordinate { weight, step });
    }
    let lattice = Lattice {
        coords,
        denom: &one - q.value(),
        qx: q.lift(&q.pow(x)?),
        zero: q.lift(&Number::zero()),
        one,
        e,
    };
    let first = &lattice.coords[0];
    let partial: Vec<Result<Number>> = (0..=m_max)
        .into_par_iter()
        .map(|m| {
            if first.weight[m].is_zero() {
                return Ok(lattice.zero.clone());
            }
            lattice.sum_from(1, &first.weight[m], &first.step[m])
        })
        .collect();
    let mut total = lattice.zero.clone();
    for p in partial {
        total = total + p?;
    }
    Ok(total)
}

/// Tail bound for the lattice sum outside `[0, M]^r`.
///
/// Each discarded point has some `m_j > M`; a union bound over `j` of the
/// geometric weights `|q|^{(b_j+1) m_j}` majorizes the weight mass, and the
/// bracket shift is at most `|q^x| exp(kappa (M+1))` with
/// `kappa = max_j Re(a_j Log q)`.
pub(crate) fn barnes_tail(
    q: &QParam,
    x: &Number,
    e: &Number,
    params: &BarnesParams,
    m_max: usize,
) -> Result<f64> {
    let rho: Vec<f64> = params
        .b
        .iter()
        .map(|&b| q.modulus().powi((b + 1) as i32))
        .collect();
    let next = (m_max + 1) as i32;
    let full: f64 = rho.iter().map(|p| 1.0 / (1.0 - p)).product();
    let mass: f64 = rho.iter().map(|p| p.powi(next) * full).sum();
    if mass == 0.0 {
        return Ok(0.0);
    }
    let (root, index) = q.root();
    let log_q = root.to_complex64().ln() * index as f64;
    let kappa = params
        .a
        .iter()
        .map(|a| (a.to_complex64() * log_q).re)
        .fold(f64::NEG_INFINITY, f64::max);
    if !(kappa < 0.0) {
        return Ok(f64::INFINITY);
    }
    let delta = q.pow(x)?.modulus() * (kappa * next as f64).exp();
    let two = two_q(q).modulus().powi(params.order() as i32);
    Ok(two * mass * bracket_power_bound(q, delta, e))
}
