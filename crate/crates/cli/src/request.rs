use std::ops::RangeInclusive;

use qeuler::{
    BarnesParams, DirichletCharacter, Evaluation, EulerFamilySpec, Family, Method, Mode, Number,
    Precision, QParam, SeriesConfig, ZetaQuery,
};

use crate::args::{CommonArgs, PointArgs};
use crate::error::CliError;

/// Polynomial families are indexed by `n`; zeta-type ones by `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Polynomial,
    Zeta,
}

#[derive(Clone, Debug)]
pub struct Target {
    pub name: String,
    pub kind: Kind,
    pub family: Family,
}

/// Everything needed to evaluate cells, before `n`/`s` and `q` are chosen.
pub struct Setup {
    pub target: Target,
    pub mode: Mode,
    pub x: Number,
    pub method: Option<Method>,
    pub series: SeriesConfig,
    pub digits: Option<usize>,
}

pub fn series_config(common: &CommonArgs) -> Result<SeriesConfig, CliError> {
    let mut cfg = SeriesConfig::default();
    if let Some(m) = common.terms {
        cfg.max_terms = m;
    }
    if let Some(t) = common.tol {
        cfg.tolerance = t;
    }
    cfg.validate().map_err(CliError::at("--terms/--tol"))?;
    Ok(cfg)
}

pub fn parse_mode(flag: &str, s: Option<&str>) -> Result<Mode, CliError> {
    match s {
        None => Ok(Mode::float()),
        Some(s) => s.parse().map_err(CliError::at(flag)),
    }
}

fn precision(mode: Mode) -> Precision {
    match mode {
        Mode::Exact => Precision::DOUBLE,
        Mode::Float(p) => p,
    }
}

pub fn parse_number(flag: &str, s: &str, mode: Mode) -> Result<Number, CliError> {
    Number::parse_with_precision(s, precision(mode)).map_err(CliError::at(flag))
}

pub fn parse_q(s: &str, mode: Mode) -> Result<QParam, CliError> {
    QParam::with_mode(parse_number("--q", s, mode)?, mode).map_err(CliError::at("--q"))
}

fn required<'a>(flag: &str, v: &'a Option<String>, family: &str) -> Result<&'a str, CliError> {
    v.as_deref()
        .ok_or_else(|| CliError::usage(flag, format!("required for family {family}")))
}

fn barnes(args: &PointArgs, mode: Mode, r: u32) -> Result<BarnesParams, CliError> {
    let a = match &args.a {
        Some(list) => list
            .split(',')
            .map(|v| parse_number("--a", v, mode))
            .collect::<Result<Vec<_>, _>>()?,
        None => vec![Number::one(); r as usize],
    };
    let b = match &args.b {
        Some(list) => list
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::usage("--b", format!("not an integer: {v:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => vec![0; a.len()],
    };
    BarnesParams::new(a, b).map_err(CliError::at("--a/--b"))
}

fn target(args: &PointArgs, mode: Mode) -> Result<Target, CliError> {
    let name = args
        .family
        .clone()
        .ok_or_else(|| CliError::usage("--family", "required"))?;
    let r = args.r.unwrap_or(1);
    let h = || {
        args.h
            .ok_or_else(|| CliError::usage("--h", format!("required for family {name}")))
    };
    let chi = || -> Result<DirichletCharacter, CliError> {
        let spec = required("--character", &args.character, &name)?;
        DirichletCharacter::parse(spec, precision(mode)).map_err(CliError::at("--character"))
    };
    use Kind::*;
    let (kind, family) = match name.as_str() {
        "basic" => (Polynomial, Family::Basic),
        "order-r" => (Polynomial, Family::OrderR { r }),
        "hr" => (Polynomial, Family::HR { h: h()?, r }),
        "chi" => (Polynomial, Family::Chi { chi: chi()? }),
        "chi-order-r" => (Polynomial, Family::ChiOrderR { r, chi: chi()? }),
        "chi-hr" => (Polynomial, Family::ChiHR { h: h()?, r, chi: chi()? }),
        "barnes" => (Polynomial, Family::Barnes { params: barnes(args, mode, r)? }),
        "barnes-chi" => (
            Polynomial,
            Family::BarnesChi { chi: chi()?, params: barnes(args, mode, r)? },
        ),
        "zeta" => (Zeta, Family::OrderR { r }),
        "zeta-h" => (Zeta, Family::HR { h: h()?, r }),
        "l" => (Zeta, Family::ChiOrderR { r, chi: chi()? }),
        "l-h" => (Zeta, Family::ChiHR { h: h()?, r, chi: chi()? }),
        "barnes-zeta" => (Zeta, Family::Barnes { params: barnes(args, mode, r)? }),
        "barnes-l" => (
            Zeta,
            Family::BarnesChi { chi: chi()?, params: barnes(args, mode, r)? },
        ),
        other => return Err(CliError::usage("--family", format!("unknown family {other:?}"))),
    };
    if family.order() == 0 {
        return Err(CliError::usage("--r", "must be at least 1"));
    }
    Ok(Target { name, kind, family })
}

pub fn setup(args: &PointArgs) -> Result<Setup, CliError> {
    let mode = parse_mode("--mode", args.mode.as_deref())?;
    let target = target(args, mode)?;
    let x = parse_number("--x", required("--x", &args.x, &target.name)?, mode)?;
    let method = match &args.method {
        None => None,
        Some(m) => {
            let m: Method = m.parse().map_err(CliError::at("--method"))?;
            let allowed = match target.kind {
                Kind::Polynomial => target.family.methods().contains(&m),
                Kind::Zeta => m != Method::Distribution,
            };
            if !allowed {
                return Err(CliError::usage(
                    "--method",
                    format!("{m} is not available for family {}", target.name),
                ));
            }
            Some(m)
        }
    };
    Ok(Setup {
        target,
        mode,
        x,
        method,
        series: series_config(&args.common)?,
        digits: args.common.digits,
    })
}

/// A computed cell with the representation that produced it.
pub struct Cell {
    pub evaluation: Evaluation,
    pub method: Method,
}

impl Setup {
    pub fn polynomial(&self, n: u32, q: &QParam) -> Result<Cell, CliError> {
        let spec = EulerFamilySpec::new(self.target.family.clone(), n);
        let method = self.method.unwrap_or_else(|| self.target.family.default_method());
        let evaluation = spec
            .evaluate(q, &self.x, Some(method), &self.series)
            .map_err(CliError::evaluation)?;
        Ok(Cell { evaluation, method })
    }

    pub fn zeta(&self, s: &Number, q: &QParam) -> Result<Cell, CliError> {
        let query = ZetaQuery::new(s.clone(), self.x.clone(), self.target.family.clone());
        let closed = s.as_nonpositive_integer().is_some()
            && !matches!(self.target.family, Family::BarnesChi { .. });
        let (evaluation, method) = match self.method {
            Some(Method::Series) => (query.evaluate_series(q, &self.series), Method::Series),
            _ if closed => (query.evaluate(q, &self.series), Method::Closed),
            _ => (query.evaluate(q, &self.series), Method::Series),
        };
        Ok(Cell {
            evaluation: evaluation.map_err(CliError::evaluation)?,
            method,
        })
    }
}

/// `a..b` (inclusive), `a,b,c` or a single integer.
pub fn parse_degrees(s: &str) -> Result<Vec<u32>, CliError> {
    let bad = || CliError::usage("--n", format!("expected n, a..b or a,b,c; got {s:?}"));
    let int = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let range: RangeInclusive<u32> = int(lo)?..=int(hi)?;
        if range.is_empty() {
            return Err(bad());
        }
        return Ok(range.collect());
    }
    s.split(',').map(int).collect()
}
