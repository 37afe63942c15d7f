use std::ops::RangeInclusive;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::classical::{classical_barnes_euler, classical_euler_order, classical_euler_poly};
use super::{CheckMode, Job, Sides, SuiteConfig, Tag};
use crate::characters::{twisted_geometric_sum, DirichletCharacter};
use crate::error::{Error, Result};
use crate::eulerpoly::{
    barnes_euler, binomial_transform, distribution_points, euler_chi, euler_chi_hr,
    euler_chi_order, euler_poly, euler_poly_hr, euler_poly_order, two_q,
    BarnesParams, Family, Method, EulerFamilySpec,
};
use crate::qcore::{q_binomial, q_pochhammer};
use crate::scalar::{binomial, Mode, Number, QParam};
use crate::series::{Evaluation, SeriesConfig};
use crate::zeta::{
    barnes_l, barnes_zeta, barnes_zeta_series, l_multi, l_multi_h_factored, l_multi_h_series,
    l_multi_series, zeta_multi, zeta_multi_h_series, zeta_multi_series,
};

type Params = Vec<(&'static str, String)>;

struct Grid<'a> {
    cfg: &'a SuiteConfig,
    float: Mode,
    jobs: Vec<Job>,
}

impl Grid<'_> {
    fn degrees(&self, lo: u32, hi: u32) -> RangeInclusive<u32> {
        lo..=self.cfg.n_max.unwrap_or(hi)
    }

    fn orders(&self, hi: u32) -> RangeInclusive<u32> {
        match self.cfg.r {
            Some(r) => r..=r,
            None => 1..=hi,
        }
    }

    fn heights(&self, r: u32, default: &[i64]) -> Vec<i64> {
        match self.cfg.h {
            Some(h) => vec![h],
            None => default.iter().map(|d| r as i64 + d).collect(),
        }
    }

    fn tol(&self, default: f64) -> f64 {
        self.cfg.tolerance.unwrap_or(default)
    }

    fn exact_q(&self, num: i64, den: i64) -> QParam {
        QParam::new(Number::ratio(num, den)).expect("grid q")
    }

    fn complex_q(&self) -> QParam {
        QParam::with_mode(Number::complex(0.4, 0.3), self.float).expect("grid q")
    }

    /// `q = u^f` with exact `u`.
    fn rooted_q(&self, num: i64, den: i64, f: u32, mode: Mode) -> QParam {
        QParam::from_root(Number::ratio(num, den), f, mode).expect("grid q")
    }

    fn floated(&self, q: &QParam) -> QParam {
        q.in_mode(self.float).expect("float q")
    }

    /// `q` itself when `q^x` stays exact, otherwise its float version.
    fn closed_q(&self, q: &QParam, x: &Number) -> QParam {
        if q.is_exact() && x.as_integer().is_some() {
            q.clone()
        } else {
            self.floated(q)
        }
    }

    fn push(
        &mut self,
        id: Tag,
        params: Params,
        mode: CheckMode,
        tolerance: f64,
        run: impl Fn() -> Result<Sides> + Send + Sync + 'static,
    ) {
        self.jobs.push(Job::new(id, params, mode, tolerance, run));
    }

    fn series(&self) -> SeriesConfig {
        self.cfg.series.clone()
    }
}

fn p(key: &'static str, v: impl ToString) -> (&'static str, String) {
    (key, v.to_string())
}

fn minus(n: u32) -> Number {
    Number::int(-(n as i64))
}

fn mode_of(q: &QParam) -> CheckMode {
    if q.is_exact() {
        CheckMode::Exact
    } else {
        CheckMode::Float
    }
}

pub(crate) fn plan(cfg: &SuiteConfig) -> Vec<Job> {
    let mut g = Grid {
        cfg,
        float: cfg.float_mode(),
        jobs: Vec::new(),
    };
    prop1(&mut g);
    recurrence(&mut g);
    thm3(&mut g);
    thm5(&mut g);
    thm7(&mut g);
    thm8(&mut g);
    thm10(&mut g);
    thm11(&mut g);
    final_display(&mut g);
    gauss_binomial(&mut g);
    neg_binomial(&mut g);
    q_limit(&mut g);
    distribution(&mut g);
    specialization(&mut g);
    normalization(&mut g);
    g.jobs
}

fn prop1(g: &mut Grid) {
    let qs = [g.exact_q(3, 10), g.exact_q(1, 2), g.complex_q()];
    let tol = g.tol(1e-10);
    for n in g.degrees(0, 8) {
        for r in g.orders(4) {
            for q in &qs {
                for x in [1, 2] {
                    let (q, qf, x, cfg) = (q.clone(), g.floated(q), Number::int(x), g.series());
                    let params = vec![p("n", n), p("r", r), p("q", &q), p("x", &x)];
                    g.push(Tag::Prop1, params, CheckMode::Float, tol, move || {
                        Ok(Sides::new(
                            euler_poly_order(n, r, &q, &x, Method::Closed, &cfg)?,
                            euler_poly_order(n, r, &qf, &x, Method::Series, &cfg)?,
                        ))
                    });
                }
            }
        }
    }
}

/// `q sum_k binom(n,k) q^k E_{k,q} = -E_{n,q}` at `x = 0`.
fn recurrence(g: &mut Grid) {
    let qs = [g.exact_q(1, 3), g.exact_q(2, 5), g.exact_q(7, 10)];
    for n in g.degrees(1, 10) {
        for q in &qs {
            let q = q.clone();
            let params = vec![p("n", n), p("q", &q)];
            g.push(Tag::Recurrence, params, CheckMode::Exact, 0.0, move || {
                let zero = Number::zero();
                let mut lhs = Number::zero();
                for k in 0..=n {
                    let c = Number::Exact(BigRational::from_integer(binomial(n as u64, k as u64)));
                    lhs = lhs + c * q.pow_int(k as i64)? * euler_poly(k, &q, &zero)?;
                }
                Ok(Sides::values(q.value() * lhs, -euler_poly(n, &q, &zero)?))
            });
        }
    }
}

fn identity_points(g: &Grid) -> Vec<(QParam, Number)> {
    let mut out = Vec::new();
    for q in [g.exact_q(1, 2), g.complex_q()] {
        for x in [Number::int(1), Number::ratio(5, 2)] {
            out.push((q.clone(), x));
        }
    }
    out
}

fn thm3(g: &mut Grid) {
    let tol = g.tol(1e-9);
    for n in g.degrees(0, 6) {
        for r in g.orders(3) {
            for (q, x) in identity_points(g) {
                let (qs, qc, cfg) = (g.floated(&q), g.closed_q(&q, &x), g.series());
                let params = vec![p("n", n), p("r", r), p("q", &q), p("x", &x)];
                g.push(Tag::Thm3, params, CheckMode::Float, tol, move || {
                    Ok(Sides::new(
                        zeta_multi_series(&minus(n), r, &qs, &x, &cfg)?,
                        euler_poly_order(n, r, &qc, &x, Method::Closed, &cfg)?,
                    ))
                });
            }
        }
    }
}

fn thm5(g: &mut Grid) {
    let tol = g.tol(1e-9);
    let chi = DirichletCharacter::quadratic_mod3();
    for n in g.degrees(0, 4) {
        for r in g.orders(2) {
            for (q, x) in identity_points(g) {
                let (qs, qc, cfg, chi) = (g.floated(&q), g.closed_q(&q, &x), g.series(), chi.clone());
                let params = vec![p("n", n), p("r", r), p("q", &q), p("x", &x), p("chi", &chi)];
                g.push(Tag::Thm5, params, CheckMode::Float, tol, move || {
                    Ok(Sides::new(
                        l_multi_series(&minus(n), &chi, r, &qs, &x, &cfg)?,
                        euler_chi_order(n, r, &chi, &qc, &x, Method::Closed, &cfg)?,
                    ))
                });
            }
        }
    }
}

fn thm7(g: &mut Grid) {
    let tol = g.tol(1e-9);
    for n in g.degrees(0, 4) {
        for r in g.orders(3) {
            for h in g.heights(r, &[0, 1, 2]) {
                for q in [g.exact_q(1, 2), g.complex_q()] {
                    let x = Number::int(1);
                    let (qs, cfg) = (g.floated(&q), g.series());
                    let params = vec![p("n", n), p("h", h), p("r", r), p("q", &q), p("x", &x)];
                    g.push(Tag::Thm7, params, CheckMode::Float, tol, move || {
                        Ok(Sides::new(
                            zeta_multi_h_series(&minus(n), h, r, &qs, &x, &cfg)?,
                            euler_poly_hr(n, h, r, &q, &x, Method::Closed, &cfg)?,
                        ))
                    });
                }
            }
        }
    }
}

fn thm8(g: &mut Grid) {
    let chi = DirichletCharacter::quadratic_mod3();
    let f = chi.conductor() as u32;
    let tol = g.tol(1e-9);
    for r in g.orders(2) {
        for h in g.heights(r, &[1]) {
            for n in g.degrees(0, 4) {
                let x = Number::int(1);
                let exact = g.rooted_q(1, 2, f, Mode::Exact);
                let params = vec![
                    p("n", n),
                    p("h", h),
                    p("r", r),
                    p("q", &exact),
                    p("x", &x),
                    p("chi", &chi),
                ];
                {
                    let (q, x, chi, cfg) = (exact.clone(), x.clone(), chi.clone(), g.series());
                    g.push(Tag::Thm8, params.clone(), CheckMode::Exact, 0.0, move || {
                        Ok(Sides::new(
                            euler_chi_hr(n, h, r, &chi, &q, &x, Method::Closed, &cfg)?,
                            euler_chi_hr(n, h, r, &chi, &q, &x, Method::Distribution, &cfg)?,
                        ))
                    });
                }
                {
                    let (q, x, chi, cfg) = (exact.clone(), x.clone(), chi.clone(), g.series());
                    g.push(Tag::ProductLiteral, params, CheckMode::Exact, 0.0, move || {
                        Ok(Sides::values(
                            product_literal(n, h, r, &chi, &q, &x)?,
                            euler_chi_hr(n, h, r, &chi, &q, &x, Method::Distribution, &cfg)?.value,
                        ))
                    });
                    g.jobs.last_mut().expect("job").informational = true;
                }
                let q = QParam::with_mode(Number::real(0.5), g.float).expect("grid q");
                let params = vec![
                    p("n", n),
                    p("h", h),
                    p("r", r),
                    p("q", &q),
                    p("x", &x),
                    p("chi", &chi),
                ];
                let (chi, cfg) = (chi.clone(), g.series());
                g.push(Tag::Thm8, params, CheckMode::Float, tol, move || {
                    Ok(Sides::new(
                        euler_chi_hr(n, h, r, &chi, &q, &x, Method::Series, &cfg)?,
                        euler_chi_hr(n, h, r, &chi, &q, &x, Method::Distribution, &cfg)?,
                    ))
                });
            }
        }
    }
}

/// The residue-class expansion written with the sum over `l` inside the sum
/// over `a`, reading the coordinate exponent as `prod_j q^{(h-j+l+1) a_j}`.
fn product_literal(
    n: u32,
    h: i64,
    r: u32,
    chi: &DirichletCharacter,
    q: &QParam,
    x: &Number,
) -> Result<Number> {
    let f = chi.conductor();
    let qf = q.raised(f as u32)?;
    let mut total = q.lift(&Number::zero());
    for (coef, shift) in distribution_points(chi, h, r, q, &SeriesConfig::default())? {
        let inner = binomial_transform(n, q, x, |l| {
            let base = -qf.pow_int(h - r as i64 + l as i64 + 1)?;
            let lifted = q.pow_int(l as i64 * shift as i64)?;
            Ok(lifted * q_pochhammer(&base, &qf, r)?.recip()?)
        })?;
        total = total + coef * inner;
    }
    Ok(two_q(q).powi(r as i64)? * total)
}

fn thm10(g: &mut Grid) {
    let chi = DirichletCharacter::quadratic_mod3();
    let f = chi.conductor() as u32;
    let tol = g.tol(1e-9);
    let qs = [g.rooted_q(4, 5, f, Mode::Exact), g.complex_q()];
    for n in g.degrees(0, 3) {
        for r in g.orders(2) {
            for h in g.heights(r, &[1]) {
                for q in &qs {
                    let x = Number::int(1);
                    let (q, qs, chi, cfg) = (q.clone(), g.floated(q), chi.clone(), g.series());
                    let params = vec![
                        p("n", n),
                        p("h", h),
                        p("r", r),
                        p("q", &q),
                        p("x", &x),
                        p("chi", &chi),
                    ];
                    g.push(Tag::Thm10, params, CheckMode::Float, tol, move || {
                        Ok(Sides::new(
                            l_multi_h_series(&minus(n), &chi, h, r, &qs, &x, &cfg)?,
                            euler_chi_hr(n, h, r, &chi, &q, &x, Method::Distribution, &cfg)?,
                        ))
                    });
                }
            }
        }
    }
    for r in g.orders(2) {
        for h in g.heights(r, &[1]) {
            let s = Number::complex(0.5, 1.0);
            let x = Number::int(1);
            let (q, chi, cfg) = (g.complex_q(), chi.clone(), g.series());
            let params = vec![
                p("s", &s),
                p("h", h),
                p("r", r),
                p("q", &q),
                p("x", &x),
                p("chi", &chi),
            ];
            g.push(Tag::Thm10, params, CheckMode::Float, tol, move || {
                Ok(Sides::new(
                    l_multi_h_factored(&s, &chi, h, r, &q, &x, &cfg)?,
                    l_multi_h_series(&s, &chi, h, r, &q, &x, &cfg)?,
                ))
            });
        }
    }
}

fn barnes_grid() -> Vec<BarnesParams> {
    let mut out = Vec::new();
    for b in [vec![0, 0], vec![0, 1]] {
        out.push(BarnesParams::new(vec![Number::int(1), Number::int(2)], b).expect("barnes"));
    }
    for b in [0, 1] {
        out.push(BarnesParams::new(vec![Number::int(2)], vec![b]).expect("barnes"));
    }
    out
}

fn barnes_label(params: &BarnesParams) -> (String, String) {
    let a: Vec<String> = params.a().iter().map(|v| v.to_string()).collect();
    let b: Vec<String> = params.b().iter().map(|v| v.to_string()).collect();
    (format!("({})", a.join(",")), format!("({})", b.join(",")))
}

fn thm11(g: &mut Grid) {
    let tol = g.tol(1e-9);
    for n in g.degrees(0, 3) {
        for params in barnes_grid() {
            for q in [g.exact_q(1, 2), g.complex_q()] {
                let x = Number::int(1);
                let (a, b) = barnes_label(&params);
                let labels = vec![p("n", n), p("a", a), p("b", b), p("q", &q), p("x", &x)];
                let (qs, params, cfg) = (g.floated(&q), params.clone(), g.series());
                g.push(Tag::Thm11, labels, CheckMode::Float, tol, move || {
                    Ok(Sides::new(
                        barnes_zeta_series(&minus(n), &params, &qs, &x, &cfg)?,
                        barnes_euler(n, &params, &q, &x, Method::Closed, &cfg)?,
                    ))
                });
            }
        }
    }
}

/// Closed form of the character-twisted Barnes l-value at `s = -n`: each
/// coordinate sums to `sum_{a<f} chi(a) (-z)^a / (1 + z^f)` with
/// `z = q^{b_j+1} (q^{a_j})^l`.
pub fn barnes_l_closed(
    n: u32,
    chi: &DirichletCharacter,
    params: &BarnesParams,
    q: &QParam,
    x: &Number,
) -> Result<Number> {
    let qa = params.a().iter().map(|a| q.pow(a)).collect::<Result<Vec<_>>>()?;
    let sum = binomial_transform(n, q, x, |l| {
        let mut prod = q.lift(&Number::one());
        for (qa, &b) in qa.iter().zip(params.b()) {
            let z = q.pow_int(b + 1)? * qa.powi(l as i64)?;
            prod = prod * twisted_geometric_sum(chi, &z)?;
        }
        Ok(prod)
    })?;
    Ok(two_q(q).powi(params.order() as i64)? * sum)
}

fn final_display(g: &mut Grid) {
    let tol = g.tol(1e-9);
    let chi = DirichletCharacter::quadratic_mod3();
    for n in g.degrees(0, 3) {
        for params in barnes_grid() {
            for q in [g.exact_q(1, 2), g.complex_q()] {
                let x = Number::int(1);
                let (a, b) = barnes_label(&params);
                let labels = vec![
                    p("n", n),
                    p("a", a),
                    p("b", b),
                    p("q", &q),
                    p("x", &x),
                    p("chi", &chi),
                ];
                let (qs, params, chi, cfg) = (g.floated(&q), params.clone(), chi.clone(), g.series());
                g.push(Tag::FinalDisplay, labels, CheckMode::Float, tol, move || {
                    Ok(Sides::new(
                        barnes_l(&minus(n), &chi, &params, &qs, &x, &cfg)?,
                        Evaluation::exact(barnes_l_closed(n, &chi, &params, &q, &x)?),
                    ))
                });
            }
        }
    }
}

/// `(x:q)_n = sum_i binom(n,i)_q q^{i(i-1)/2} (-x)^i` on random exact points.
fn gauss_binomial(g: &mut Grid) {
    let mut rng = ChaCha8Rng::seed_from_u64(g.cfg.seed);
    for n in g.degrees(0, 12) {
        for _ in 0..2 {
            let den: i64 = rng.gen_range(2..=12);
            let mut num: i64 = rng.gen_range(1..den);
            if rng.gen_bool(0.5) {
                num = -num;
            }
            let q = QParam::new(Number::ratio(num, den)).expect("grid q");
            let x = Number::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9));
            let params = vec![p("n", n), p("q", &q), p("x", &x)];
            g.push(Tag::GaussBinomial, params, CheckMode::Exact, 0.0, move || {
                let lhs = q_pochhammer(&x, &q, n)?;
                let mut rhs = Number::zero();
                let mut xi = Number::one();
                for i in 0..=n {
                    let tri = (i as i64) * (i as i64 - 1) / 2;
                    rhs = rhs + q_binomial(n, i as i64, &q)? * q.pow_int(tri)? * &xi;
                    xi = xi * -&x;
                }
                Ok(Sides::values(lhs, rhs))
            });
        }
    }
}

/// `1/(x:q)_n = sum_i binom(n+i-1, i)_q x^i`, truncated at 200 terms.
fn neg_binomial(g: &mut Grid) {
    const TERMS: u32 = 200;
    let tol = g.tol(1e-12);
    let xs = [Number::real(0.5), Number::complex(0.3, 0.2)];
    for n in g.degrees(1, 4) {
        for q in [g.floated(&g.exact_q(1, 2)), g.complex_q()] {
            for x in &xs {
                let x = q.lift(x);
                let params = vec![p("n", n), p("q", &q), p("x", &x)];
                let q = q.clone();
                g.push(Tag::NegBinomial, params, CheckMode::Float, tol, move || {
                    let lhs = q_pochhammer(&x, &q, n)?.recip()?;
                    let mut sum = q.lift(&Number::zero());
                    let mut xi = q.lift(&Number::one());
                    for i in 0..=TERMS {
                        sum = sum + q_binomial(n + i - 1, i as i64, &q)? * &xi;
                        xi = xi * &x;
                    }
                    let rho = q.modulus();
                    let coef: f64 = (1..n).map(|j| 2.0 / (1.0 - rho.powi(j as i32))).product();
                    let ax = x.modulus();
                    let tail = coef * ax.powi(TERMS as i32 + 1) / (1.0 - ax);
                    Ok(Sides::new(
                        Evaluation::exact(lhs),
                        Evaluation { value: sum, tail_bound: tail },
                    ))
                });
            }
        }
    }
}

fn exact_rational(v: &Number) -> Result<BigRational> {
    v.as_rational()
        .cloned()
        .ok_or_else(|| Error::invalid("expected an exact value"))
}

fn near_one(step: i64) -> QParam {
    QParam::new(Number::ratio(step - 1, step)).expect("grid q")
}

/// `2 F(q_{eps/2}) - F(q_eps)` with `eps = 1e-4`.
fn richardson(f: impl Fn(&QParam) -> Result<Number>) -> Result<Number> {
    let coarse = f(&near_one(10_000))?;
    let fine = f(&near_one(20_000))?;
    Ok(Number::int(2) * fine - coarse)
}

fn q_limit(g: &mut Grid) {
    let cfg = g.series();
    let basic_tol = g.tol(1e-7);
    let higher_tol = g.tol(1e-5);
    for n in g.degrees(0, 5) {
        for xv in [0, 1] {
            let x = Number::int(xv);
            let xr = BigRational::from_integer(xv.into());
            let params = vec![p("family", "basic"), p("n", n), p("x", &x), p("eps", "1e-4,5e-5")];
            {
                let (x, xr) = (x.clone(), xr.clone());
                g.push(Tag::QLimit, params, CheckMode::Float, basic_tol, move || {
                    let lhs = richardson(|q| euler_poly(n, q, &x))?;
                    Ok(Sides::values(lhs, Number::Exact(classical_euler_poly(n, &xr))))
                });
            }
            for r in 1..=3 {
                let params = vec![
                    p("family", "order-r"),
                    p("n", n),
                    p("r", r),
                    p("x", &x),
                    p("eps", "1e-4,5e-5"),
                ];
                let (x, xr, cfg) = (x.clone(), xr.clone(), cfg.clone());
                g.push(Tag::QLimit, params, CheckMode::Float, higher_tol, move || {
                    let lhs = richardson(|q| {
                        Ok(euler_poly_order(n, r, q, &x, Method::Closed, &cfg)?.value)
                    })?;
                    Ok(Sides::values(lhs, Number::Exact(classical_euler_order(n, r, &xr))))
                });
            }
            let params = vec![
                p("family", "barnes"),
                p("n", n),
                p("a", "(1,2)"),
                p("b", "(0,0)"),
                p("x", &x),
                p("eps", "1e-4,5e-5"),
            ];
            let cfg = cfg.clone();
            g.push(Tag::QLimit, params, CheckMode::Float, higher_tol, move || {
                let a = vec![Number::int(1), Number::int(2)];
                let barnes = BarnesParams::new(a.clone(), vec![0, 0])?;
                let lhs = richardson(|q| {
                    Ok(barnes_euler(n, &barnes, q, &x, Method::Closed, &cfg)?.value)
                })?;
                let a = a.iter().map(exact_rational).collect::<Result<Vec<_>>>()?;
                Ok(Sides::values(lhs, Number::Exact(classical_barnes_euler(n, &a, &xr))))
            });
        }
    }
    let single_tol = g.tol(1e-3);
    for n in g.degrees(0, 5) {
        let x = Number::zero();
        let params = vec![p("family", "basic"), p("n", n), p("x", &x), p("eps", "1e-5")];
        g.push(Tag::QLimit, params, CheckMode::Float, single_tol, move || {
            let lhs = euler_poly(n, &near_one(100_000), &x)?;
            let rhs = classical_euler_poly(n, &BigRational::from_integer(0.into()));
            Ok(Sides::values(lhs, Number::Exact(rhs)))
        });
    }
}

/// Residue-class decomposition of the twisted basic polynomial.
fn distribution(g: &mut Grid) {
    let chi = DirichletCharacter::quadratic_mod3();
    let f = chi.conductor() as u32;
    let tol = g.tol(1e-9);
    for n in g.degrees(0, 4) {
        for x in [1, 2] {
            let x = Number::int(x);
            let q = g.rooted_q(1, 2, f, Mode::Exact);
            let params = vec![p("n", n), p("q", &q), p("x", &x), p("chi", &chi)];
            let (chi, cfg) = (chi.clone(), g.series());
            g.push(Tag::Distribution, params, CheckMode::Exact, 0.0, move || {
                Ok(Sides::new(
                    euler_chi(n, &chi, &q, &x, Method::Distribution, &cfg)?,
                    euler_chi_hr(n, 1, 1, &chi, &q, &x, Method::Closed, &cfg)?,
                ))
            });
        }
        let x = Number::int(1);
        let q = QParam::with_mode(Number::real(0.5), g.float).expect("grid q");
        let params = vec![p("n", n), p("q", &q), p("x", &x), p("chi", &chi)];
        let (chi, cfg) = (chi.clone(), g.series());
        g.push(Tag::Distribution, params, CheckMode::Float, tol, move || {
            Ok(Sides::new(
                euler_chi(n, &chi, &q, &x, Method::Distribution, &cfg)?,
                euler_chi(n, &chi, &q, &x, Method::Series, &cfg)?,
            ))
        });
    }
}

/// Each specialization arrow, checked on a fixed set of points.
fn specialization(g: &mut Grid) {
    let tol = g.tol(1e-12);
    let points = [
        (0, Number::int(1), g.floated(&g.exact_q(1, 2)), 1),
        (1, Number::int(1), g.floated(&g.exact_q(1, 2)), 2),
        (2, Number::ratio(3, 2), g.complex_q(), 3),
        (3, Number::int(2), g.complex_q(), 2),
        (4, Number::int(1), g.floated(&g.exact_q(3, 10)), 1),
    ];
    let trivial = DirichletCharacter::trivial();
    for (n, x, q, r) in points {
        let base = vec![p("n", n), p("r", r), p("q", &q), p("x", &x)];
        let with = |arrow: &str| {
            let mut v = base.clone();
            v.insert(0, p("arrow", arrow));
            v
        };
        let cfg = g.series();
        let closed = Method::Closed;
        {
            let (q, x, chi, cfg) = (q.clone(), x.clone(), trivial.clone(), cfg.clone());
            g.push(Tag::SpecializationLattice, with("trivial-chi"), CheckMode::Float, tol, move || {
                Ok(Sides::new(
                    euler_chi_order(n, r, &chi, &q, &x, closed, &cfg)?,
                    euler_poly_order(n, r, &q, &x, closed, &cfg)?,
                ))
            });
        }
        {
            let (q, x, cfg) = (q.clone(), x.clone(), cfg.clone());
            g.push(Tag::SpecializationLattice, with("h=r=1"), CheckMode::Float, tol, move || {
                Ok(Sides::new(
                    euler_poly_hr(n, 1, 1, &q, &x, closed, &cfg)?,
                    Evaluation::exact(euler_poly(n, &q, &x)?),
                ))
            });
        }
        {
            let (q, x, cfg) = (q.clone(), x.clone(), cfg.clone());
            g.push(Tag::SpecializationLattice, with("a=1,b=0"), CheckMode::Float, tol, move || {
                let params = BarnesParams::uniform(r)?;
                Ok(Sides::new(
                    barnes_euler(n, &params, &q, &x, closed, &cfg)?,
                    euler_poly_order(n, r, &q, &x, closed, &cfg)?,
                ))
            });
        }
        let chi = trivial.clone();
        g.push(Tag::SpecializationLattice, with("trivial-chi,h"), CheckMode::Float, tol, move || {
            let h = r as i64 + 1;
            Ok(Sides::new(
                euler_chi_hr(n, h, r, &chi, &q, &x, closed, &cfg)?,
                euler_poly_hr(n, h, r, &q, &x, closed, &cfg)?,
            ))
        });
    }
}

/// `E_0 = 1` for every family whose generating kernel is 1 at `t = 0`, and
/// `zeta(0, x) = 1` for the matching zeta functions.
fn normalization(g: &mut Grid) {
    let tol = g.tol(1e-12);
    let trivial = DirichletCharacter::trivial();
    let barnes = BarnesParams::new(vec![Number::int(1), Number::int(2)], vec![0, 0]).expect("barnes");
    let mut families = vec![Family::Basic];
    for r in 1..=3 {
        families.push(Family::OrderR { r });
    }
    families.push(Family::HR { h: 1, r: 1 });
    families.push(Family::Chi { chi: trivial.clone() });
    families.push(Family::ChiOrderR { r: 2, chi: trivial.clone() });
    families.push(Family::ChiHR { h: 1, r: 1, chi: trivial.clone() });
    families.push(Family::Barnes { params: barnes.clone() });
    families.push(Family::BarnesChi { chi: trivial.clone(), params: barnes.clone() });

    for q in [g.exact_q(1, 2), g.complex_q()] {
        for x in [Number::int(1), Number::int(2)] {
            for family in &families {
                let method = family.default_method();
                let q = if method == Method::Closed { q.clone() } else { g.floated(&q) };
                let params = vec![
                    p("value", "E_0"),
                    p("family", family.name()),
                    p("q", &q),
                    p("x", &x),
                ];
                let mode = mode_of(&q);
                let (spec, x, cfg) = (EulerFamilySpec::new(family.clone(), 0), x.clone(), g.series());
                g.push(Tag::Normalization, params, mode, tol, move || {
                    let lhs = spec.evaluate(&q, &x, Some(method), &cfg)?;
                    Ok(Sides::new(lhs, Evaluation::exact(q.lift(&Number::one()))))
                });
            }
            let zero = Number::zero();
            for r in 1..=3 {
                let (q, x, cfg) = (q.clone(), x.clone(), g.series());
                let params = vec![p("value", "zeta(0)"), p("family", "order-r"), p("r", r), p("q", &q), p("x", &x)];
                g.push(Tag::Normalization, params, mode_of(&q), tol, move || {
                    let v = zeta_multi(&Number::zero(), r, &q, &x, &cfg)?;
                    Ok(Sides::new(v, Evaluation::exact(q.lift(&Number::one()))))
                });
            }
            for r in 1..=2 {
                let (q, x, cfg, chi) = (q.clone(), x.clone(), g.series(), trivial.clone());
                let params = vec![p("value", "l(0)"), p("family", "chi-order-r"), p("r", r), p("q", &q), p("x", &x)];
                g.push(Tag::Normalization, params, mode_of(&q), tol, move || {
                    let v = l_multi(&Number::zero(), &chi, r, &q, &x, &cfg)?;
                    Ok(Sides::new(v, Evaluation::exact(q.lift(&Number::one()))))
                });
            }
            {
                let (q, x, cfg, params) = (q.clone(), x.clone(), g.series(), barnes.clone());
                let labels = vec![p("value", "zeta(0)"), p("family", "barnes"), p("q", &q), p("x", &x)];
                g.push(Tag::Normalization, labels, mode_of(&q), tol, move || {
                    let v = barnes_zeta(&Number::zero(), &params, &q, &x, &cfg)?;
                    Ok(Sides::new(v, Evaluation::exact(q.lift(&Number::one()))))
                });
            }
            let (qs, x, cfg) = (g.floated(&q), x.clone(), g.series());
            let labels = vec![p("value", "zeta(0) series"), p("family", "order-r"), p("r", 2), p("q", &qs), p("x", &x)];
            g.push(Tag::Normalization, labels, CheckMode::Float, tol, move || {
                let v = zeta_multi_series(&zero, 2, &qs, &x, &cfg)?;
                Ok(Sides::new(v, Evaluation::exact(Number::one())))
            });
        }
    }
}
