use super::*;
use crate::scalar::Mode;
use proptest::prelude::*;

fn exact(n: i64, d: i64) -> QParam {
    QParam::new(Number::ratio(n, d)).unwrap()
}

fn float(v: f64) -> QParam {
    QParam::new(Number::real(v)).unwrap()
}

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn close(a: &Number, b: &Number, tol: f64) -> bool {
    (a - b).modulus() <= tol
}

fn chi3() -> DirichletCharacter {
    DirichletCharacter::quadratic_mod3()
}

#[test]
fn basic_values() {
    let q = exact(1, 2);
    assert_eq!(euler_poly(0, &q, &Number::int(3)).unwrap(), Number::one());
    assert_eq!(euler_poly(1, &q, &Number::zero()).unwrap(), Number::ratio(-2, 5));
    assert_eq!(euler_poly(1, &q, &Number::one()).unwrap(), Number::ratio(4, 5));
    let qc = QParam::new(Number::complex(0.4, 0.3)).unwrap();
    let v = euler_poly(0, &qc, &Number::complex(0.5, 1.0)).unwrap();
    assert!(close(&v, &Number::one(), 1e-14));
}

#[test]
fn recurrence_is_exact() {
    for q in [exact(1, 3), exact(2, 5), exact(7, 10)] {
        let e: Vec<Number> = (0..=10).map(|k| euler_poly(k, &q, &Number::zero()).unwrap()).collect();
        assert_eq!(e[0], Number::one());
        for n in 1..=10u32 {
            let mut s = Number::zero();
            for k in 0..=n {
                s = s + Number::Exact(crate::scalar::binomial(n as u64, k as u64).into())
                    * q.pow_int(k as i64).unwrap()
                    * &e[k as usize];
            }
            assert_eq!(q.value() * &s + &e[n as usize], Number::zero(), "n={n}");
        }
    }
}

#[test]
fn order_r_representations() {
    let q = exact(1, 2);
    for r in 1..4 {
        let v = euler_poly_order(0, r, &q, &Number::int(2), Method::Closed, &cfg()).unwrap();
        assert_eq!(v.value, Number::one());
    }
    let closed = euler_poly_order(1, 1, &q, &Number::one(), Method::Closed, &cfg()).unwrap();
    assert_eq!(closed.value, Number::ratio(4, 5));
    let qf = float(0.5);
    let series = euler_poly_order(1, 1, &qf, &Number::one(), Method::Series, &cfg()).unwrap();
    assert!(close(&series.value, &Number::ratio(4, 5), 1e-13));

    let q3 = exact(1, 3);
    let closed = euler_poly_order(2, 2, &q3, &Number::zero(), Method::Closed, &cfg()).unwrap();
    let series = euler_poly_order(
        2,
        2,
        &q3.in_mode(Mode::float()).unwrap(),
        &Number::zero(),
        Method::Series,
        &cfg().with_terms(300),
    )
    .unwrap();
    assert!(close(&closed.value, &series.value, 1e-12));
    assert!(series.tail_bound > 0.0 && series.tail_bound < 1e-100);
}

#[test]
fn hr_representations() {
    let q = exact(1, 2);
    let v = euler_poly_hr(0, 1, 1, &q, &Number::int(5), Method::Closed, &cfg()).unwrap();
    assert_eq!(v.value, Number::one());
    let v = euler_poly_hr(0, 3, 2, &q, &Number::zero(), Method::Closed, &cfg()).unwrap();
    assert_eq!(v.value, Number::ratio(8, 5));
    let closed = euler_poly_hr(1, 2, 2, &q, &Number::zero(), Method::Closed, &cfg()).unwrap();
    let series =
        euler_poly_hr(1, 2, 2, &float(0.5), &Number::zero(), Method::Series, &cfg().with_terms(300)).unwrap();
    assert!(close(&closed.value, &series.value, 1e-12));
    assert!(matches!(
        euler_poly_hr(1, 1, 2, &q, &Number::zero(), Method::Series, &cfg()),
        Err(Error::Divergence(_))
    ));
    // the closed form has no convergence condition
    assert!(euler_poly_hr(2, -1, 2, &q, &Number::zero(), Method::Closed, &cfg()).is_ok());
}

#[test]
fn hr_degenerates_to_basic() {
    let q = exact(3, 10);
    for n in 0..7 {
        for x in [Number::zero(), Number::int(2), Number::int(-3)] {
            let hr = euler_poly_hr(n, 1, 1, &q, &x, Method::Closed, &cfg()).unwrap();
            assert_eq!(hr.value, euler_poly(n, &q, &x).unwrap());
            let o = euler_poly_order(n, 1, &q, &x, Method::Closed, &cfg()).unwrap();
            assert_eq!(o.value, hr.value);
        }
    }
}

#[test]
fn chi_values() {
    let q = exact(1, 2);
    let d = euler_chi(0, &chi3(), &q, &Number::zero(), Method::Distribution, &cfg()).unwrap();
    assert_eq!(d.value, Number::int(-1));
    let s = euler_chi(0, &chi3(), &float(0.5), &Number::zero(), Method::Series, &cfg()).unwrap();
    assert!(close(&s.value, &Number::int(-1), 1e-14));

    let triv = DirichletCharacter::trivial();
    for n in 0..5 {
        let d = euler_chi(n, &triv, &q, &Number::int(2), Method::Distribution, &cfg()).unwrap();
        assert_eq!(d.value, euler_poly(n, &q, &Number::int(2)).unwrap());
        let s = euler_chi(n, &triv, &float(0.5), &Number::int(2), Method::Series, &cfg()).unwrap();
        assert!(close(&s.value, &d.value, 1e-12));
    }
    assert!(euler_chi(1, &chi3(), &q, &Number::zero(), Method::Closed, &cfg()).is_err());
}

#[test]
fn chi_distribution_with_cube_root() {
    let u = Number::ratio(1, 2);
    let q = QParam::from_root(u, 3, Mode::Exact).unwrap();
    for n in 0..5 {
        for x in [Number::zero(), Number::one()] {
            let d = euler_chi(n, &chi3(), &q, &x, Method::Distribution, &cfg()).unwrap();
            let c = euler_chi_hr(n, 1, 1, &chi3(), &q, &x, Method::Closed, &cfg()).unwrap();
            assert!(d.value.is_exact());
            assert_eq!(d.value, c.value, "n={n}");
        }
    }
}

#[test]
fn chi_order_values() {
    let q = exact(1, 2);
    let v = euler_chi_order(0, 2, &chi3(), &q, &Number::zero(), Method::Closed, &cfg()).unwrap();
    assert_eq!(v.value, Number::one());
    let s = euler_chi_order(0, 2, &chi3(), &float(0.5), &Number::zero(), Method::Series, &cfg()).unwrap();
    assert!(close(&s.value, &Number::one(), 1e-13));

    let triv = DirichletCharacter::trivial();
    for n in 0..=4 {
        for r in 1..=3 {
            let a = euler_chi_order(n, r, &triv, &q, &Number::one(), Method::Closed, &cfg()).unwrap();
            let b = euler_poly_order(n, r, &q, &Number::one(), Method::Closed, &cfg()).unwrap();
            assert_eq!(a.value, b.value);
        }
    }
    let qf = float(0.3);
    for n in 0..4 {
        let a = euler_chi_order(n, 1, &chi3(), &qf, &Number::one(), Method::Series, &cfg()).unwrap();
        let b = euler_chi(n, &chi3(), &qf, &Number::one(), Method::Series, &cfg()).unwrap();
        assert_eq!(a.value, b.value);
    }
}

#[test]
fn chi_hr_values() {
    let q = exact(1, 2);
    let c = euler_chi_hr(0, 2, 1, &chi3(), &q, &Number::zero(), Method::Closed, &cfg()).unwrap();
    assert_eq!(c.value, Number::ratio(-6, 13));
    let s = euler_chi_hr(0, 2, 1, &chi3(), &float(0.5), &Number::zero(), Method::Series, &cfg()).unwrap();
    assert!(close(&s.value, &Number::ratio(-6, 13), 1e-14));

    let triv = DirichletCharacter::trivial();
    for (h, r) in [(1, 1), (2, 2), (4, 2), (3, 3), (0, 2)] {
        for n in 0..4 {
            let a = euler_chi_hr(n, h, r, &triv, &q, &Number::one(), Method::Closed, &cfg()).unwrap();
            let b = euler_poly_hr(n, h, r, &q, &Number::one(), Method::Closed, &cfg()).unwrap();
            assert_eq!(a.value, b.value, "h={h} r={r} n={n}");
        }
    }

    let qf = float(0.5);
    let s = euler_chi_hr(1, 2, 2, &chi3(), &qf, &Number::zero(), Method::Series, &cfg()).unwrap();
    let d = euler_chi_hr(1, 2, 2, &chi3(), &qf, &Number::zero(), Method::Distribution, &cfg()).unwrap();
    assert!(close(&s.value, &d.value, 1e-10));
}

#[test]
fn barnes_values() {
    let q = exact(1, 2);
    let params = BarnesParams::new(vec![Number::int(1), Number::int(2)], vec![0, 0]).unwrap();
    let v = barnes_euler(0, &params, &q, &Number::int(3), Method::Closed, &cfg()).unwrap();
    assert_eq!(v.value, Number::one());

    let one = BarnesParams::uniform(1).unwrap();
    for n in 0..5 {
        let v = barnes_euler(n, &one, &q, &Number::int(2), Method::Closed, &cfg()).unwrap();
        assert_eq!(v.value, euler_poly(n, &q, &Number::int(2)).unwrap());
    }
    for r in 1..4 {
        let u = BarnesParams::uniform(r).unwrap();
        for n in 0..4 {
            let a = barnes_euler(n, &u, &q, &Number::one(), Method::Closed, &cfg()).unwrap();
            let b = euler_poly_order(n, r, &q, &Number::one(), Method::Closed, &cfg()).unwrap();
            assert_eq!(a.value, b.value);
        }
    }

    let qf = float(0.5);
    let closed = barnes_euler(1, &params, &qf, &Number::zero(), Method::Closed, &cfg()).unwrap();
    let series =
        barnes_euler(1, &params, &qf, &Number::zero(), Method::Series, &cfg().with_terms(60)).unwrap();
    assert!(close(&closed.value, &series.value, 1e-9));
    assert!(series.tail_bound < 1e-12);
}

#[test]
fn barnes_guards() {
    assert!(BarnesParams::new(vec![Number::int(1)], vec![0, 0]).is_err());
    assert!(BarnesParams::new(vec![Number::int(-1)], vec![0]).is_err());
    assert!(BarnesParams::new(vec![], vec![]).is_err());
    let p = BarnesParams::new(vec![Number::int(1)], vec![-1]).unwrap();
    let q = float(0.5);
    assert!(matches!(
        barnes_euler(1, &p, &q, &Number::one(), Method::Series, &cfg()),
        Err(Error::Divergence(_))
    ));
    let p3 = BarnesParams::uniform(3).unwrap();
    assert!(matches!(
        barnes_euler(1, &p3, &q, &Number::one(), Method::Series, &cfg()),
        Err(Error::TermCap { .. })
    ));
    let half = BarnesParams::new(vec![Number::ratio(1, 2)], vec![0]).unwrap();
    assert!(matches!(
        barnes_euler(1, &half, &exact(1, 2), &Number::one(), Method::Closed, &cfg()),
        Err(Error::InexactPower(_))
    ));
    assert!(barnes_euler(1, &half, &q, &Number::one(), Method::Closed, &cfg()).is_ok());
}

#[test]
fn barnes_chi_values() {
    let qf = float(0.5);
    let p = BarnesParams::new(vec![Number::int(1)], vec![1]).unwrap();
    let v = barnes_euler_chi(0, &chi3(), &p, &qf, &Number::zero(), &cfg().with_terms(80)).unwrap();
    assert!(close(&v.value, &Number::ratio(-6, 13), 1e-14));

    let c = cfg().with_terms(60);
    let params = BarnesParams::new(vec![Number::int(1), Number::int(2)], vec![0, 1]).unwrap();
    let triv = DirichletCharacter::trivial();
    let a = barnes_euler_chi(2, &triv, &params, &qf, &Number::one(), &c).unwrap();
    let b = barnes_euler(2, &params, &qf, &Number::one(), Method::Series, &c).unwrap();
    assert_eq!(a.value, b.value);

    let u2 = BarnesParams::uniform(2).unwrap();
    for n in 0..3 {
        let a = barnes_euler_chi(n, &chi3(), &u2, &qf, &Number::one(), &c).unwrap();
        let b = euler_chi_order(n, 2, &chi3(), &exact(1, 2), &Number::one(), Method::Closed, &cfg()).unwrap();
        assert!(close(&a.value, &b.value, 1e-12));
    }
}

#[test]
fn weight_spellings_agree() {
    let q = exact(-3, 7);
    for b in 0..4i64 {
        for m in 0..20i64 {
            let sign = if m % 2 == 0 { Number::one() } else { Number::int(-1) };
            let lhs = sign * q.pow_int((b + 1) * m).unwrap();
            let rhs = (-q.value()).powi(m).unwrap() * q.pow_int(b * m).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn tail_bound_is_enforced() {
    let q = float(0.95);
    let e = euler_poly_order(2, 2, &q, &Number::one(), Method::Series, &cfg().with_terms(50));
    assert!(matches!(e, Err(Error::TailBound { .. })));
    let e = euler_poly_order(2, 2, &q, &Number::one(), Method::Series, &cfg().with_terms(50).unchecked());
    assert!(e.unwrap().tail_bound > 1e-10);
}

#[test]
fn doubling_terms_stays_within_bound() {
    let q = QParam::new(Number::complex(0.4, 0.3)).unwrap();
    let loose = cfg().with_terms(40).unchecked();
    let tight = cfg().with_terms(80).unchecked();
    let x = Number::complex(1.5, 0.25);
    let cases: Vec<(Evaluation, Evaluation)> = vec![
        (
            euler_poly_order(3, 3, &q, &x, Method::Series, &loose).unwrap(),
            euler_poly_order(3, 3, &q, &x, Method::Series, &tight).unwrap(),
        ),
        (
            euler_poly_hr(2, 3, 2, &q, &x, Method::Series, &loose).unwrap(),
            euler_poly_hr(2, 3, 2, &q, &x, Method::Series, &tight).unwrap(),
        ),
        (
            euler_chi_hr(2, 3, 2, &chi3(), &q, &x, Method::Series, &loose).unwrap(),
            euler_chi_hr(2, 3, 2, &chi3(), &q, &x, Method::Series, &tight).unwrap(),
        ),
    ];
    for (a, b) in cases {
        assert!((&a.value - &b.value).modulus() <= a.tail_bound, "{} > {}", (&a.value - &b.value).modulus(), a.tail_bound);
    }
}

#[test]
fn family_spec_dispatch() {
    let q = exact(1, 2);
    let spec = EulerFamilySpec::new(Family::OrderR { r: 1 }, 1);
    let v = spec.evaluate(&q, &Number::one(), None, &cfg()).unwrap();
    assert_eq!(v.value, Number::ratio(4, 5));
    let spec = EulerFamilySpec::new(Family::Chi { chi: chi3() }, 0);
    assert_eq!(spec.family.default_method(), Method::Series);
    let v = spec.evaluate(&q, &Number::zero(), Some(Method::Distribution), &cfg()).unwrap();
    assert_eq!(v.value, Number::int(-1));
    assert!(spec.evaluate(&q, &Number::zero(), Some(Method::Closed), &cfg()).is_err());
    assert_eq!("series".parse::<Method>().unwrap(), Method::Series);
    assert!("other".parse::<Method>().is_err());
}

proptest! {
    #[test]
    fn recurrence_random_rationals(num in 1i64..19, den in 20i64..40, neg in proptest::bool::ANY, n in 1u32..8) {
        let q = exact(if neg { -num } else { num }, den);
        let mut s = Number::zero();
        for k in 0..=n {
            s = s + Number::Exact(crate::scalar::binomial(n as u64, k as u64).into())
                * q.pow_int(k as i64).unwrap()
                * euler_poly(k, &q, &Number::zero()).unwrap();
        }
        prop_assert_eq!(q.value() * &s + euler_poly(n, &q, &Number::zero()).unwrap(), Number::zero());
    }

    #[test]
    fn order_closed_matches_series(n in 0u32..6, r in 1u32..4, re in 0.1f64..0.6, im in -0.3f64..0.3, x in 0.5f64..3.0) {
        let q = QParam::new(Number::complex(re, im)).unwrap();
        let x = Number::real(x);
        let c = euler_poly_order(n, r, &q, &x, Method::Closed, &cfg()).unwrap();
        let s = euler_poly_order(n, r, &q, &x, Method::Series, &cfg()).unwrap();
        let scale = 1.0 + c.value.modulus();
        prop_assert!((&c.value - &s.value).modulus() <= 1e-10 * scale + s.tail_bound);
    }
}
