use proptest::prelude::*;
use qeuler::eulerpoly::{
    barnes_euler, euler_chi_hr, euler_chi_order, euler_poly, euler_poly_hr, euler_poly_order,
};
use qeuler::verify::classical_euler_poly;
use qeuler::zeta::{zeta_multi_h_series, zeta_multi_series};
use qeuler::{
    BarnesParams, BigRational, DirichletCharacter, Method, Mode, Number, Precision, QParam,
    SeriesConfig,
};

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn exact_q(num: i64, den: i64) -> QParam {
    QParam::new(Number::ratio(num, den)).unwrap()
}

fn float_q(num: i64, den: i64) -> QParam {
    QParam::with_mode(Number::ratio(num, den), Mode::Float(Precision::DOUBLE)).unwrap()
}

fn close(a: &Number, b: &Number, bound: f64) -> bool {
    (a - b).modulus() <= bound
}

#[test]
fn known_values() {
    let q = exact_q(1, 2);
    assert_eq!(euler_poly(0, &q, &Number::int(0)).unwrap(), Number::one());
    assert_eq!(euler_poly(1, &q, &Number::int(0)).unwrap(), Number::ratio(-2, 5));
    let v = euler_poly_order(1, 1, &q, &Number::int(1), Method::Closed, &cfg()).unwrap();
    assert_eq!(v.value, Number::ratio(4, 5));
    assert_eq!(v.tail_bound, 0.0);
}

#[test]
fn classical_limit_is_approached() {
    let x = Number::int(0);
    let oracle = Number::Exact(classical_euler_poly(3, &BigRational::from_integer(0.into())));
    let err = |den: i64| (euler_poly(3, &exact_q(den - 1, den), &x).unwrap() - &oracle).modulus();
    assert!(err(1000) < err(100));
    assert!(err(1000) < 1e-2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn order_one_is_basic(n in 0u32..7, num in 1i64..8, x in 0i64..3) {
        let q = exact_q(num, 9);
        let x = Number::int(x);
        let basic = euler_poly(n, &q, &x).unwrap();
        let order = euler_poly_order(n, 1, &q, &x, Method::Closed, &cfg()).unwrap().value;
        let hr = euler_poly_hr(n, 1, 1, &q, &x, Method::Closed, &cfg()).unwrap().value;
        prop_assert_eq!(&basic, &order);
        prop_assert_eq!(&basic, &hr);
    }

    #[test]
    fn uniform_barnes_is_order_r(n in 0u32..6, r in 1u32..4, num in 1i64..8, x in 0i64..3) {
        let q = exact_q(num, 9);
        let x = Number::int(x);
        let params = BarnesParams::uniform(r).unwrap();
        let barnes = barnes_euler(n, &params, &q, &x, Method::Closed, &cfg()).unwrap().value;
        let order = euler_poly_order(n, r, &q, &x, Method::Closed, &cfg()).unwrap().value;
        prop_assert_eq!(barnes, order);
    }

    #[test]
    fn trivial_character_drops_out(n in 0u32..6, h in 1i64..5, r in 1u32..4, num in 1i64..8) {
        let q = exact_q(num, 9);
        let x = Number::int(1);
        let chi = DirichletCharacter::trivial();
        let twisted = euler_chi_hr(n, h, r, &chi, &q, &x, Method::Closed, &cfg()).unwrap().value;
        let plain = euler_poly_hr(n, h, r, &q, &x, Method::Closed, &cfg()).unwrap().value;
        prop_assert_eq!(twisted, plain);
        let twisted = euler_chi_order(n, r, &chi, &q, &x, Method::Closed, &cfg()).unwrap().value;
        let plain = euler_poly_order(n, r, &q, &x, Method::Closed, &cfg()).unwrap().value;
        prop_assert_eq!(twisted, plain);
    }

    #[test]
    fn closed_matches_series(n in 0u32..6, r in 1u32..4, num in 1i64..5, x in 0i64..3) {
        let x = Number::int(x);
        let closed = euler_poly_order(n, r, &exact_q(num, 10), &x, Method::Closed, &cfg()).unwrap();
        let series = euler_poly_order(n, r, &float_q(num, 10), &x, Method::Series, &cfg()).unwrap();
        prop_assert!(close(&closed.value, &series.value, 1e-10 + series.tail_bound));
    }

    #[test]
    fn zeta_interpolates_at_negative_integers(n in 0u32..5, h in 2i64..5, r in 1u32..3, num in 1i64..5) {
        let x = Number::int(1);
        let s = Number::int(-(n as i64));
        let q = float_q(num, 10);
        let poly = euler_poly_hr(n, h, r, &exact_q(num, 10), &x, Method::Closed, &cfg()).unwrap();
        let zeta = zeta_multi_h_series(&s, h, r, &q, &x, &cfg()).unwrap();
        prop_assert!(close(&poly.value, &zeta.value, 1e-9 + zeta.tail_bound));
        let poly = euler_poly_order(n, r, &exact_q(num, 10), &x, Method::Closed, &cfg()).unwrap();
        let zeta = zeta_multi_series(&s, r, &q, &x, &cfg()).unwrap();
        prop_assert!(close(&poly.value, &zeta.value, 1e-9 + zeta.tail_bound));
    }
}
