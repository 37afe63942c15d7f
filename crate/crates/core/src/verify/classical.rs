//! Classical (q = 1) Euler polynomials, used as limit targets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::binomial;

fn big_binomial(n: usize, k: usize) -> BigRational {
    BigRational::from_integer(binomial(n as u64, k as u64))
}

/// `E_0(x), ..., E_n(x)` from `sum_k binom(m,k) E_k(x) + E_m(x) = 2 x^m`.
fn euler_values(n: u32, x: &BigRational) -> Vec<BigRational> {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut out: Vec<BigRational> = Vec::with_capacity(n as usize + 1);
    let mut xm = BigRational::one();
    for m in 0..=n as usize {
        let mut acc = &two * &xm;
        for (k, e) in out.iter().enumerate() {
            acc -= big_binomial(m, k) * e;
        }
        out.push(acc / &two);
        xm *= x;
    }
    out
}

/// Binomial convolution `c_n = sum_k binom(n,k) a_k b_{n-k}`.
fn convolve(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    (0..a.len().min(b.len()))
        .map(|n| {
            (0..=n).fold(BigRational::zero(), |acc, k| {
                acc + big_binomial(n, k) * &a[k] * &b[n - k]
            })
        })
        .collect()
}

fn powers(x: &BigRational, n: u32) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut p = BigRational::one();
    for _ in 0..=n {
        out.push(p.clone());
        p *= x;
    }
    out
}

/// `E_n(x)`, the coefficients of `2 e^{xt} / (e^t + 1)`.
pub fn classical_euler_poly(n: u32, x: &BigRational) -> BigRational {
    euler_values(n, x).pop().unwrap_or_else(BigRational::one)
}

/// `E_n^{(r)}(x)`, the coefficients of `(2 / (e^t + 1))^r e^{xt}`.
pub fn classical_euler_order(n: u32, r: u32, x: &BigRational) -> BigRational {
    let numbers = euler_values(n, &BigRational::zero());
    let mut c = numbers.clone();
    for _ in 1..r.max(1) {
        c = convolve(&c, &numbers);
    }
    convolve(&c, &powers(x, n)).pop().unwrap_or_else(BigRational::one)
}

/// Barnes-type `E_n^{(r)}(x | a)`, the coefficients of
/// `2^r / prod_j (e^{a_j t} + 1) e^{xt}`.
pub fn classical_barnes_euler(n: u32, a: &[BigRational], x: &BigRational) -> BigRational {
    let numbers = euler_values(n, &BigRational::zero());
    let mut c = powers(x, n);
    for aj in a {
        let scaled: Vec<BigRational> = numbers
            .iter()
            .zip(powers(aj, n))
            .map(|(e, p)| e * p)
            .collect();
        c = convolve(&c, &scaled);
    }
    c.pop().unwrap_or_else(BigRational::one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn known_values() {
        let zero = q(0, 1);
        assert_eq!(classical_euler_poly(0, &q(3, 7)), q(1, 1));
        assert_eq!(classical_euler_poly(1, &zero), q(-1, 2));
        assert_eq!(classical_euler_poly(2, &zero), zero);
        assert_eq!(classical_euler_poly(3, &zero), q(1, 4));
        assert_eq!(classical_euler_order(0, 3, &q(5, 2)), q(1, 1));
        assert_eq!(classical_euler_order(2, 2, &zero), q(1, 2));
        assert_eq!(classical_barnes_euler(0, &[q(1, 1), q(2, 1)], &zero), q(1, 1));
        assert_eq!(classical_barnes_euler(1, &[q(1, 1), q(2, 1)], &zero), q(-3, 2));
    }

    #[test]
    fn closed_form_in_x() {
        // E_1(x) = x - 1/2, E_2(x) = x^2 - x.
        for x in [q(0, 1), q(1, 1), q(-3, 4), q(7, 3)] {
            assert_eq!(classical_euler_poly(1, &x), &x - q(1, 2));
            assert_eq!(classical_euler_poly(2, &x), &x * &x - &x);
        }
    }

    #[test]
    fn specializations_agree() {
        let one = q(1, 1);
        for n in 0..8 {
            for x in [q(0, 1), q(1, 1), q(2, 3)] {
                let e = classical_euler_poly(n, &x);
                assert_eq!(classical_euler_order(n, 1, &x), e);
                assert_eq!(classical_barnes_euler(n, std::slice::from_ref(&one), &x), e);
                assert_eq!(
                    classical_barnes_euler(n, &[one.clone(), one.clone()], &x),
                    classical_euler_order(n, 2, &x)
                );
            }
        }
    }

    #[test]
    fn symmetry() {
        // E_n(1 - x) = (-1)^n E_n(x).
        for n in 0..10 {
            for x in [q(0, 1), q(1, 3), q(5, 2)] {
                let lhs = classical_euler_poly(n, &(q(1, 1) - &x));
                let rhs = classical_euler_poly(n, &x);
                assert_eq!(lhs, if n % 2 == 0 { rhs } else { -rhs });
            }
        }
    }
}
