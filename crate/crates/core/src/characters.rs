//! Dirichlet characters of odd conductor and convolutions of twisted weights.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::{Mode, Number, Precision};

const FLOAT_TOLERANCE: f64 = 1e-9;

/// A Dirichlet character given by its table of values on `0..f`.
#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCharacter {
    conductor: u64,
    values: Vec<Number>,
}

impl DirichletCharacter {
    pub fn trivial() -> Self {
        DirichletCharacter {
            conductor: 1,
            values: vec![Number::one()],
        }
    }

    /// The real character mod 3: `0, 1, -1`.
    pub fn quadratic_mod3() -> Self {
        Self::from_table(3, vec![Number::zero(), Number::one(), Number::int(-1)])
            .expect("valid table")
    }

    pub fn from_table(f: u64, values: Vec<Number>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidCharacter(msg));
        if f == 0 || f % 2 == 0 {
            return bad(format!("conductor must be odd and positive, got {f}"));
        }
        if values.len() as u64 != f {
            return bad(format!("expected {f} values, got {}", values.len()));
        }
        if f == 1 {
            if !close(&values[0], &Number::one()) {
                return bad("the character mod 1 must take the value 1".into());
            }
            return Ok(DirichletCharacter { conductor: 1, values });
        }
        for (a, v) in values.iter().enumerate() {
            let unit = (a as u64).gcd(&f) == 1;
            if !unit && !v.is_zero() {
                return bad(format!("nonzero value at residue {a}, which is not a unit mod {f}"));
            }
            if unit && v.is_zero() {
                return bad(format!("zero value at unit residue {a}"));
            }
        }
        if !close(&values[1], &Number::one()) {
            return bad("value at 1 must be 1".into());
        }
        for a in 0..f {
            for b in a..f {
                let ab = &values[(a * b % f) as usize];
                let prod = &values[a as usize] * &values[b as usize];
                if !close(ab, &prod) {
                    return bad(format!("not multiplicative: chi({a}*{b}) != chi({a})chi({b})"));
                }
            }
        }
        let phi = (1..f).filter(|a| a.gcd(&f) == 1).count() as i64;
        for (a, v) in values.iter().enumerate() {
            if !v.is_zero() && !close(&v.powi(phi)?, &Number::one()) {
                return bad(format!("value at {a} is not a root of unity of order dividing {phi}"));
            }
        }
        Ok(DirichletCharacter { conductor: f, values })
    }

    /// Parses `f=3;values=0,1,-1`.
    pub fn parse(s: &str, prec: Precision) -> Result<Self> {
        let err = || Error::parse("character", s);
        let mut conductor = None;
        let mut values = None;
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part.split_once('=').ok_or_else(err)?;
            match key.trim() {
                "f" => conductor = Some(val.trim().parse::<u64>().map_err(|_| err())?),
                "values" => {
                    let vals = val
                        .split(',')
                        .map(|v| Number::parse_with_precision(v, prec))
                        .collect::<Result<Vec<_>>>()?;
                    values = Some(vals);
                }
                _ => return Err(err()),
            }
        }
        Self::from_table(conductor.ok_or_else(err)?, values.ok_or_else(err)?)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn values(&self) -> &[Number] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.conductor == 1
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(Number::is_exact)
    }

    /// `chi(m)`, extended periodically.
    pub fn value(&self, m: u64) -> &Number {
        &self.values[(m % self.conductor) as usize]
    }

    pub fn value_at(&self, m: i64) -> &Number {
        &self.values[m.rem_euclid(self.conductor as i64) as usize]
    }

    pub(crate) fn check_mode(&self, mode: Mode) -> Result<()> {
        if mode == Mode::Exact && !self.is_exact() {
            return Err(Error::invalid(
                "exact mode requires a character with rational values",
            ));
        }
        Ok(())
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f={};values=", self.conductor)?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v.render(None))?;
        }
        Ok(())
    }
}

fn close(a: &Number, b: &Number) -> bool {
    if a.is_exact() && b.is_exact() {
        a == b
    } else {
        (a - b).modulus() <= FLOAT_TOLERANCE
    }
}

/// Per-coordinate weight `w(m) = ratio^m`, times `chi(m)` when `twisted`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoordinateWeight {
    pub ratio: Number,
    pub twisted: bool,
}

impl CoordinateWeight {
    pub fn new(ratio: Number, twisted: bool) -> Self {
        CoordinateWeight { ratio, twisted }
    }

    /// The weight `chi(m)`.
    pub fn character() -> Self {
        CoordinateWeight::new(Number::one(), true)
    }

    pub fn sequence(&self, chi: &DirichletCharacter, m_max: usize) -> Vec<Number> {
        let mut out = Vec::with_capacity(m_max + 1);
        let mut power = self.ratio.unit();
        for m in 0..=m_max {
            let w = if self.twisted {
                &power * chi.value(m as u64)
            } else {
                power.clone()
            };
            out.push(w);
            power = &power * &self.ratio;
        }
        out
    }
}

/// Truncated Cauchy product of two sequences.
pub fn cauchy_product(a: &[Number], b: &[Number]) -> Vec<Number> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|m| {
            (0..=m)
                .filter(|&i| !a[i].is_zero() && !b[m - i].is_zero())
                .map(|i| &a[i] * &b[m - i])
                .sum()
        })
        .collect()
}

/// `c[m] = sum over m_1 + ... + m_r = m of prod_j w_j(m_j)`, for `m = 0..=m_max`.
pub fn character_convolution(
    chi: &DirichletCharacter,
    weights: &[CoordinateWeight],
    m_max: usize,
) -> Result<Vec<Number>> {
    let (first, rest) = weights
        .split_first()
        .ok_or_else(|| Error::invalid("at least one coordinate weight is required"))?;
    let mut acc = first.sequence(chi, m_max);
    for w in rest {
        acc = cauchy_product(&acc, &w.sequence(chi, m_max));
    }
    Ok(acc)
}

/// `sum_{m >= 0} chi(m) (-z)^m = sum_{a < f} chi(a) (-z)^a / (1 + z^f)` for `|z| < 1`.
pub fn twisted_geometric_sum(chi: &DirichletCharacter, z: &Number) -> Result<Number> {
    let one = z.unit();
    let mut acc = Number::zero();
    let mut power = one.clone();
    let minus_z = -z;
    for a in 0..chi.conductor() {
        let v = chi.value(a);
        if !v.is_zero() {
            acc = acc + v * &power;
        }
        power = power * &minus_z;
    }
    let zf = z.powi(chi.conductor() as i64)?;
    acc.checked_div(&(one + zf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::binomial;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Number> {
        v.iter().map(|&k| Number::int(k)).collect()
    }

    #[test]
    fn table_validation() {
        let triv = DirichletCharacter::from_table(1, ints(&[1])).unwrap();
        assert!(triv.is_trivial());
        assert_eq!(triv.value(17), &Number::one());
        let chi = DirichletCharacter::from_table(3, ints(&[0, 1, -1])).unwrap();
        assert_eq!(chi.value(5), &Number::int(-1));
        assert_eq!(chi.value(6), &Number::zero());
        assert!(DirichletCharacter::from_table(3, ints(&[0, 1, 1])).is_ok());
        for (f, table) in [
            (3, vec![1, 1, 1]),
            (4, vec![0, 1, 0, -1]),
            (3, vec![0, 1]),
            (5, vec![0, 1, -1, 1, -1]),
            (5, vec![0, 1, 2, 2, 1]),
            (3, vec![0, -1, 1]),
        ] {
            assert!(
                matches!(
                    DirichletCharacter::from_table(f, ints(&table)),
                    Err(Error::InvalidCharacter(_))
                ),
                "{f} {table:?}"
            );
        }
    }

    #[test]
    fn complex_characters_mod5() {
        let i = Number::complex(0.0, 1.0);
        let mi = Number::complex(0.0, -1.0);
        let table = vec![Number::zero(), Number::one(), i, mi, Number::int(-1)];
        let chi = DirichletCharacter::from_table(5, table).unwrap();
        assert!(!chi.is_exact());
        assert!(chi.check_mode(Mode::Exact).is_err());
        let bad = vec![Number::zero(), Number::one(), Number::complex(0.0, 1.0), Number::complex(0.0, 1.0), Number::int(-1)];
        assert!(DirichletCharacter::from_table(5, bad).is_err());
    }

    #[test]
    fn parse_and_display() {
        let chi = DirichletCharacter::parse("f=3;values=0,1,-1", Precision::DOUBLE).unwrap();
        assert_eq!(chi, DirichletCharacter::quadratic_mod3());
        assert_eq!(chi.to_string(), "f=3;values=0,1,-1");
        let z = DirichletCharacter::parse("f=5; values=0,1,i,-i,-1", Precision::DOUBLE).unwrap();
        assert_eq!(z.conductor(), 5);
        assert!(DirichletCharacter::parse("values=0,1,-1", Precision::DOUBLE).is_err());
        assert!(DirichletCharacter::parse("f=3;values=0,1,x", Precision::DOUBLE).is_err());
    }

    #[test]
    fn convolution_examples() {
        let chi = DirichletCharacter::quadratic_mod3();
        let c = character_convolution(&chi, &[CoordinateWeight::character()], 6).unwrap();
        assert_eq!(c, ints(&[0, 1, -1, 0, 1, -1, 0]));
        let c2 = character_convolution(&chi, &[CoordinateWeight::character(), CoordinateWeight::character()], 6).unwrap();
        let brute: Vec<Number> = (0..=6u64)
            .map(|m| (0..=m).map(|a| chi.value(a) * chi.value(m - a)).sum())
            .collect();
        assert_eq!(c2, brute);
        assert_eq!(&c2[..5], &ints(&[0, 0, 1, -2, 1])[..]);

        let triv = DirichletCharacter::trivial();
        for r in 1..5usize {
            let ws = vec![CoordinateWeight::character(); r];
            let c = character_convolution(&triv, &ws, 20).unwrap();
            for (m, v) in c.iter().enumerate() {
                let expected = binomial((m + r - 1) as u64, m as u64);
                assert_eq!(v, &Number::Exact(expected.into()));
            }
        }
        assert!(character_convolution(&triv, &[], 3).is_err());
    }

    #[test]
    fn twisted_geometric_matches_partial_sums() {
        let chi = DirichletCharacter::quadratic_mod3();
        let z = Number::ratio(1, 2);
        let closed = twisted_geometric_sum(&chi, &z).unwrap();
        // -(z + z^2)/(1 + z^3) at z = 1/2
        assert_eq!(closed, Number::ratio(-2, 3));
        let zc = Number::complex(0.3, -0.4);
        let mut partial = Number::zero();
        let mut p = Number::complex(1.0, 0.0);
        for m in 0..200u64 {
            partial = partial + chi.value(m) * &p;
            p = p * -&zc;
        }
        let closed = twisted_geometric_sum(&chi, &zc).unwrap();
        assert!((closed - partial).modulus() < 1e-14);
        let triv = twisted_geometric_sum(&DirichletCharacter::trivial(), &z).unwrap();
        assert_eq!(triv, Number::ratio(2, 3));
    }

    proptest! {
        #[test]
        fn periodicity(m in 0u64..10_000) {
            let chi = DirichletCharacter::quadratic_mod3();
            prop_assert_eq!(chi.value(m), chi.value(m + 3));
            let chi5 = DirichletCharacter::from_table(5, ints(&[0, 1, -1, -1, 1])).unwrap();
            prop_assert_eq!(chi5.value(m), chi5.value(m + 5));
        }

        #[test]
        fn convolution_is_associative(r1 in -5i64..5, r2 in -5i64..5, r3 in -5i64..5, d in 2i64..7, t in proptest::bool::ANY) {
            let chi = DirichletCharacter::quadratic_mod3();
            let w = |r: i64| CoordinateWeight::new(Number::ratio(r, d), t).sequence(&chi, 25);
            let (a, b, c) = (w(r1), w(r2), w(r3));
            prop_assert_eq!(cauchy_product(&cauchy_product(&a, &b), &c), cauchy_product(&a, &cauchy_product(&b, &c)));
        }
    }
}
