//! Complex floating-point values at a configurable binary precision.
//!
//! Precisions up to 53 bits use `Complex64` directly; anything wider is
//! carried as a pair of `astro_float::BigFloat` components.

use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::Precision;

const RM: RoundingMode = RoundingMode::ToEven;
/// Extra working bits for multi-step operations (complex division, ln, exp).
const GUARD_BITS: usize = 64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone, Debug)]
pub struct CFloat {
    repr: Repr,
}

#[derive(Clone, Debug)]
enum Repr {
    Native(Complex64),
    Multi(Box<Multi>),
}

#[derive(Clone, Debug)]
struct Multi {
    re: BigFloat,
    im: BigFloat,
    prec: usize,
}

impl Multi {
    fn zero(prec: usize) -> Self {
        Multi {
            re: BigFloat::from_f64(0.0, prec),
            im: BigFloat::from_f64(0.0, prec),
            prec,
        }
    }

    fn rounded(mut self, prec: usize) -> Self {
        // set_precision only fails on allocation, which aborts elsewhere anyway.
        let _ = self.re.set_precision(prec, RM);
        let _ = self.im.set_precision(prec, RM);
        self.prec = prec;
        self
    }

    fn add(&self, o: &Multi) -> Multi {
        let p = self.prec.max(o.prec);
        Multi {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
            prec: p,
        }
    }

    fn sub(&self, o: &Multi) -> Multi {
        let p = self.prec.max(o.prec);
        Multi {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
            prec: p,
        }
    }

    fn mul(&self, o: &Multi) -> Multi {
        let p = self.prec.max(o.prec);
        if self.im.is_zero() && o.im.is_zero() {
            return Multi {
                re: self.re.mul(&o.re, p, RM),
                im: BigFloat::from_f64(0.0, p),
                prec: p,
            };
        }
        let w = p + GUARD_BITS;
        let ac = self.re.mul(&o.re, w, RM);
        let bd = self.im.mul(&o.im, w, RM);
        let ad = self.re.mul(&o.im, w, RM);
        let bc = self.im.mul(&o.re, w, RM);
        Multi {
            re: ac.sub(&bd, p, RM),
            im: ad.add(&bc, p, RM),
            prec: p,
        }
    }

    fn div(&self, o: &Multi) -> Multi {
        let p = self.prec.max(o.prec);
        if o.im.is_zero() {
            return Multi {
                re: self.re.div(&o.re, p, RM),
                im: self.im.div(&o.re, p, RM),
                prec: p,
            };
        }
        let w = p + GUARD_BITS;
        let den = o.re.mul(&o.re, w, RM).add(&o.im.mul(&o.im, w, RM), w, RM);
        let re = self
            .re
            .mul(&o.re, w, RM)
            .add(&self.im.mul(&o.im, w, RM), w, RM);
        let im = self
            .im
            .mul(&o.re, w, RM)
            .sub(&self.re.mul(&o.im, w, RM), w, RM);
        Multi {
            re: re.div(&den, p, RM),
            im: im.div(&den, p, RM),
            prec: p,
        }
    }

    fn neg(&self) -> Multi {
        Multi {
            re: self.re.neg(),
            im: self.im.neg(),
            prec: self.prec,
        }
    }

    fn modulus(&self, p: usize) -> BigFloat {
        if self.im.is_zero() {
            return self.re.abs();
        }
        let w = p + GUARD_BITS;
        let n = self
            .re
            .mul(&self.re, w, RM)
            .add(&self.im.mul(&self.im, w, RM), w, RM);
        n.sqrt(p, RM)
    }

    /// Principal argument in (-pi, pi].
    fn arg(&self, p: usize) -> BigFloat {
        let (y, x) = (&self.im, &self.re);
        with_consts(|cc| {
            let pi = cc.pi(p, RM);
            if x.is_zero() {
                let half = pi.div(&BigFloat::from_f64(2.0, p), p, RM);
                return if y.is_negative() { half.neg() } else { half };
            }
            let base = y.div(x, p + GUARD_BITS, RM).atan(p, RM, cc);
            if x.is_positive() {
                base
            } else if y.is_negative() {
                base.sub(&pi, p, RM)
            } else {
                base.add(&pi, p, RM)
            }
        })
    }

    fn ln(&self) -> Multi {
        let p = self.prec;
        let w = p + GUARD_BITS;
        let re = with_consts(|cc| self.modulus(w).ln(p, RM, cc));
        let im = if self.im.is_zero() && self.re.is_positive() {
            BigFloat::from_f64(0.0, p)
        } else {
            self.arg(p)
        };
        Multi { re, im, prec: p }
    }

    fn exp(&self) -> Multi {
        let p = self.prec;
        let w = p + GUARD_BITS;
        with_consts(|cc| {
            let mag = self.re.exp(w, RM, cc);
            if self.im.is_zero() {
                let mut re = mag;
                let _ = re.set_precision(p, RM);
                return Multi {
                    re,
                    im: BigFloat::from_f64(0.0, p),
                    prec: p,
                };
            }
            let c = self.im.cos(w, RM, cc);
            let s = self.im.sin(w, RM, cc);
            Multi {
                re: mag.mul(&c, p, RM),
                im: mag.mul(&s, p, RM),
                prec: p,
            }
        })
    }
}

/// Correctly rounded conversion of a rational to `prec` bits.
fn rational_to_big(r: &BigRational, prec: usize) -> BigFloat {
    if r.is_zero() {
        return BigFloat::from_f64(0.0, prec);
    }
    let sign = if r.is_negative() { Sign::Neg } else { Sign::Pos };
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    // Quotient with at least prec + 2 significant bits, plus a sticky bit.
    let mut k = prec as i64 + 2 + d.bits() as i64 - n.bits() as i64;
    let (num, den) = if k >= 0 {
        (n << (k as usize), d.clone())
    } else {
        (n.clone(), d << ((-k) as usize))
    };
    let (mut quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        quot = (quot << 1usize) | BigUint::from(1u8);
        k += 1;
    }
    let mut f = biguint_to_big(&quot, sign);
    let _ = f.set_precision(prec, RM);
    let e = f.exponent().unwrap_or(0) as i64 - k;
    let e = e.clamp(astro_float::EXPONENT_MIN as i64, astro_float::EXPONENT_MAX as i64);
    f.set_exponent(e as astro_float::Exponent);
    f
}

fn biguint_to_big(v: &BigUint, sign: Sign) -> BigFloat {
    let words = v.to_u64_digits();
    if words.is_empty() {
        return BigFloat::from_f64(0.0, 64);
    }
    BigFloat::from_words(&words, sign, (64 * words.len()) as astro_float::Exponent)
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

fn big_to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, e, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let top = words[words.len() - 1] as f64;
    let next = if words.len() > 1 {
        words[words.len() - 2] as f64
    } else {
        0.0
    };
    let mant = (top + next * 2f64.powi(-64)) * 2f64.powi(-64);
    let v = ldexp(mant, e as i64);
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

fn big_is_integer(x: &BigFloat) -> bool {
    x.is_zero() || x.is_int()
}

fn big_to_bigint(x: &BigFloat) -> Option<BigInt> {
    if !big_is_integer(x) {
        return None;
    }
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    let (words, _, sign, e, _) = x.as_raw_parts()?;
    let mant = BigUint::from_slice(
        &words
            .iter()
            .flat_map(|w| [*w as u32, (*w >> 32) as u32])
            .collect::<Vec<_>>(),
    );
    let shift = 64 * words.len() as i64 - e as i64;
    let mag = if shift >= 0 {
        mant >> (shift as usize)
    } else {
        mant << ((-shift) as usize)
    };
    let v = BigInt::from(mag);
    Some(if sign == Sign::Neg { -v } else { v })
}

/// Round an f64 to `bits` significant bits (ties to even).
fn round_to_bits(x: f64, bits: u32) -> f64 {
    if bits >= 53 || x == 0.0 || !x.is_finite() {
        return x;
    }
    let exp = x.abs().log2().floor() as i32;
    let scale = 2f64.powi(bits as i32 - 1 - exp);
    (x * scale).round_ties_even() / scale
}

impl CFloat {
    pub fn native(z: Complex64) -> Self {
        CFloat {
            repr: Repr::Native(z),
        }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Self::native(Complex64::new(re, im))
    }

    /// Real value rounded to nearest at `prec`.
    pub fn from_rational(r: &BigRational, prec: Precision) -> Self {
        if prec.is_native() {
            let v = r.to_f64().unwrap_or(f64::NAN);
            return Self::from_f64(round_to_bits(v, prec.bits()), 0.0);
        }
        let p = prec.bits() as usize;
        CFloat {
            repr: Repr::Multi(Box::new(Multi {
                re: rational_to_big(r, p),
                im: BigFloat::from_f64(0.0, p),
                prec: p,
            })),
        }
    }

    /// Parses decimal component literals directly at `prec`.
    pub fn parse_parts(re: &str, im: &str, prec: Precision) -> Option<Self> {
        if prec.is_native() {
            let r: f64 = re.parse().ok()?;
            let i: f64 = im.parse().ok()?;
            return Some(Self::from_f64(
                round_to_bits(r, prec.bits()),
                round_to_bits(i, prec.bits()),
            ));
        }
        let p = prec.bits() as usize;
        let parse = |s: &str| {
            let v = with_consts(|cc| BigFloat::parse(s, astro_float::Radix::Dec, p, RM, cc));
            if v.is_nan() {
                None
            } else {
                Some(v)
            }
        };
        Some(CFloat {
            repr: Repr::Multi(Box::new(Multi {
                re: parse(re)?,
                im: parse(im)?,
                prec: p,
            })),
        })
    }

    pub fn precision(&self) -> Precision {
        match &self.repr {
            Repr::Native(_) => Precision::DOUBLE,
            Repr::Multi(m) => Precision::new_unchecked(m.prec as u32),
        }
    }

    /// Re-rounds to `prec`.
    pub fn with_precision(&self, prec: Precision) -> Self {
        match (&self.repr, prec.is_native()) {
            (Repr::Native(z), true) => Self::from_f64(
                round_to_bits(z.re, prec.bits()),
                round_to_bits(z.im, prec.bits()),
            ),
            (Repr::Multi(m), true) => Self::from_f64(
                round_to_bits(big_to_f64(&m.re), prec.bits()),
                round_to_bits(big_to_f64(&m.im), prec.bits()),
            ),
            (Repr::Native(z), false) => {
                let p = prec.bits() as usize;
                CFloat {
                    repr: Repr::Multi(Box::new(Multi {
                        re: BigFloat::from_f64(z.re, p),
                        im: BigFloat::from_f64(z.im, p),
                        prec: p,
                    })),
                }
            }
            (Repr::Multi(m), false) => CFloat {
                repr: Repr::Multi(Box::new((**m).clone().rounded(prec.bits() as usize))),
            },
        }
    }

    pub fn to_complex64(&self) -> Complex64 {
        match &self.repr {
            Repr::Native(z) => *z,
            Repr::Multi(m) => Complex64::new(big_to_f64(&m.re), big_to_f64(&m.im)),
        }
    }

    pub fn re(&self) -> f64 {
        self.to_complex64().re
    }

    pub fn im(&self) -> f64 {
        self.to_complex64().im
    }

    pub fn norm(&self) -> f64 {
        match &self.repr {
            Repr::Native(z) => z.norm(),
            Repr::Multi(m) => big_to_f64(&m.modulus(m.prec)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Native(z) => z.re == 0.0 && z.im == 0.0,
            Repr::Multi(m) => m.re.is_zero() && m.im.is_zero(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match &self.repr {
            Repr::Native(z) => z.re.is_finite() && z.im.is_finite(),
            Repr::Multi(m) => {
                !(m.re.is_nan() || m.im.is_nan() || m.re.is_inf() || m.im.is_inf())
            }
        }
    }

    pub fn is_real(&self) -> bool {
        match &self.repr {
            Repr::Native(z) => z.im == 0.0,
            Repr::Multi(m) => m.im.is_zero(),
        }
    }

    /// The integer value when this is a real integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match &self.repr {
            Repr::Native(z) => {
                if z.im == 0.0 && z.re.is_finite() && z.re.fract() == 0.0 {
                    num_traits::FromPrimitive::from_f64(z.re)
                } else {
                    None
                }
            }
            Repr::Multi(m) => {
                if m.im.is_zero() {
                    big_to_bigint(&m.re)
                } else {
                    None
                }
            }
        }
    }

    fn multi(&self, prec: usize) -> Multi {
        match &self.repr {
            Repr::Native(z) => Multi {
                re: BigFloat::from_f64(z.re, prec),
                im: BigFloat::from_f64(z.im, prec),
                prec,
            },
            Repr::Multi(m) => (**m).clone(),
        }
    }

    fn binary(
        &self,
        other: &CFloat,
        native: impl FnOnce(Complex64, Complex64) -> Complex64,
        multi: impl FnOnce(&Multi, &Multi) -> Multi,
    ) -> CFloat {
        match (&self.repr, &other.repr) {
            (Repr::Native(a), Repr::Native(b)) => CFloat::native(native(*a, *b)),
            _ => {
                let p = self
                    .precision()
                    .bits()
                    .max(other.precision().bits()) as usize;
                let a = self.multi(p);
                let b = other.multi(p);
                CFloat {
                    repr: Repr::Multi(Box::new(multi(&a, &b))),
                }
            }
        }
    }

    pub fn add(&self, o: &CFloat) -> CFloat {
        self.binary(o, |a, b| a + b, Multi::add)
    }

    pub fn sub(&self, o: &CFloat) -> CFloat {
        self.binary(o, |a, b| a - b, Multi::sub)
    }

    pub fn mul(&self, o: &CFloat) -> CFloat {
        self.binary(o, |a, b| a * b, Multi::mul)
    }

    /// Caller guarantees `o` is nonzero.
    pub fn div(&self, o: &CFloat) -> CFloat {
        self.binary(o, |a, b| a / b, Multi::div)
    }

    pub fn neg(&self) -> CFloat {
        match &self.repr {
            Repr::Native(z) => CFloat::native(-z),
            Repr::Multi(m) => CFloat {
                repr: Repr::Multi(Box::new(m.neg())),
            },
        }
    }

    pub fn one_like(&self) -> CFloat {
        match &self.repr {
            Repr::Native(_) => CFloat::from_f64(1.0, 0.0),
            Repr::Multi(m) => {
                let mut one = Multi::zero(m.prec);
                one.re = BigFloat::from_f64(1.0, m.prec);
                CFloat {
                    repr: Repr::Multi(Box::new(one)),
                }
            }
        }
    }

    /// Principal logarithm, imaginary part in (-pi, pi].
    pub fn ln(&self) -> CFloat {
        match &self.repr {
            Repr::Native(z) => {
                // -0.0 imaginary parts would select the -pi side of the cut.
                let z = Complex64::new(z.re, if z.im == 0.0 { 0.0 } else { z.im });
                CFloat::native(z.ln())
            }
            Repr::Multi(m) => CFloat {
                repr: Repr::Multi(Box::new(m.ln())),
            },
        }
    }

    pub fn exp(&self) -> CFloat {
        match &self.repr {
            Repr::Native(z) => CFloat::native(z.exp()),
            Repr::Multi(m) => CFloat {
                repr: Repr::Multi(Box::new(m.exp())),
            },
        }
    }

    /// Non-negative integer power by repeated squaring.
    pub fn powu(&self, mut k: u64) -> CFloat {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Decimal rendering `a+bi`; `digits` selects scientific notation with
    /// that many fractional digits, otherwise the shortest round-trip form.
    pub fn render(&self, digits: Option<usize>) -> String {
        let (re, im) = match &self.repr {
            Repr::Native(z) => (fmt_f64(z.re, digits), fmt_f64(z.im.abs(), digits)),
            Repr::Multi(m) => (fmt_big(&m.re, digits), fmt_big(&m.im.abs(), digits)),
        };
        let neg_im = match &self.repr {
            Repr::Native(z) => z.im.is_sign_negative() && z.im != 0.0,
            Repr::Multi(m) => m.im.is_negative(),
        };
        format!("{re}{}{im}i", if neg_im { '-' } else { '+' })
    }

    pub(crate) fn approx_cmp_parts(&self, o: &CFloat) -> bool {
        match (&self.repr, &o.repr) {
            (Repr::Native(a), Repr::Native(b)) => a == b,
            _ => {
                let p = self.precision().bits().max(o.precision().bits()) as usize;
                let a = self.multi(p);
                let b = o.multi(p);
                a.re.cmp(&b.re) == Some(0) && a.im.cmp(&b.im) == Some(0)
            }
        }
    }
}

fn fmt_f64(v: f64, digits: Option<usize>) -> String {
    match digits {
        Some(d) => format!("{v:.d$e}"),
        None => format!("{v:?}"),
    }
}

fn fmt_big(v: &BigFloat, digits: Option<usize>) -> String {
    match digits {
        Some(d) => format!("{:.d$e}", big_to_f64(v)),
        None => with_consts(|cc| {
            v.format(astro_float::Radix::Dec, RM, cc)
                .unwrap_or_else(|_| format!("{:?}", big_to_f64(v)))
        }),
    }
}

impl fmt::Display for CFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}
