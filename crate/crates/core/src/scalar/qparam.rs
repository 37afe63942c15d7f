use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{pow_principal, Number, Precision};
use crate::error::{Error, Result};

/// Evaluation mode carried by a [`QParam`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Exact,
    Float(Precision),
}

impl Mode {
    pub fn float() -> Self {
        Mode::Float(Precision::DOUBLE)
    }

    /// Converts `x` into this mode's representation.
    pub fn lift(self, x: &Number) -> Number {
        match self {
            Mode::Exact => x.clone(),
            Mode::Float(p) => Number::Float(x.to_cfloat(p)),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Float(p) => write!(f, "float:{}", p.bits()),
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    /// `exact`, `float` or `float:<bits>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::float()),
            t => {
                let bits = t
                    .strip_prefix("float:")
                    .and_then(|b| b.parse::<u32>().ok())
                    .ok_or_else(|| Error::parse("mode", s))?;
                Ok(Mode::Float(Precision::new(bits)?))
            }
        }
    }
}

/// The deformation parameter `q`, `0 < |q| < 1`.
///
/// `q` is stored together with a root `u` and index `k` such that
/// `q = u^k` (by default `u = q`, `k = 1`). Fractional powers `q^y` are taken
/// as `u^(k y)`, which keeps `(q^f)^((x + a)/f)` exact for integer `x + a`.
#[derive(Clone, Debug, PartialEq)]
pub struct QParam {
    value: Number,
    root: Number,
    root_index: u32,
    mode: Mode,
}

impl QParam {
    /// Mode follows the representation: exact rationals give exact mode.
    pub fn new(value: Number) -> Result<Self> {
        let mode = match value.precision() {
            None => Mode::Exact,
            Some(p) => Mode::Float(p),
        };
        Self::with_mode(value, mode)
    }

    pub fn with_mode(value: Number, mode: Mode) -> Result<Self> {
        Self::from_root(value, 1, mode)
    }

    /// `q = root^index`.
    pub fn from_root(root: Number, index: u32, mode: Mode) -> Result<Self> {
        if index == 0 {
            return Err(Error::InvalidQ("root index must be positive".into()));
        }
        if mode == Mode::Exact && !root.is_exact() {
            return Err(Error::InvalidQ(format!(
                "exact mode requires a rational q, got {root}"
            )));
        }
        let root = mode.lift(&root);
        let value = root.powi(index as i64)?;
        let q = QParam {
            value,
            root,
            root_index: index,
            mode,
        };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        let ok = match &self.value {
            Number::Exact(r) => !r.is_zero() && r.abs() < BigRational::one(),
            Number::Float(f) => {
                let m = f.norm();
                f.is_finite() && m > 0.0 && m < 1.0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidQ(format!(
                "need 0 < |q| < 1, got {}",
                self.value
            )))
        }
    }

    pub fn value(&self) -> &Number {
        &self.value
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_exact(&self) -> bool {
        self.mode == Mode::Exact
    }

    pub fn root(&self) -> (&Number, u32) {
        (&self.root, self.root_index)
    }

    pub fn modulus(&self) -> f64 {
        self.value.modulus()
    }

    /// Converts a value into this parameter's mode.
    pub fn lift(&self, x: &Number) -> Number {
        self.mode.lift(x)
    }

    /// Re-expresses `q` in another mode.
    pub fn in_mode(&self, mode: Mode) -> Result<QParam> {
        if mode == Mode::Exact && !self.root.is_exact() {
            return Err(Error::InvalidQ("a float q cannot be made exact".into()));
        }
        QParam::from_root(self.root.clone(), self.root_index, mode)
    }

    /// `q^exponent` on the principal branch of the stored root.
    pub fn pow(&self, exponent: &Number) -> Result<Number> {
        if let Some(k) = exponent.as_integer() {
            let k = k
                .to_i64()
                .ok_or_else(|| Error::invalid(format!("exponent {k} too large")))?;
            return self.value.powi(k);
        }
        let scaled = exponent * &Number::int(self.root_index as i64);
        if self.mode == Mode::Exact {
            if scaled.as_integer().is_none() {
                return Err(Error::InexactPower(exponent.to_string()));
            }
        } else if self.root_index == 1 {
            return pow_principal(&self.value, exponent);
        }
        pow_principal(&self.root, &scaled)
    }

    pub fn pow_int(&self, k: i64) -> Result<Number> {
        self.value.powi(k)
    }

    /// `q^f`, keeping the root so that `(q^f)^(y/f) = q^y`.
    pub fn raised(&self, f: u32) -> Result<QParam> {
        let index = self
            .root_index
            .checked_mul(f)
            .ok_or_else(|| Error::invalid("root index overflow"))?;
        QParam::from_root(self.root.clone(), index, self.mode)
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root_index == 1 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "({})^{}", self.root, self.root_index)
        }
    }
}
