//! Higher-order q-Euler polynomials, their character twists and Barnes-type
//! generalizations, the multiple q-zeta and q-l functions that interpolate
//! them, and a suite that checks the identities linking them.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod characters;
pub mod error;
pub mod eulerpoly;
pub mod qcore;
pub mod scalar;
pub mod series;
pub mod verify;
pub mod zeta;

pub use characters::DirichletCharacter;
pub use error::{Error, Result};
pub use num_rational::BigRational;
pub use eulerpoly::{BarnesParams, EulerFamilySpec, Family, Method};
pub use scalar::{Mode, Number, Precision, QParam};
pub use series::{Evaluation, SeriesConfig};
pub use verify::{run_suite, CheckEntry, CheckMode, CheckReport, SuiteConfig, Tag};
pub use zeta::ZetaQuery;
