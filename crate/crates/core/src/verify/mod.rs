//! Classical-limit oracles and the identity suite.
//!
//! Every check computes its two sides through different code paths and
//! compares them either by exact equality or within `tolerance + tails`.

mod checks;
pub mod classical;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::scalar::{to_float, Mode, Number, Precision};
use crate::series::{Evaluation, SeriesConfig};

pub use checks::barnes_l_closed;
pub use classical::{classical_barnes_euler, classical_euler_order, classical_euler_poly};

/// Identity exercised by a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    Prop1,
    Recurrence,
    Thm3,
    Thm5,
    Thm7,
    Thm8,
    Thm10,
    Thm11,
    FinalDisplay,
    GaussBinomial,
    NegBinomial,
    QLimit,
    Distribution,
    SpecializationLattice,
    Normalization,
    ProductLiteral,
}

impl Tag {
    pub const ALL: [Tag; 16] = [
        Tag::Prop1,
        Tag::Recurrence,
        Tag::Thm3,
        Tag::Thm5,
        Tag::Thm7,
        Tag::Thm8,
        Tag::Thm10,
        Tag::Thm11,
        Tag::FinalDisplay,
        Tag::GaussBinomial,
        Tag::NegBinomial,
        Tag::QLimit,
        Tag::Distribution,
        Tag::SpecializationLattice,
        Tag::Normalization,
        Tag::ProductLiteral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tag::Prop1 => "Prop1",
            Tag::Recurrence => "Recurrence",
            Tag::Thm3 => "Thm3",
            Tag::Thm5 => "Thm5",
            Tag::Thm7 => "Thm7",
            Tag::Thm8 => "Thm8",
            Tag::Thm10 => "Thm10",
            Tag::Thm11 => "Thm11",
            Tag::FinalDisplay => "FinalDisplay",
            Tag::GaussBinomial => "GaussBinomial",
            Tag::NegBinomial => "NegBinomial",
            Tag::QLimit => "QLimit",
            Tag::Distribution => "Distribution",
            Tag::SpecializationLattice => "SpecializationLattice",
            Tag::Normalization => "Normalization",
            Tag::ProductLiteral => "ProductLiteral",
        }
    }

    /// Tags whose series side needs `h - r + 1 >= 1`.
    fn uses_hr_series(self) -> bool {
        matches!(self, Tag::Thm7 | Tag::Thm10)
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim();
        Tag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(key))
            .ok_or_else(|| Error::parse("check tag", s))
    }
}

/// How the two sides of a check are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    /// Equality of reduced rationals.
    Exact,
    /// `|lhs - rhs| <= tolerance + tail(lhs) + tail(rhs)`.
    Float,
}

/// Grid selection and numeric settings for [`run_suite`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    /// Restrict to these tags; empty means all.
    pub only: Vec<Tag>,
    pub exact_only: bool,
    /// Upper degree for every grid.
    pub n_max: Option<u32>,
    /// Fixes `h` in the `(h, r)` grids.
    pub h: Option<i64>,
    /// Fixes `r` in the order-`r` grids.
    pub r: Option<u32>,
    /// Replaces every per-check float tolerance.
    pub tolerance: Option<f64>,
    pub series: SeriesConfig,
    /// Bits for float-mode checks.
    pub precision: u32,
    /// Seed for the randomized exact grids.
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            only: Vec::new(),
            exact_only: false,
            n_max: None,
            h: None,
            r: None,
            tolerance: None,
            series: SeriesConfig::default(),
            precision: 53,
            seed: 0x5eed,
        }
    }
}

impl SuiteConfig {
    pub fn only(mut self, tags: &[Tag]) -> Self {
        self.only = tags.to_vec();
        self
    }

    pub fn includes(&self, tag: Tag) -> bool {
        self.only.is_empty() || self.only.contains(&tag)
    }

    pub fn validate(&self) -> Result<()> {
        self.series.validate()?;
        Precision::new(self.precision)?;
        if let Some(t) = self.tolerance {
            if !(t >= 0.0) {
                return Err(Error::invalid("tolerance must be nonnegative"));
            }
        }
        if self.r == Some(0) {
            return Err(Error::invalid("r must be at least 1"));
        }
        if let (Some(h), Some(r)) = (self.h, self.r) {
            let guarded = Tag::ALL.iter().any(|&t| t.uses_hr_series() && self.includes(t));
            if guarded {
                crate::eulerpoly::hr_guard(h, r)?;
            }
        }
        Ok(())
    }

    fn float_mode(&self) -> Mode {
        Mode::Float(Precision::new_unchecked(self.precision))
    }

    /// SHA-256 of the canonical JSON encoding.
    pub fn fingerprint(&self) -> String {
        let json = serde_json::to_string(self).unwrap_or_default();
        let digest = Sha256::digest(json.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: Tag,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub abs_diff: f64,
    pub bound: f64,
    pub pass: bool,
    pub mode: CheckMode,
    pub tolerance: f64,
    /// Reported but not counted towards failure.
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub informational: usize,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub config_fingerprint: String,
    pub entries: Vec<CheckEntry>,
    pub summary: Summary,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn by_tag(&self, tag: Tag) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(move |e| e.id == tag)
    }
}

/// Both sides of an identity, each with its certified tail.
pub(crate) struct Sides {
    pub lhs: Evaluation,
    pub rhs: Evaluation,
}

impl Sides {
    pub(crate) fn new(lhs: Evaluation, rhs: Evaluation) -> Self {
        Sides { lhs, rhs }
    }

    pub(crate) fn values(lhs: Number, rhs: Number) -> Self {
        Sides::new(Evaluation::exact(lhs), Evaluation::exact(rhs))
    }
}

type CheckFn = Box<dyn Fn() -> Result<Sides> + Send + Sync>;

/// A planned check: parameters, comparison rule and the computation.
pub(crate) struct Job {
    pub id: Tag,
    pub params: Vec<(&'static str, String)>,
    pub mode: CheckMode,
    pub tolerance: f64,
    pub informational: bool,
    pub run: CheckFn,
}

impl Job {
    pub(crate) fn new(
        id: Tag,
        params: Vec<(&'static str, String)>,
        mode: CheckMode,
        tolerance: f64,
        run: impl Fn() -> Result<Sides> + Send + Sync + 'static,
    ) -> Self {
        Job {
            id,
            params,
            mode,
            tolerance,
            informational: false,
            run: Box::new(run),
        }
    }

    fn execute(&self) -> CheckEntry {
        let params = self
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        let mut entry = CheckEntry {
            id: self.id,
            params,
            lhs: String::new(),
            rhs: String::new(),
            abs_diff: f64::NAN,
            bound: f64::NAN,
            pass: false,
            mode: self.mode,
            tolerance: self.tolerance,
            informational: self.informational,
            note: None,
        };
        let sides = match (self.run)() {
            Ok(s) => s,
            Err(e) => {
                entry.note = Some(format!("skipped: {e}"));
                return entry;
            }
        };
        let (l, r) = (&sides.lhs.value, &sides.rhs.value);
        entry.abs_diff = (l - r).modulus();
        match self.mode {
            CheckMode::Exact => {
                entry.lhs = l.render(None);
                entry.rhs = r.render(None);
                entry.bound = 0.0;
                entry.pass = l.is_exact() && r.is_exact() && l == r;
                if !(l.is_exact() && r.is_exact()) {
                    entry.note = Some("exact check produced a float value".into());
                }
            }
            CheckMode::Float => {
                entry.lhs = display_float(l);
                entry.rhs = display_float(r);
                entry.bound = self.tolerance + sides.lhs.tail_bound + sides.rhs.tail_bound;
                entry.pass = entry.abs_diff <= entry.bound;
            }
        }
        entry
    }
}

fn display_float(v: &Number) -> String {
    if v.is_exact() {
        to_float(v, Precision::DOUBLE).render(None)
    } else {
        v.render(None)
    }
}

/// Runs every selected check and aggregates the results in grid order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let start = Instant::now();
    let jobs: Vec<Job> = checks::plan(cfg)
        .into_iter()
        .filter(|j| cfg.includes(j.id))
        .filter(|j| !cfg.exact_only || j.mode == CheckMode::Exact)
        .collect();
    let entries: Vec<CheckEntry> = jobs.par_iter().map(Job::execute).collect();
    let informational = entries.iter().filter(|e| e.informational).count();
    let passed = entries.iter().filter(|e| !e.informational && e.pass).count();
    let failed = entries.iter().filter(|e| !e.informational && !e.pass).count();
    Ok(CheckReport {
        config_fingerprint: cfg.fingerprint(),
        summary: Summary {
            total: entries.len(),
            passed,
            failed,
            informational,
            wall_ms: start.elapsed().as_millis() as u64,
        },
        entries,
    })
}

#[cfg(test)]
mod tests;
