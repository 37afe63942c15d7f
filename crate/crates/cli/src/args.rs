use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Parser, Debug)]
#[command(
    name = "qeuler",
    version,
    about = "Evaluate q-Euler polynomials and multiple q-zeta functions, and verify their identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one family member at a point.
    Eval(PointArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Tabulate a family over ranges of n and q.
    Table(PointArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// Flags shared by `eval` and `table`. Every field may also come from the
/// TOML file given by `--config`; flags win.
#[derive(Args, Debug, Default, Deserialize)]
#[serde(default)]
pub struct PointArgs {
    /// basic, order-r, hr, chi, chi-order-r, chi-hr, barnes, barnes-chi,
    /// zeta, zeta-h, l, l-h, barnes-zeta, barnes-l
    #[arg(long)]
    pub family: Option<String>,
    /// Degree; `table` also accepts `a..b` (inclusive) or a comma list.
    #[arg(long)]
    #[serde(deserialize_with = "crate::config::literal")]
    pub n: Option<String>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<i64>,
    /// `p/q`, decimal or `a+bi`; `table` accepts a comma list.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(deserialize_with = "crate::config::literal")]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    #[serde(deserialize_with = "crate::config::literal")]
    pub x: Option<String>,
    /// Zeta argument.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(deserialize_with = "crate::config::literal")]
    pub s: Option<String>,
    /// `f=3;values=0,1,-1`
    #[arg(long)]
    pub character: Option<String>,
    /// Barnes scalings, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(deserialize_with = "crate::config::literal")]
    pub a: Option<String>,
    /// Barnes shifts, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    #[serde(deserialize_with = "crate::config::literal")]
    pub b: Option<String>,
    /// `exact` or `float:<bits>`.
    #[arg(long)]
    pub mode: Option<String>,
    /// closed, series or distribution.
    #[arg(long)]
    pub method: Option<String>,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug, Default, Deserialize)]
#[serde(default)]
pub struct CommonArgs {
    /// Series terms M.
    #[arg(long)]
    pub terms: Option<usize>,
    /// Series tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Significant digits for float output.
    #[arg(long)]
    pub digits: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    /// TOML file with the same keys as the flags.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug, Default, Deserialize)]
#[serde(default)]
pub struct VerifyArgs {
    /// Grid to run; only `default` exists.
    #[arg(long)]
    pub suite: Option<String>,
    /// Comma-separated check tags, e.g. `recurrence,thm7`.
    #[arg(long)]
    pub only: Option<String>,
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<i64>,
    #[arg(long)]
    pub r: Option<u32>,
    /// `exact` runs only the exact checks; `float:<bits>` sets float precision.
    #[arg(long)]
    pub mode: Option<String>,
    /// Replaces every float tolerance of the suite.
    #[arg(long)]
    pub check_tol: Option<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: CommonArgs,
}

macro_rules! merge_fields {
    ($dst:ident, $src:ident; $($f:ident),*) => {
        $( if $dst.$f.is_none() { $dst.$f = $src.$f; } )*
    };
}

impl CommonArgs {
    pub fn merge(&mut self, file: CommonArgs) {
        merge_fields!(self, file; terms, tol, digits, format);
    }
}

impl PointArgs {
    pub fn merge(&mut self, file: PointArgs) {
        merge_fields!(self, file; family, n, r, h, q, x, s, character, a, b, mode, method);
        self.common.merge(file.common);
    }
}

impl VerifyArgs {
    pub fn merge(&mut self, file: VerifyArgs) {
        merge_fields!(self, file; suite, only, n_max, h, r, mode, check_tol);
        self.common.merge(file.common);
    }
}
