use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer};

use crate::error::CliError;

pub const POINT_KEYS: &[&str] = &[
    "family", "n", "r", "h", "q", "x", "s", "character", "a", "b", "mode", "method", "terms",
    "tol", "digits", "format",
];

pub const VERIFY_KEYS: &[&str] = &[
    "suite", "only", "n_max", "h", "r", "mode", "check_tol", "terms", "tol", "digits", "format",
];

/// Reads a TOML file whose keys mirror the command-line flags.
pub fn load<T: DeserializeOwned>(path: &Path, allowed: &[&str]) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::usage("--config", format!("{}: {e}", path.display())))?;
    let table: toml::Table = text
        .parse()
        .map_err(|e| CliError::usage("--config", format!("{}: {e}", path.display())))?;
    if let Some(key) = table.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(CliError::usage("--config", format!("unknown key {key:?}")));
    }
    T::deserialize(toml::Value::Table(table))
        .map_err(|e| CliError::usage("--config", e.to_string()))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Literal {
    Text(String),
    Int(i64),
    Float(f64),
    List(Vec<Literal>),
}

impl Literal {
    fn render(self) -> String {
        match self {
            Literal::Text(s) => s,
            Literal::Int(i) => i.to_string(),
            Literal::Float(f) => format!("{f:?}"),
            Literal::List(v) => v.into_iter().map(Literal::render).collect::<Vec<_>>().join(","),
        }
    }
}

/// Accepts strings, numbers and arrays for literal-valued keys.
pub fn literal<'de, D: Deserializer<'de>>(d: D) -> Result<Option<String>, D::Error> {
    Ok(Option::<Literal>::deserialize(d)?.map(Literal::render))
}
