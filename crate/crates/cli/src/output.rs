use std::fmt::Write as _;

use qeuler::{CheckReport, Number};
use serde::Serialize;

use crate::error::CliError;

/// A value as a display string plus a lossless pair.
#[derive(Serialize, Debug, Clone)]
pub struct Value {
    pub display: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub den: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub im: Option<f64>,
}

impl Value {
    pub fn new(v: &Number, digits: Option<usize>) -> Self {
        match v.as_rational() {
            Some(r) => Value {
                display: v.render(None),
                num: Some(r.numer().to_string()),
                den: Some(r.denom().to_string()),
                re: None,
                im: None,
            },
            None => {
                let z = v.to_complex64();
                Value {
                    display: v.render(digits),
                    num: None,
                    den: None,
                    re: Some(z.re),
                    im: Some(z.im),
                }
            }
        }
    }

    fn csv_fields(&self) -> [String; 5] {
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        let optf = |v: &Option<f64>| v.map(|f| format!("{f:?}")).unwrap_or_default();
        [
            self.display.clone(),
            opt(&self.num),
            opt(&self.den),
            optf(&self.re),
            optf(&self.im),
        ]
    }
}

#[derive(Serialize, Debug)]
pub struct EvalRecord {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    pub q: String,
    pub x: String,
    pub mode: String,
    pub method: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<f64>,
}

#[derive(Serialize, Debug)]
pub struct Row {
    pub n: u32,
    pub q: String,
    pub x: String,
    pub method: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<f64>,
}

#[derive(Serialize, Debug)]
pub struct Table {
    pub family: String,
    pub mode: String,
    pub rows: Vec<Row>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::usage("--format", e);
    w.write_record(header).map_err(fail)?;
    for row in rows {
        w.write_record(&row).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::usage("--format", e.error()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn tail_text(t: Option<f64>) -> String {
    t.map(|v| format!("{v:e}")).unwrap_or_default()
}

pub fn eval_json(r: &EvalRecord) -> String {
    json(r)
}

pub fn eval_csv(r: &EvalRecord) -> Result<String, CliError> {
    let header = [
        "family", "n", "s", "q", "x", "mode", "method", "value", "num", "den", "re", "im",
        "tail_bound",
    ];
    let mut row = vec![
        r.family.clone(),
        r.n.map(|n| n.to_string()).unwrap_or_default(),
        r.s.clone().unwrap_or_default(),
        r.q.clone(),
        r.x.clone(),
        r.mode.clone(),
        r.method.clone(),
    ];
    row.extend(r.value.csv_fields());
    row.push(tail_text(r.tail_bound));
    csv_text(&header, [row])
}

pub fn eval_plain(r: &EvalRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family    {}", r.family);
    if let Some(n) = r.n {
        let _ = writeln!(out, "n         {n}");
    }
    if let Some(s) = &r.s {
        let _ = writeln!(out, "s         {s}");
    }
    let _ = writeln!(out, "q         {}", r.q);
    let _ = writeln!(out, "x         {}", r.x);
    let _ = writeln!(out, "mode      {}", r.mode);
    let _ = writeln!(out, "method    {}", r.method);
    let _ = writeln!(out, "value     {}", r.value.display);
    if let Some(t) = r.tail_bound {
        let _ = writeln!(out, "tail      {t:e}");
    }
    out
}

pub fn table_json(t: &Table) -> String {
    json(t)
}

pub fn table_csv(t: &Table) -> Result<String, CliError> {
    let header = ["n", "q", "x", "method", "value", "num", "den", "re", "im", "tail_bound"];
    let rows = t.rows.iter().map(|r| {
        let mut row = vec![r.n.to_string(), r.q.clone(), r.x.clone(), r.method.clone()];
        row.extend(r.value.csv_fields());
        row.push(tail_text(r.tail_bound));
        row
    });
    csv_text(&header, rows)
}

pub fn table_plain(t: &Table) -> String {
    let mut out = format!("{} ({})\n", t.family, t.mode);
    for r in &t.rows {
        let _ = write!(out, "n={:<3} q={} x={}  {}", r.n, r.q, r.x, r.value.display);
        if let Some(tb) = r.tail_bound {
            let _ = write!(out, "  (tail {tb:e})");
        }
        out.push('\n');
    }
    out
}

pub fn report_json(r: &CheckReport) -> String {
    json(r)
}

fn params_text(p: &std::collections::BTreeMap<String, String>) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

pub fn report_csv(r: &CheckReport) -> Result<String, CliError> {
    let header = [
        "id", "params", "lhs", "rhs", "abs_diff", "bound", "pass", "mode", "tolerance",
        "informational", "note",
    ];
    let rows = r.entries.iter().map(|e| {
        vec![
            e.id.to_string(),
            params_text(&e.params),
            e.lhs.clone(),
            e.rhs.clone(),
            format!("{:e}", e.abs_diff),
            format!("{:e}", e.bound),
            e.pass.to_string(),
            serde_json::to_value(e.mode)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default(),
            format!("{:e}", e.tolerance),
            e.informational.to_string(),
            e.note.clone().unwrap_or_default(),
        ]
    });
    csv_text(&header, rows)
}

pub fn report_plain(r: &CheckReport) -> String {
    let mut out = String::new();
    for e in &r.entries {
        let status = match (e.pass, e.informational) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (true, true) => "info",
            (false, true) => "info-fail",
        };
        let _ = write!(
            out,
            "{status:<9} {:<22} {}  |diff|={:.3e} bound={:.3e}",
            e.id.to_string(),
            params_text(&e.params),
            e.abs_diff,
            e.bound
        );
        if let Some(note) = &e.note {
            let _ = write!(out, "  ({note})");
        }
        out.push('\n');
    }
    let s = &r.summary;
    let _ = writeln!(
        out,
        "total {} passed {} failed {} informational {} in {} ms [{}]",
        s.total, s.passed, s.failed, s.informational, s.wall_ms, r.config_fingerprint
    );
    out
}
