mod args;
mod config;
mod error;
mod output;
mod request;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use qeuler::{run_suite, Mode, Number, SuiteConfig, Tag};

use args::{Cli, Command, CommonArgs, Format, PointArgs, VerifyArgs};
use error::{CliError, EXIT_FAILED_CHECK};
use output::{EvalRecord, Row, Table, Value};
use request::{parse_degrees, parse_mode, parse_number, parse_q, series_config, setup, Kind};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => with_config(a, config::POINT_KEYS, PointArgs::merge).and_then(eval),
        Command::Table(a) => with_config(a, config::POINT_KEYS, PointArgs::merge).and_then(table),
        Command::Verify(a) => {
            with_config(a, config::VERIFY_KEYS, VerifyArgs::merge).and_then(verify)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

trait HasCommon {
    fn common(&self) -> &CommonArgs;
}

impl HasCommon for PointArgs {
    fn common(&self) -> &CommonArgs {
        &self.common
    }
}

impl HasCommon for VerifyArgs {
    fn common(&self) -> &CommonArgs {
        &self.common
    }
}

fn with_config<T>(mut args: T, keys: &[&str], merge: fn(&mut T, T)) -> Result<T, CliError>
where
    T: HasCommon + serde::de::DeserializeOwned,
{
    if let Some(path) = args.common().config.clone() {
        let file: T = config::load(&path, keys)?;
        merge(&mut args, file);
    }
    Ok(args)
}

fn emit(common: &CommonArgs, text: &str) -> Result<(), CliError> {
    match &common.output {
        Some(path) => write_file(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(CliError::io)?;
            out.flush().map_err(CliError::io)
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(CliError::io)
}

fn eval(args: PointArgs) -> Result<u8, CliError> {
    let setup = setup(&args)?;
    let q = parse_q(
        args.q.as_deref().ok_or_else(|| CliError::usage("--q", "required"))?,
        setup.mode,
    )?;
    let (n, s, cell) = match setup.target.kind {
        Kind::Polynomial => {
            let n_text = args.n.as_deref().ok_or_else(|| {
                CliError::usage("--n", format!("required for family {}", setup.target.name))
            })?;
            let n = n_text
                .trim()
                .parse::<u32>()
                .map_err(|_| CliError::usage("--n", format!("not a nonnegative integer: {n_text:?}")))?;
            (Some(n), None, setup.polynomial(n, &q)?)
        }
        Kind::Zeta => {
            let s_text = args.s.as_deref().ok_or_else(|| {
                CliError::usage("--s", format!("required for family {}", setup.target.name))
            })?;
            let s = parse_number("--s", s_text, setup.mode)?;
            let cell = setup.zeta(&s, &q)?;
            (None, Some(s.to_string()), cell)
        }
    };
    let series = cell.method == qeuler::Method::Series;
    let record = EvalRecord {
        family: setup.target.name.clone(),
        n,
        s,
        r: args.r,
        h: args.h,
        character: setup.target.family.character().map(|c| c.to_string()),
        a: args.a.clone(),
        b: args.b.clone(),
        q: q.to_string(),
        x: setup.x.to_string(),
        mode: setup.mode.to_string(),
        method: cell.method.to_string(),
        value: Value::new(&cell.evaluation.value, setup.digits),
        tail_bound: series.then_some(cell.evaluation.tail_bound),
    };
    let text = match args.common.format.unwrap_or(Format::Json) {
        Format::Json => output::eval_json(&record),
        Format::Csv => output::eval_csv(&record)?,
        Format::Plain => output::eval_plain(&record),
    };
    emit(&args.common, &text)?;
    Ok(0)
}

fn table(args: PointArgs) -> Result<u8, CliError> {
    let setup = setup(&args)?;
    let degrees = parse_degrees(args.n.as_deref().ok_or_else(|| CliError::usage("--n", "required"))?)?;
    let qs = args
        .q
        .as_deref()
        .ok_or_else(|| CliError::usage("--q", "required"))?
        .split(',')
        .map(|t| parse_q(t, setup.mode))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::with_capacity(degrees.len() * qs.len());
    for q in &qs {
        for &n in &degrees {
            let cell = match setup.target.kind {
                Kind::Polynomial => setup.polynomial(n, q)?,
                Kind::Zeta => setup.zeta(&setup.mode.lift(&Number::int(-(n as i64))), q)?,
            };
            let series = cell.method == qeuler::Method::Series;
            rows.push(Row {
                n,
                q: q.to_string(),
                x: setup.x.to_string(),
                method: cell.method.to_string(),
                value: Value::new(&cell.evaluation.value, setup.digits),
                tail_bound: series.then_some(cell.evaluation.tail_bound),
            });
        }
    }
    let t = Table {
        family: setup.target.name.clone(),
        mode: setup.mode.to_string(),
        rows,
    };
    let text = match args.common.format.unwrap_or(Format::Json) {
        Format::Json => output::table_json(&t),
        Format::Csv => output::table_csv(&t)?,
        Format::Plain => output::table_plain(&t),
    };
    emit(&args.common, &text)?;
    Ok(0)
}

fn suite_config(args: &VerifyArgs) -> Result<SuiteConfig, CliError> {
    match args.suite.as_deref() {
        None | Some("default") => {}
        Some(other) => return Err(CliError::usage("--suite", format!("unknown suite {other:?}"))),
    }
    let mut cfg = SuiteConfig::default();
    if let Some(list) = &args.only {
        cfg.only = list
            .split(',')
            .map(|t| t.parse::<Tag>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::at("--only"))?;
    }
    cfg.n_max = args.n_max;
    cfg.h = args.h;
    cfg.r = args.r;
    cfg.tolerance = args.check_tol;
    match parse_mode("--mode", args.mode.as_deref())? {
        Mode::Exact => cfg.exact_only = true,
        Mode::Float(p) => cfg.precision = p.bits(),
    }
    cfg.series = series_config(&args.common)?;
    cfg.validate().map_err(CliError::config)?;
    Ok(cfg)
}

fn verify(args: VerifyArgs) -> Result<u8, CliError> {
    let cfg = suite_config(&args)?;
    let report = run_suite(&cfg).map_err(CliError::config)?;
    let text = match args.common.format.unwrap_or(Format::Json) {
        Format::Json => output::report_json(&report),
        Format::Csv => output::report_csv(&report)?,
        Format::Plain => output::report_plain(&report),
    };
    emit(&args.common, &text)?;
    if report.all_passed() {
        Ok(0)
    } else {
        eprintln!(
            "{} of {} checks failed",
            report.summary.failed, report.summary.total
        );
        Ok(EXIT_FAILED_CHECK)
    }
}
