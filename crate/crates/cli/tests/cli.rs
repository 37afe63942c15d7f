use std::process::{Command, Output};

use serde_json::Value;

fn qeuler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .args(args)
        .output()
        .expect("run qeuler")
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn eval_examples() {
    let v = json(&qeuler(&[
        "eval", "--family", "order-r", "--n", "1", "--r", "1", "--q", "1/2", "--x", "1", "--mode",
        "exact",
    ]));
    assert_eq!(v["value"]["display"], "4/5");
    assert_eq!(v["value"]["num"], "4");
    assert_eq!(v["value"]["den"], "5");
    assert_eq!(v["mode"], "exact");
    assert!(v.get("tail_bound").is_none());

    let v = json(&qeuler(&["eval", "--family", "zeta", "--s", "0", "--r", "3", "--q", "1/3", "--x", "2"]));
    assert!((v["value"]["re"].as_f64().unwrap() - 1.0).abs() < 1e-14);
    assert_eq!(v["value"]["im"].as_f64().unwrap(), 0.0);

    let v = json(&qeuler(&[
        "eval", "--family", "chi", "--n", "0", "--q", "1/2", "--x", "0", "--character",
        "f=3;values=0,1,-1",
    ]));
    assert!((v["value"]["re"].as_f64().unwrap() + 1.0).abs() < 1e-12);
    assert_eq!(v["method"], "series");
    assert!(v["tail_bound"].as_f64().unwrap() < 1e-10);
    assert_eq!(v["character"], "f=3;values=0,1,-1");
}

#[test]
fn eval_zeta_at_complex_s() {
    let v = json(&qeuler(&[
        "eval", "--family", "l-h", "--s", "0.5+1i", "--h", "3", "--r", "2", "--q", "0.4+0.3i",
        "--x", "1", "--character", "f=3;values=0,1,-1", "--digits", "10",
    ]));
    assert_eq!(v["method"], "series");
    assert!(v["value"]["re"].is_f64());
    assert!(v["value"]["display"].as_str().unwrap().contains('e'));
}

#[test]
fn exit_codes() {
    let out = qeuler(&["verify", "--only", "thm7", "--h", "1", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("divergence guard: requires h−r+1 ≥ 1"));

    let out = qeuler(&["eval", "--family", "hr", "--n", "1", "--h", "0", "--r", "2", "--q", "1/2", "--x", "1", "--method", "series"]);
    assert_eq!(out.status.code(), Some(3));

    let out = qeuler(&["eval", "--family", "order-r", "--n", "1", "--q", "3/2", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--q"));

    let out = qeuler(&["eval", "--family", "order-r", "--n", "1", "--q", "1/2", "--x", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--x"));

    let out = qeuler(&["eval", "--family", "wrong", "--n", "1", "--q", "1/2", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--family"));

    let out = qeuler(&["eval", "--family", "chi", "--n", "1", "--q", "1/2", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--character"));

    let out = qeuler(&["eval", "--family", "basic", "--n", "1", "--q", "1/2", "--x", "1", "--method", "series"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--method"));

    let out = qeuler(&["eval", "--family", "order-r", "--n", "2", "--r", "2", "--q", "0.99", "--x", "1", "--method", "series", "--terms", "10"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("tail bound"));

    let out = qeuler(&["verify", "--only", "recurrence,thm3", "--check-tol", "0", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = qeuler(&["verify", "--only", "thm99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--only"));
}

#[test]
fn verify_recurrence() {
    let out = qeuler(&["verify", "--only", "recurrence", "--n-max", "10"]);
    let v = json(&out);
    assert_eq!(v["summary"]["total"], 30);
    assert_eq!(v["summary"]["failed"], 0);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["id"] == "Recurrence"));
}

#[test]
fn verify_exact_mode_filters() {
    let v = json(&qeuler(&["verify", "--only", "thm8,distribution", "--mode", "exact"]));
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["mode"] == "exact"));
}

#[test]
fn table_examples_and_consistency() {
    let out = qeuler(&["table", "--family", "basic", "--n", "0..5", "--q", "1/2", "--x", "0", "--format", "csv", "--mode", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    let value_col = headers.iter().position(|h| h == "value").unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(&rows[0][value_col], "1");
    assert_eq!(&rows[1][value_col], "-2/5");

    let table = json(&qeuler(&["table", "--family", "hr", "--n", "0..3", "--h", "2", "--r", "2", "--q", "1/2", "--x", "0"]));
    let rows = table["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for row in rows {
        let n = row["n"].to_string();
        let cell = json(&qeuler(&["eval", "--family", "hr", "--n", &n, "--h", "2", "--r", "2", "--q", "1/2", "--x", "0"]));
        assert_eq!(cell["value"], row["value"], "n={n}");
    }
}

#[test]
fn table_over_q_grid_for_zeta() {
    let t = json(&qeuler(&["table", "--family", "zeta", "--n", "0,2", "--r", "2", "--q", "1/2,1/3", "--x", "1", "--mode", "exact"]));
    let rows = t["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0]["value"]["display"], "1");
    let cell = json(&qeuler(&["eval", "--family", "zeta", "--s", "-2", "--r", "2", "--q", "1/3", "--x", "1", "--mode", "exact"]));
    assert_eq!(cell["value"], rows[3]["value"]);
}

#[test]
fn config_file_and_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    std::fs::write(
        &config,
        "family = \"barnes\"\nn = 1\nq = \"1/2\"\nx = 1\na = [1, 2]\nb = [0, 0]\nmode = \"exact\"\n",
    )
    .unwrap();
    let out_path = dir.path().join("value.json");
    let out = qeuler(&[
        "eval",
        "--config",
        config.to_str().unwrap(),
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["family"], "barnes");
    assert!(v["value"]["num"].is_string());

    // Flags override the file.
    let v = json(&qeuler(&["eval", "--config", config.to_str().unwrap(), "--n", "0"]));
    assert_eq!(v["value"]["display"], "1");

    std::fs::write(&config, "family = \"basic\"\nbogus = 1\n").unwrap();
    let out = qeuler(&["eval", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bogus"));
}

#[test]
fn verify_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("suite.toml");
    std::fs::write(&config, "only = \"recurrence\"\nn_max = 3\nformat = \"csv\"\n").unwrap();
    let out = qeuler(&["verify", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    assert_eq!(reader.records().count(), 9);
}

#[test]
fn plain_and_csv_formats() {
    let out = qeuler(&["eval", "--family", "basic", "--n", "1", "--q", "1/2", "--x", "0", "--mode", "exact", "--format", "plain"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("value") && l.ends_with("-2/5")));

    let out = qeuler(&["eval", "--family", "chi", "--n", "1", "--q", "1/2", "--x", "1", "--character", "f=3;values=0,1,-1", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    let row = reader.records().next().unwrap().unwrap();
    let col = headers.iter().position(|h| h == "mode").unwrap();
    assert_eq!(&row[col], "float:53");
}

#[test]
fn float_precision_mode() {
    let v = json(&qeuler(&["eval", "--family", "order-r", "--n", "3", "--r", "2", "--q", "1/3", "--x", "1", "--mode", "float:128"]));
    let exact = json(&qeuler(&["eval", "--family", "order-r", "--n", "3", "--r", "2", "--q", "1/3", "--x", "1", "--mode", "exact"]));
    let num: f64 = exact["value"]["num"].as_str().unwrap().parse().unwrap();
    let den: f64 = exact["value"]["den"].as_str().unwrap().parse().unwrap();
    assert!((v["value"]["re"].as_f64().unwrap() - num / den).abs() < 1e-15);
    assert_eq!(v["mode"], "float:128");
}
