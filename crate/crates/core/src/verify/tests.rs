use super::*;

fn only(tag: Tag) -> SuiteConfig {
    SuiteConfig::default().only(&[tag])
}

fn failures(report: &CheckReport) -> Vec<String> {
    report
        .entries
        .iter()
        .filter(|e| !e.informational && !e.pass)
        .map(|e| format!("{} {:?} lhs={} rhs={} diff={:e} bound={:e} {:?}", e.id, e.params, e.lhs, e.rhs, e.abs_diff, e.bound, e.note))
        .collect()
}

#[test]
fn tag_names_round_trip() {
    for t in Tag::ALL {
        assert_eq!(t.name().parse::<Tag>().unwrap(), t);
        assert_eq!(t.name().to_lowercase().parse::<Tag>().unwrap(), t);
    }
    assert!("thm99".parse::<Tag>().is_err());
}

#[test]
fn recurrence_is_exact() {
    let report = run_suite(&only(Tag::Recurrence)).unwrap();
    assert_eq!(report.entries.len(), 30);
    assert!(report.all_passed(), "{:?}", failures(&report));
    for e in &report.entries {
        assert_eq!(e.mode, CheckMode::Exact);
        assert_eq!(e.lhs, e.rhs);
        assert_eq!(e.abs_diff, 0.0);
    }
    let n5 = report
        .entries
        .iter()
        .find(|e| e.params["n"] == "5" && e.params["q"] == "2/5")
        .unwrap();
    assert!(n5.pass);
}

#[test]
fn every_tag_is_exercised_and_passes() {
    let report = run_suite(&SuiteConfig::default()).unwrap();
    assert!(report.entries.len() >= 200);
    for t in Tag::ALL {
        assert!(report.by_tag(t).count() > 0, "no entries for {t}");
    }
    assert!(report.all_passed(), "{:#?}", failures(&report));
    assert_eq!(report.summary.total, report.entries.len());
    assert_eq!(
        report.summary.passed + report.summary.failed + report.summary.informational,
        report.summary.total
    );
    assert!(report.by_tag(Tag::ProductLiteral).all(|e| e.informational));
}

#[test]
fn exact_only_filter() {
    let cfg = SuiteConfig {
        exact_only: true,
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg).unwrap();
    assert!(!report.entries.is_empty());
    assert!(report.entries.iter().all(|e| e.mode == CheckMode::Exact));
}

#[test]
fn zero_tolerance_fails_float_checks() {
    let cfg = SuiteConfig {
        tolerance: Some(0.0),
        ..only(Tag::Thm7)
    };
    let report = run_suite(&cfg).unwrap();
    assert!(report.summary.failed > 0);
    assert!(!report.all_passed());
}

#[test]
fn guard_is_a_configuration_error() {
    let cfg = SuiteConfig {
        h: Some(1),
        r: Some(2),
        ..only(Tag::Thm7)
    };
    let err = run_suite(&cfg).unwrap_err();
    assert_eq!(err.to_string(), "divergence guard: requires h−r+1 ≥ 1");
    let ok = SuiteConfig {
        h: Some(1),
        r: Some(2),
        ..only(Tag::Thm8)
    };
    assert!(ok.validate().is_ok());
}

#[test]
fn deterministic_apart_from_timing() {
    let cfg = SuiteConfig::default().only(&[Tag::Prop1, Tag::GaussBinomial, Tag::Thm10]);
    let mut a = run_suite(&cfg).unwrap();
    let mut b = run_suite(&cfg).unwrap();
    a.summary.wall_ms = 0;
    b.summary.wall_ms = 0;
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_ne!(cfg.fingerprint(), SuiteConfig::default().fingerprint());
}

#[test]
fn n_max_restricts_the_grid() {
    let cfg = SuiteConfig {
        n_max: Some(3),
        ..only(Tag::Recurrence)
    };
    let report = run_suite(&cfg).unwrap();
    assert_eq!(report.entries.len(), 9);
}

#[test]
fn failed_computation_is_reported_not_skipped() {
    let job = Job::new(Tag::Thm3, vec![], CheckMode::Float, 1e-9, || {
        Err(Error::Divergence("test".into()))
    });
    let e = job.execute();
    assert!(!e.pass);
    assert!(e.note.unwrap().contains("divergence"));
}
