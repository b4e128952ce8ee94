use std::process::{Command, Output};

use legendre_identities_cli::report::{SelfcheckReport, VerifyReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legendre-verify")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (Option<i32>, VerifyReport) {
    let out = run(args);
    let report = serde_json::from_slice(&out.stdout).expect("json report");
    (out.status.code(), report)
}

#[test]
fn list_shows_every_identity() {
    let out = run(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 28);
    assert!(text.contains("helper_weighted_central"));

    let json: serde_json::Value = serde_json::from_slice(&run(&["list", "--format", "json"]).stdout).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 27);

    let filtered = String::from_utf8(run(&["list", "--filter", "log_m"]).stdout).unwrap();
    assert_eq!(filtered.lines().count(), 1 + 4);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--id", "not_an_identity"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--all", "--n-max", "-3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--id", "gamma_mu", "--mu", "-1/2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--id", "main_theorem", "--x", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn alternating_zero_records() {
    let (code, report) = report(&["verify", "--id", "alternating_zero", "--n-max", "5", "--format", "json"]);
    assert_eq!(code, Some(0));
    assert_eq!(report.results.len(), 5);
    assert!(report.results.iter().all(|r| r.equal && r.lhs == "0" && r.rhs == "0"));
    assert_eq!(report.results.iter().map(|r| r.n).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
    assert_eq!(report.summary.pass, 5);
}

#[test]
fn log_moment_enumeration() {
    let (code, report) = report(&["verify", "--id", "log_moment", "--n-max", "4", "--format", "json"]);
    assert_eq!(code, Some(0));
    let pairs: Vec<(String, i64)> = report.results.iter().map(|r| (r.params["m"].clone(), r.n)).collect();
    let expected: Vec<(String, i64)> =
        [(0, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 4)].iter().map(|&(m, n)| (m.to_string(), n)).collect();
    assert_eq!(pairs, expected);
}

#[test]
fn json_report_round_trips() {
    let out = run(&["verify", "--id", "main_theorem,gamma_mu", "--n-max", "6", "--x", "-1/2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let report: VerifyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), text.trim_end());
    assert!(report.results.iter().all(|r| r.lhs.parse::<legendre_identities::Rational>().is_ok()));
}

#[test]
fn ordering_is_independent_of_jobs() {
    let strip = |args: &[&str]| {
        let (_, report) = report(args);
        report.results.iter().map(|r| (r.identity_id.clone(), r.n, r.params.clone(), r.lhs.clone())).collect::<Vec<_>>()
    };
    let base = ["verify", "--id", "gamma_mu", "--id", "main_transformed", "--n-max", "12", "--format", "json"];
    let one = strip(&[&base[..], &["--jobs", "1"]].concat());
    let four = strip(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(one, four);
    assert_eq!(one.first().map(|r| r.0.as_str()), Some("main_transformed"));
}

#[test]
fn explicit_parameters_are_used() {
    let (code, report) = report(&["verify", "--id", "gamma_mu", "--mu", "n+1", "--mu", "2/5", "--n-max", "3", "--format", "json"]);
    assert_eq!(code, Some(0));
    let mus: Vec<&str> = report.results.iter().map(|r| r.params["mu"].as_str()).collect();
    assert_eq!(mus, vec!["2", "2/5", "3", "2/5", "4", "2/5"]);
}

#[test]
fn selfcheck_without_float() {
    let out = run(&["selfcheck", "--skip-float", "--format", "json", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let report: SelfcheckReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.seed, 7);
    assert!(report.checks.iter().all(|c| c.passed));
    assert!(report.checks.iter().all(|c| c.name != "float_sanity"));
}
