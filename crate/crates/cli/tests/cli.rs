//! End-to-end runs of the `qfp` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use qfp::report::{combination_is_contradiction, Report};

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel).display().to_string()
}

fn gallery() -> String {
    data("rings/gallery.qfp")
}

fn qfp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_report(args: &[&str]) -> Report {
    let o = qfp(args);
    assert!(o.status.success(), "{args:?} failed: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).expect("valid report")
}

#[test]
fn witt_eval_four_in_w3() {
    let o = qfp(&["witt", "eval", "--p", "2", "--n", "3", "--expr", "[1]+[1]+[1]+[1]"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("value in W_3 over GF2: (0,0,1)"), "{out}");
    let r = json_report(&["witt", "eval", "--p", "2", "--n", "3", "--expr", "[1]+[1]+[1]+[1]", "--emit", "json"]);
    assert_eq!(r.command, "witt eval");
    assert_eq!(r.result["value"], serde_json::json!(["0", "0", "1"]));
    assert_eq!(r.result["trace"].as_array().unwrap().len(), 4);
}

#[test]
fn negatives_exit_zero() {
    // Not reduced, not split, infinite height: all computed answers.
    for args in [
        vec!["reduced", "--ring", "ring D = GF(2)[x] / (x^2) finite"],
        vec!["height", "--ring", "ring D = GF(2)[x] / (x^2) finite"],
    ] {
        let o = qfp(&args);
        assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    }
    let g = gallery();
    let o = qfp(&["height", "--ring", &g, "--name", "Supersingular", "--max-n", "1", "--max-degree", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("not"), "{}", stdout(&o));
}

#[test]
fn operational_errors_exit_nonzero() {
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["reduced", "--ring", "ring B = GF(6)[x] finite"], "6 is not a prime power"),
        (vec!["reduced", "--ring", "/nonexistent/rings.qfp"], "rings.qfp"),
        (vec!["height", "--ring", "ring A = GF(2)[x] / (x^2) finite", "--max-n", "9"], "cap"),
        (vec!["witt", "eval", "--p", "2", "--n", "2", "--expr", "[1]+"], "1:5"),
        (vec!["height", "--ring", "ring A = GF(2)[x] / (x^2) finite", "--caps", "n=99"], "99"),
        (vec!["frobnicate"], ""),
    ];
    for (args, needle) in cases {
        let o = qfp(&args);
        assert!(!o.status.success(), "{args:?} should fail");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn parse_errors_carry_positions() {
    let o = qfp(&["reduced", "--ring", "ring A = GF(2)[x]\n  / (x^2 +) finite"]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("2:11"), "{err}");
    assert!(err.contains("identifier") && err.contains("integer"), "{err}");

    let o = qfp(&["reduced", "--ring", "ring A = GF(2)[x] / (x*y) finite"]);
    assert!(stderr(&o).contains("1:24: undeclared variable `y`"), "{}", stderr(&o));
}

#[test]
fn verify_example_four_has_three_rows() {
    let r = json_report(&["verify", "--filter", "EXAMPLE-4", "--emit", "json"]);
    let ledger = r.ledger.expect("ledger present");
    assert_eq!(ledger.rows.len(), 3);
    assert!(ledger.passed());
    assert!(ledger.rows[2].detail.contains("s'*x + t'*y + z"), "{:?}", ledger.rows[2]);
    let text = stdout(&qfp(&["verify", "--filter", "EXAMPLE-4", "--emit", "text"]));
    assert_eq!(text.lines().filter(|l| l.starts_with("EXAMPLE-4")).count(), 3, "{text}");
}

#[test]
fn reports_are_byte_identical_and_round_trip() {
    let g = gallery();
    let runs: Vec<Vec<&str>> = vec![
        vec!["height", "--ring", &g, "--name", "Supersingular", "--max-n", "2", "--max-degree", "3", "--emit", "json"],
        vec!["height", "--ring", &g, "--name", "FatPoint", "--emit", "json", "--seed", "7"],
        vec!["q", "compare", "--ring", &g, "--name", "Dual4", "--emit", "json"],
        vec!["verify", "--filter", "COFINALITY,KER", "--emit", "json"],
    ];
    for args in runs {
        let (a, b) = (qfp(&args), qfp(&args));
        assert!(a.status.success(), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?} differs between runs");
        let text = stdout(&a);
        let report: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(report.to_json(), text, "{args:?} does not round-trip");
    }
}

#[test]
fn farkas_certificates_replay_from_json() {
    let g = gallery();
    let r = json_report(&[
        "height", "--ring", &g, "--name", "Supersingular", "--max-n", "1", "--max-degree", "3", "--emit", "json",
    ]);
    let farkas: Vec<_> = r.certificates.iter().filter(|c| c.kind == "farkas").collect();
    assert_eq!(farkas.len(), 1);
    assert!(farkas[0].checked);
    assert!(combination_is_contradiction(2, &farkas[0].combination));
    assert_eq!(r.result["height"]["kind"], "lower_bound");
    assert_eq!(r.result["height"]["value"], 2);
}

#[test]
fn infinite_height_reports_witness() {
    let g = gallery();
    let r = json_report(&["height", "--ring", &g, "--name", "Dual", "--emit", "json"]);
    assert_eq!(r.result["height"]["kind"], "infinity");
    assert!(r.certificates.iter().any(|c| c.kind == "nilpotent" && c.checked && c.witness.is_some()));
}
