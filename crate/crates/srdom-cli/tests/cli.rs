//! End-to-end tests of the srdom binary: subcommand output, exit codes,
//! and the record feedback loop (everything solve/construct prints must
//! re-verify through verify).

use std::collections::HashMap;
use std::process::{Command, Output};

fn srdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srdom"))
        .args(args)
        .env_remove("SRDOM_NODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn srdom_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srdom"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

/// Splits a record line into its key=value fields.
fn fields(line: &str) -> HashMap<String, String> {
    line.split_whitespace()
        .filter_map(|token| token.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

#[test]
fn solve_family_friendship() {
    let out = srdom(&["solve", "--family", "friendship", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let record = fields(text.lines().next().unwrap());
    assert_eq!(record["record"], "labeling");
    assert_eq!(record["gamma"], "2");
    assert_eq!(record["valid"], "true");
    assert_eq!(record["family"], "friendship(m=2)");
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("record=solve-stats"));
}

#[test]
fn solve_graph6_and_header() {
    let out = srdom(&["solve", "Bw"]);
    assert_eq!(out.status.code(), Some(0));
    let record = fields(stdout(&out).lines().next().unwrap());
    assert_eq!(record["gamma"], "2");
    assert_eq!(record["graph"], "Bw");

    let out = srdom(&["solve", ">>graph6<<Bw"]);
    assert_eq!(out.status.code(), Some(0));
    let record = fields(stdout(&out).lines().next().unwrap());
    assert_eq!(record["gamma"], "2");
}

#[test]
fn verify_exit_codes() {
    // all minus ones on C4: both conditions fail at every vertex
    let out = srdom(&["verify", "Cl", "--labels", "-1,-1,-1,-1"]);
    assert_eq!(out.status.code(), Some(2));
    let record = fields(stdout(&out).lines().next().unwrap());
    assert_eq!(record["valid"], "false");
    assert_eq!(record["condition-a-failures"], "0,1,2,3");
    assert_eq!(record["condition-b-failures"], "0,1,2,3");

    let out = srdom(&["verify", "Bw", "--labels", "2,-1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let record = fields(stdout(&out).lines().next().unwrap());
    assert_eq!(record["valid"], "true");
    assert_eq!(record["weight"], "2");
}

#[test]
fn construct_families() {
    let out = srdom(&["construct", "--family", "wheel", "--n", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let record = fields(stdout(&out).lines().next().unwrap());
    assert_eq!(record["weight"], "1");
    assert_eq!(record["valid"], "true");
    assert_eq!(record["gamma"], "1");

    let out = srdom(&["construct", "--family", "fan", "--n", "4"]);
    let record = fields(stdout(&out).lines().next().unwrap());
    assert_eq!(record["weight"], "2");

    let out = srdom(&[
        "construct",
        "--family",
        "join-cycles",
        "--m",
        "14",
        "--n",
        "17",
    ]);
    let record = fields(stdout(&out).lines().next().unwrap());
    assert_eq!(record["gamma"], "2");
    assert_eq!(record["weight"], "2");

    // upper-bound constructions carry no gamma field
    let out = srdom(&[
        "construct",
        "--family",
        "join-cycles",
        "--m",
        "5",
        "--n",
        "7",
    ]);
    let record = fields(stdout(&out).lines().next().unwrap());
    assert_eq!(record["weight"], "4");
    assert!(!record.contains_key("gamma"));
}

#[test]
fn records_reverify_through_verify() {
    for args in [
        vec!["solve", "--family", "wheel", "--n", "9"],
        vec!["solve", "--family", "join-cycles", "--m", "3", "--n", "4"],
        vec!["construct", "--family", "friendship", "--m", "5"],
        vec![
            "construct",
            "--family",
            "join-cycles",
            "--m",
            "15",
            "--n",
            "16",
        ],
    ] {
        let out = srdom(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = stdout(&out);
        let record = fields(text.lines().next().unwrap());
        let verify_out = srdom(&["verify", &record["graph"], "--labels", &record["labels"]]);
        assert_eq!(
            verify_out.status.code(),
            Some(0),
            "{args:?} did not re-verify"
        );
        let verified = fields(stdout(&verify_out).lines().next().unwrap());
        assert_eq!(verified["valid"], "true");
        assert_eq!(verified["weight"], record["weight"]);
    }
}

#[test]
fn deterministic_output_is_byte_identical() {
    let first = srdom(&["solve", "--family", "wheel", "--n", "10"]);
    let second = srdom(&["solve", "--family", "wheel", "--n", "10"]);
    assert_eq!(first.stdout, second.stdout);

    let first = srdom(&["check", "--suite", "structural", "--seed", "99"]);
    let second = srdom(&["check", "--suite", "structural", "--seed", "99"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn check_all_suites_default() {
    let out = srdom(&["check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let summary = text.lines().last().unwrap();
    assert!(summary.starts_with("record=check-summary suite=all"));
    assert!(summary.contains("refuted=0"));
    // every record is a single line of key=value tokens
    for line in text.lines() {
        assert!(line.starts_with("record="), "unexpected line {line:?}");
        for token in line.split(' ') {
            assert!(token.contains('='), "malformed token {token:?} in {line:?}");
        }
    }
}

#[test]
fn check_suites_and_exit() {
    let out = srdom(&["check", "--suite", "formulas", "--max-order", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let summary = text.lines().last().unwrap();
    assert!(summary.starts_with("record=check-summary suite=formulas"));
    assert!(summary.contains("refuted=0"));

    let out = srdom(&["check", "--suite", "lemma36", "--max-order", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("id=weight1-cycle-forces-negative-closed-sum instance=n=13 status=confirmed")
    );
    assert!(text.contains("instance=n=16 status=skipped-scale"));

    let out = srdom(&["check", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        vec!["solve"],
        vec!["solve", "Bw", "--family", "wheel", "--n", "3"],
        vec!["solve", "--family", "unknown", "--n", "3"],
        vec!["solve", "--family", "wheel"],
        vec!["solve", "not-a-graph6-\u{31}"],
        vec!["verify", "Bw", "--labels", "2,0,1"],
        vec!["verify", "Bw", "--labels", "2,-1"],
        vec!["construct", "--family", "cycle", "--n", "5"],
        vec![
            "construct",
            "--family",
            "join-cycles",
            "--m",
            "2",
            "--n",
            "5",
        ],
        vec!["bench", "--family", "join-cycles", "--range", "five..six"],
        vec!["totally-unknown-subcommand"],
    ] {
        let out = srdom(&args);
        assert_eq!(out.status.code(), Some(64), "{args:?}");
    }
    let out = srdom(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn budget_abort_exits_3() {
    let out = srdom_env(
        &["solve", "--family", "join-cycles", "--m", "13", "--n", "13"],
        "SRDOM_NODE_BUDGET",
        "5000",
    );
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    let aborted = text
        .lines()
        .find(|l| l.starts_with("record=solve-aborted"))
        .expect("aborted record printed");
    let record = fields(aborted);
    assert!(record.contains_key("lower-bound"));
    assert!(record.contains_key("upper-bound"));
    let bad = srdom_env(&["solve", "Bw"], "SRDOM_NODE_BUDGET", "not-a-number");
    assert_eq!(bad.status.code(), Some(64));
}

#[test]
fn bench_prints_rows() {
    let out = srdom(&["bench", "--family", "join-cycles", "--range", "3..5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("record=bench"))
        .collect();
    assert_eq!(rows.len(), 3);
    let record = fields(rows[0]);
    assert_eq!(record["m"], "3");
    assert_eq!(record["gamma"], "1");
    assert!(record.contains_key("elapsed-ms"));
}
