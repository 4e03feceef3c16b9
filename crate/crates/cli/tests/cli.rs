use std::process::{Command, Output};

use wgcs_cli::{AnalysisReport, MinDistReport, SequenceReport, SweepReport, VerifyReport, SCHEMA};

fn wgcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wgcs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json<T: serde::de::DeserializeOwned>(o: &Output) -> T {
    serde_json::from_slice(&o.stdout).expect("valid report json")
}

#[test]
fn analyze_7_13_json() {
    let o = wgcs(&["analyze", "--n1", "7", "--n2", "13", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let raw: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(raw["schema"], 1);
    let r: AnalysisReport = json(&o);
    assert_eq!(r.schema, SCHEMA);
    assert_eq!(r.params.n, 91);
    assert_eq!(r.params.eta, 2);
    let spectrum: Vec<(&str, usize)> =
        r.acf_spectrum.iter().map(|e| (e.value.as_str(), e.shifts)).collect();
    assert_eq!(spectrum, [("-5/91", 6), ("-1/91", 72), ("3/91", 12)]);
    assert_eq!(r.dimension, 19);
    assert_eq!(r.linear_complexity.gcd, 72);
    assert_eq!(r.linear_complexity.berlekamp_massey, 72);
    assert_eq!(r.distance.as_ref().unwrap().exact, Some(7));
    assert!(r.all_passed);
    let again: AnalysisReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
}

#[test]
fn analyze_text_mentions_code() {
    let o = wgcs(&["analyze", "--n1", "7", "--n2", "13"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("code: [91, 19]"), "{out}");
    assert!(out.contains("distance: 7"), "{out}");
}

#[test]
fn analyze_7_31_binary() {
    let o = wgcs(&[
        "analyze", "--n1", "7", "--n2", "31", "--skip-distance", "--format", "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r: AnalysisReport = json(&o);
    assert_eq!(r.dimension, 121);
    assert_eq!(r.generator.degree, 96);
    assert_eq!(r.predicted_linear_span, 96);
    assert!(r.distance.is_none());
}

#[test]
fn invalid_pair_is_an_error() {
    let o = wgcs(&["analyze", "--n1", "7", "--n2", "11"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("gcd(n1-1, n2-1) = 2"), "{err}");
}

#[test]
fn q_dividing_n_is_an_error() {
    let o = wgcs(&["analyze", "--n1", "7", "--n2", "13", "--q", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mindist_exact() {
    let o = wgcs(&["mindist", "--n1", "7", "--n2", "13", "--format", "json"]);
    assert!(o.status.success());
    let r: MinDistReport = json(&o);
    assert_eq!(r.k, 19);
    assert_eq!(r.distance.exact, Some(7));
}

#[test]
fn mindist_random_is_reproducible() {
    let args = [
        "mindist", "--n1", "7", "--n2", "31", "--trials", "200", "--seed", "42", "--format", "json",
    ];
    let a = wgcs(&args);
    assert!(a.status.success());
    let r: MinDistReport = json(&a);
    assert_eq!(r.k, 121);
    assert_eq!(r.distance.lower, 3);
    assert!(r.distance.upper <= 31);
    assert_eq!(r.witness_weight, Some(r.distance.upper as usize));
    let b = wgcs(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn sweep_empty_range() {
    let o = wgcs(&["sweep", "--max-n", "50", "--format", "json"]);
    assert!(o.status.success());
    let r: SweepReport = json(&o);
    assert!(r.rows.is_empty());
}

#[test]
fn sweep_binary_below_100() {
    let o = wgcs(&["sweep", "--max-n", "10000", "--q", "2", "--format", "json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let r: SweepReport = json(&o);
    let small: Vec<_> = r.rows.iter().filter(|row| row.n1 < 100 && row.n2 < 100).collect();
    assert!(!small.is_empty());
    for row in small {
        assert!(row.passed, "{row:?}");
        assert_eq!(row.clause_matches, Some(true), "{row:?}");
    }
}

#[test]
fn sweep_ternary_clause_residues() {
    let o = wgcs(&["sweep", "--max-n", "3000", "--q", "3", "--both-orders", "--format", "json"]);
    let r: SweepReport = json(&o);
    assert!(r.rows.iter().any(|row| row.clause.is_some()));
    for row in r.rows.iter().filter(|row| row.clause.is_some()) {
        assert_eq!((row.n1 % 12, row.n2 % 12), (7, 7), "{row:?}");
    }
    assert_eq!(r.failed, 0);
    assert!(o.status.success());
}

#[test]
fn sweep_reports_residue_table_conflicts() {
    let o = wgcs(&["sweep", "--max-n", "1000", "--q", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("2 residue-table conflicts"), "{out}");
}

#[test]
fn seq_weight() {
    let o = wgcs(&["seq", "--n1", "7", "--n2", "13", "--format", "json"]);
    assert!(o.status.success());
    let r: SequenceReport = json(&o);
    assert_eq!(r.bits.len(), 91);
    assert_eq!(r.bits.chars().filter(|&c| c == '1').count(), 48);
    assert_eq!(r.weight, 48);
    let text = wgcs(&["seq", "--n1", "7", "--n2", "13"]);
    assert_eq!(stdout(&text).trim(), r.bits);
}

#[test]
fn verify_single_pair() {
    let o = wgcs(&["verify", "--n1", "7", "--n2", "13", "--q", "2,3", "--format", "json"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let r: Vec<VerifyReport> = json(&o);
    assert_eq!(r.len(), 1);
    assert!(r[0].all_passed);
    assert!(r[0].checks.iter().any(|c| c.id == "acf-matches-closed-form"));
}
