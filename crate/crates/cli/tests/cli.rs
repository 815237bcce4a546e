use assert_cmd::Command;
use lrfusion::cases::CaseReport;
use lrfusion::fusion::GradedDecomposition;
use lrfusion::poset::{PosetReport, WeylPrediction};
use lrfusion::verify::CriterionOutcome;
use lrfusion::DecompositionMap;
use serde::de::DeserializeOwned;
use serde_json::Value;

fn cmd() -> Command {
    let mut c = Command::cargo_bin("lrfusion").unwrap();
    c.env_remove("LRFUSION_DIM_CAP");
    c
}

fn stdout(args: &[&str]) -> String {
    let out = cmd()
        .args(args)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    String::from_utf8(out).unwrap()
}

/// Parses the JSON output as `T` and checks that re-emitting it gives the
/// same document.
fn json_round_trip<T: DeserializeOwned + serde::Serialize>(args: &[&str]) -> T {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let text = stdout(&full);
    let value: Value = serde_json::from_str(&text).unwrap();
    let parsed: T = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&parsed).unwrap(), value, "{args:?}");
    parsed
}

#[test]
fn lr_sl3_fundamentals() {
    let map: DecompositionMap = json_round_trip(&["lr", "--n", "3", "--l", "1,0", "--m", "0,1"]);
    let terms: Vec<(Vec<i64>, u64)> = map
        .sorted()
        .into_iter()
        .map(|(t, m)| (t.coords().to_vec(), m))
        .collect();
    assert_eq!(terms, vec![(vec![1, 1], 1), (vec![0, 0], 1)]);

    let text = stdout(&["lr", "--n", "3", "--l", "1,0", "--m", "0,1"]);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert!(rows[0].starts_with("w1+w2"));
    assert!(rows[1].starts_with('0'));
}

#[test]
fn points_count() {
    let v: Value = serde_json::from_str(&stdout(&[
        "--format", "json", "points", "--n", "3", "--l", "1,1", "--m", "1,1",
    ]))
    .unwrap();
    assert_eq!(v["count"], 8);
    assert_eq!(v["points"].as_array().unwrap().len(), 8);
    assert!(stdout(&["points", "--n", "3", "--l", "1,1", "--m", "1,1"]).starts_with("8 points"));
    // V(ω1 + ω2) alone: bounds from its coroot pairings
    assert!(stdout(&["points", "--n", "3", "--bounds", "1,2,1"]).starts_with("8 points"));
}

#[test]
fn fusion_graded_json() {
    let g: GradedDecomposition = json_round_trip(&["fusion", "--n", "2", "--l", "2", "--m", "1"]);
    assert_eq!(g.max_degree(), 1);
    let other: GradedDecomposition = json_round_trip(&[
        "fusion", "--n", "2", "--l", "2", "--m", "1", "--c1", "1", "--c2", "3",
    ]);
    assert_eq!(other, g);
    let rational: GradedDecomposition = json_round_trip(&[
        "fusion", "--n", "2", "--l", "2", "--m", "1", "--c1", "-1/2", "--c2", "2",
    ]);
    assert_eq!(rational, g);
}

#[test]
fn report_types_round_trip() {
    let r: CaseReport = json_round_trip(&[
        "case",
        "pieri-column",
        "--n",
        "3",
        "--l",
        "0,1",
        "--m",
        "0,1",
    ]);
    assert!(r.equal);
    let p: PosetReport = json_round_trip(&["poset", "--n", "3", "--l", "2,2"]);
    assert!(p.schur_positive);
    let w: WeylPrediction = json_round_trip(&["weyl", "--n", "3", "--l", "2,1"]);
    assert!(w.conjectural);
    let o: Vec<CriterionOutcome> = json_round_trip(&[
        "verify",
        "--n-max",
        "3",
        "--coord-max",
        "1",
        "--only",
        "1,5",
    ]);
    assert_eq!(o.len(), 2);
    let d: Value = json_round_trip(&["dyck", "--n", "4"]);
    assert_eq!(d["paths"].as_array().unwrap().len(), 24);
    let h: Value = json_round_trip(&["hw-candidates", "--n", "3", "--l", "1,0", "--m", "0,1"]);
    assert_eq!(h["candidates"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_small_sweep() {
    let out = cmd()
        .args(["verify", "--n-max", "4", "--coord-max", "2"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let text = String::from_utf8(out).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
    assert!(text.ends_with("10 of 10 criteria passed\n"));
}

#[test]
fn usage_errors_exit_two() {
    cmd()
        .args(["lr", "--n", "3", "--l", "1", "--m", "0,1"])
        .assert()
        .code(2);
    cmd()
        .args(["lr", "--n", "3", "--l", "1,0"])
        .assert()
        .code(2);
    cmd()
        .args(["lr", "--n", "3", "--l", "-1,0", "--m", "0,1"])
        .assert()
        .code(2);
    cmd()
        .args(["case", "hexagonal", "--n", "3", "--l", "1,0", "--m", "0,1"])
        .assert()
        .code(2);
    cmd()
        .args([
            "fusion", "--n", "2", "--l", "1", "--m", "1", "--c1", "2", "--c2", "2",
        ])
        .assert()
        .code(2);
    cmd()
        .args(["--cap", "0", "lr", "--n", "2", "--l", "1", "--m", "1"])
        .assert()
        .code(2);
    cmd().args(["verify", "--only", "11"]).assert().code(2);
}

#[test]
fn cap_from_environment() {
    let args = ["fusion", "--n", "3", "--l", "1,1", "--m", "1,0"];
    cmd()
        .env("LRFUSION_DIM_CAP", "5")
        .args(args)
        .assert()
        .code(2);
    cmd()
        .env("LRFUSION_DIM_CAP", "8")
        .args(args)
        .assert()
        .success();
}

#[test]
fn case_outside_regime_is_rejected() {
    cmd()
        .args(["case", "pieri-row", "--n", "3", "--l", "1,1", "--m", "0,1"])
        .assert()
        .code(2);
}
