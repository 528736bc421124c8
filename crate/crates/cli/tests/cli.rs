use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn iwahori(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwahori"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = iwahori(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}\nstderr: {}", String::from_utf8_lossy(&out.stderr)));
    (v, out.status.code().unwrap())
}

fn statuses(report: &Value) -> Vec<String> {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["status"].as_str().unwrap().to_string())
        .collect()
}

fn all_pass(report: &Value) -> bool {
    statuses(report).iter().all(|s| s == "pass")
}

fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/claims_q2.txt")
}

#[test]
fn partition_examples() {
    let (r, code) = json(&["partition", "--window", "5"]);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], "iwahori-report/v1");
    assert_eq!(r["data"]["classes"], 6);
    assert_eq!(r["data"]["violations"], 0);

    let (r, code) = json(&["partition", "--n", "4", "--window", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["data"]["classes"], 24);
    assert_eq!(r["data"]["violations"], 0);

    let (r, _) = json(&["partition", "--window", "0"]);
    assert_eq!(r["data"]["points"], 1);
    assert_eq!(r["data"]["class_sizes"]["123"], 1);
    assert_eq!(r["data"]["classes"], 1);
}

#[test]
fn act_examples() {
    let (r, code) = json(&[
        "act",
        "--case",
        "regular",
        "--word",
        "Tt(-1,0)",
        "--basis",
        "id:(-2,-1)",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["data"]["output"], "1*123:(-3,-1)");

    let (r, _) = json(&["act", "--case", "iwahori", "--basis", "id:(-2,-1)"]);
    assert_eq!(r["data"]["output"], "1*123:(-2,-1)");

    let (r, _) = json(&[
        "act",
        "--case",
        "iwahori",
        "--word",
        "[Tg Tw1]^2",
        "--basis",
        "id:(0,0)",
    ]);
    assert_eq!(r["data"]["output"], "1*123:(-1,0)");

    // scalars are reduced mod p
    let (r, _) = json(&[
        "act",
        "--p",
        "5",
        "--case",
        "iwahori",
        "--word",
        "Tw1",
        "--basis",
        "id:(-2,-1)",
    ]);
    assert_eq!(r["data"]["output"], "4*123:(-2,-1)");
}

#[test]
fn act_rejects_foreign_generators() {
    let out = iwahori(&["act", "--case", "regular", "--word", "Tg", "--basis", "id:(0,0)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = iwahori(&["act", "--word", "Tg", "--basis", "id:(0,0)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn relations_examples() {
    let (r, code) = json(&["relations", "--case", "iwahori", "--window", "6"]);
    assert_eq!(code, 0);
    assert!(all_pass(&r));
    // two relations and twelve composites for each c
    assert_eq!(r["summary"]["total"], 28);

    let (r, _) = json(&["relations", "--case", "regular", "--window", "6"]);
    assert_eq!(r["summary"]["passed"], 9);
    assert_eq!(r["summary"]["total"], 9);

    let (r, _) = json(&["relations", "--case", "semi-regular", "--c", "-1", "--window", "6"]);
    assert_eq!(r["summary"]["passed"], 3);
    assert_eq!(r["summary"]["total"], 3);
    assert_eq!(r["config"]["c"], 1);
}

#[test]
fn theorem_examples() {
    let (r, code) = json(&["theorem", "--window", "6"]);
    assert_eq!(code, 0);
    assert!(all_pass(&r));
    assert_eq!(r["summary"]["total"], 10);
    // every point is proper to itself, with the empty word
    for run in r["data"]["runs"].as_array().unwrap() {
        assert_eq!(run["empty_words"], r["data"]["points"]);
    }

    let (r, code) = json(&["theorem", "--from", "(-2,-1)", "--to", "(-2,-1)"]);
    assert_eq!(code, 0);
    assert_eq!(r["data"]["words"]["regular"], "1");

    let (r, _) = json(&[
        "theorem",
        "--case",
        "semi-regular",
        "--from",
        "(-1,0)",
        "--to",
        "(-2,0)",
    ]);
    assert_eq!(r["data"]["words"]["semi-regular"], "Tw1t(0,-1).Tw1");

    let out = iwahori(&["theorem", "--from", "(-1,-1)", "--to", "(-1,0)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not proper"));
}

#[test]
fn corollary_examples() {
    let (r, code) = json(&["corollary", "--generator", "(-3,-2)", "--window", "6,8,10"]);
    assert_eq!(code, 0);
    assert!(all_pass(&r));
    let reports = r["data"]["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 15);
    for rep in reports {
        assert_eq!(rep["dim_intersection"], 0);
        assert_eq!(rep["schema"], "corollary-report/v1");
    }

    let (r, code) = json(&["corollary", "--window", "8"]);
    assert_eq!(code, 0);
    assert_eq!(r["summary"]["total"], 5);
    assert!(r["data"]["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["dim_m2"] == 8));

    let out = iwahori(&["corollary", "--generator", "(-3,-1)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_claim_files() {
    let (r, code) = json(&["oracle", "--claims", corpus_path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(all_pass(&r));
    assert!(r["summary"]["total"].as_u64().unwrap() >= 20);

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let (r, code) = json(&["oracle", "--claims", empty.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"].as_array().unwrap().len(), 0);

    let bad = dir.path().join("bad.txt");
    std::fs::write(
        &bad,
        "semi_regular; id; 0,0; s=1; 0,0\nsemi_regular; id; 0,0; s=1; 2,1\n",
    )
    .unwrap();
    let (r, code) = json(&["oracle", "--claims", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(statuses(&r), vec!["fail", "pass"]);
}

#[test]
fn oracle_precision_guard() {
    let out = iwahori(&["oracle", "--window", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("precision"));
}

#[test]
fn out_file_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = iwahori(&["relations", "--case", "regular", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let stdout = iwahori(&["relations", "--case", "regular"]).stdout;
    assert_eq!(std::fs::read(&path).unwrap(), stdout);

    let csv = String::from_utf8(iwahori(&["relations", "--case", "regular", "--format", "csv"]).stdout).unwrap();
    assert!(csv.starts_with("command,check,status,instances,detail\n"));
    assert_eq!(csv.lines().count(), 10);
    let text = String::from_utf8(iwahori(&["relations", "--case", "regular", "--format", "text"]).stdout).unwrap();
    assert!(text.starts_with("iwahori-report/v1 relations: 9/9 checks passed"));
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = ["theorem", "--case", "iwahori", "--window", "4", "--format", "json"];
    assert_eq!(iwahori(&args).stdout, iwahori(&args).stdout);
    let args = ["oracle", "--window", "1", "--seed", "7"];
    let (a, b) = (iwahori(&args), iwahori(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_configuration() {
    assert_eq!(iwahori(&["relations", "--p", "6"]).status.code(), Some(2));
    assert_eq!(iwahori(&["relations", "--c", "1"]).status.code(), Some(2));
    assert_eq!(iwahori(&["relations", "--window", "2,3"]).status.code(), Some(2));
    assert_eq!(iwahori(&["relations", "--case", "nope"]).status.code(), Some(2));
}
