use assert_cmd::Command;
use serde_json::Value;

fn bin() -> Command {
    Command::cargo_bin("filterpaths").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = bin()
        .args(args)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    String::from_utf8(out).unwrap()
}

fn stderr(args: &[&str], code: i32) -> String {
    let out = bin()
        .args(args)
        .assert()
        .code(code)
        .get_output()
        .stderr
        .clone();
    String::from_utf8(out).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn count_picks_formula_by_strip() {
    let v = json(&[
        "count", "--l", "2", "--m", "3", "--n", "7", "--format", "json",
    ]);
    assert_eq!(v["value"], "24");
    assert_eq!(v["strip"], 3);
    assert_eq!(v["formula"], "mj");

    let v = json(&[
        "count", "--l", "2", "--m", "0", "--n", "2", "--format", "json",
    ]);
    assert_eq!(v["value"], "0");
    assert_eq!(v["strip"], 1);
    assert_eq!(v["formula"], "desire1");
}

#[test]
fn count_text_output() {
    let out = stdout(&["count", "--l", "2", "--m", "1", "--n", "9"]);
    assert!(out.starts_with("value: 16\n"), "{out}");
}

#[test]
fn count_parity_error_has_hint() {
    let err = stderr(&["count", "--l", "2", "--m", "3", "--n", "6"], 2);
    assert!(err.contains("parity") && err.contains("--n 5"), "{err}");
}

#[test]
fn count_rejects_small_l() {
    bin()
        .args(["count", "--l", "1", "--m", "0", "--n", "0"])
        .assert()
        .code(2);
}

#[test]
fn oracle_examples() {
    let v = json(&[
        "oracle",
        "--arr",
        "W@0;F1@1;F2@3",
        "--m",
        "1",
        "--n",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(v["value"], "4");

    let v = json(&[
        "oracle", "--arr", "F2@1", "--m", "2", "--n", "4", "--format", "json",
    ]);
    assert_eq!(v["value"], "8");
    let v = json(&[
        "oracle",
        "--arr",
        "F2@1",
        "--m",
        "2",
        "--n",
        "4",
        "--semantics",
        "literal",
        "--format",
        "json",
    ]);
    assert_eq!(v["value"], "12");
}

#[test]
fn oracle_rejects_overlapping_restrictions() {
    let err = stderr(&["oracle", "--arr", "F1@3,F2@4", "--m", "1", "--n", "1"], 2);
    assert!(err.contains("OverlappingRestrictions"), "{err}");
}

#[test]
fn paths_csv_lists_weighted_words() {
    let out = stdout(&[
        "paths",
        "--arr",
        "W@0;F1@1;F2@3",
        "--m",
        "3",
        "--n",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(out, "word,weight\nRRRRL,4\nRRLRR,4\n");
}

#[test]
fn pq_table_and_recurrence() {
    let out = stdout(&["pq", "--j-max", "3", "--k-max", "2"]);
    assert!(out.contains("P_3 = 1,2,3\nQ_3 = 1,2,3\n"), "{out}");
    assert!(out.ends_with("recurrence: ok\n"));
    bin()
        .args(["pq", "--j-max", "1", "--k-max", "2"])
        .assert()
        .code(2);
}

#[test]
fn compare_clean_grid_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    bin()
        .args(["compare", "--l", "2..3", "--n-max", "12", "--output"])
        .arg(&path)
        .assert()
        .code(0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let cells = report["cells"].as_array().unwrap();
    assert_eq!(report["summary"]["total"], cells.len());
    assert_eq!(report["summary"]["mismatches"], 0);
    assert!(cells
        .iter()
        .all(|c| c["formula_value"].is_string() && c["match"] == true));
}

#[test]
fn compare_literal_semantics_exits_one() {
    let v: Value = {
        let out = bin()
            .args([
                "compare", "--l", "2", "--n-max", "8", "--d-max", "2", "--suite", "lemma",
            ])
            .args(["--semantics", "literal"])
            .assert()
            .code(1)
            .get_output()
            .stdout
            .clone();
        serde_json::from_slice(&out).unwrap()
    };
    let cell = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| {
            c["formula_id"] == "filter2_right"
                && c["parameters"]["d"] == 1
                && c["parameters"]["M"] == 2
                && c["parameters"]["N"] == 4
        })
        .unwrap();
    assert_eq!(cell["formula_value"], "8");
    assert_eq!(cell["oracle_value"], "12");
    assert_eq!(cell["match"], false);
}

#[test]
fn compare_bad_input_exits_two() {
    bin().args(["compare", "--n-max", "-1"]).assert().code(2);
    bin()
        .args([
            "compare",
            "--l",
            "2",
            "--n-max",
            "4",
            "--output",
            "/nonexistent/dir/report.json",
        ])
        .assert()
        .code(2);
}

#[test]
fn compare_is_deterministic() {
    let args = [
        "compare",
        "--l",
        "2",
        "--n-max",
        "10",
        "--suite",
        "lemma,theorem,property",
        "--cases",
        "20",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn compare_csv_header() {
    let out = stdout(&[
        "compare", "--l", "2", "--n-max", "2", "--suite", "lemma", "--format", "csv",
    ]);
    assert!(out.starts_with("formula_id,parameters,formula_value,oracle_value,match\n"));
}
