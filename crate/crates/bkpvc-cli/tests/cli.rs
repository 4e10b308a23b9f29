//! End-to-end tests of the `bkpvc` binary: every subcommand, the JSON
//! formats on stdin-by-file, and the exit-code contract (0 ok, 1 semantic
//! failure, 2 usage/input error).

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bkpvc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkpvc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn generate_solve_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();

    let generated = bkpvc(&[
        "generate",
        "--family",
        "directed-extremal",
        "--i",
        "3",
        "--k",
        "2",
    ]);
    assert_eq!(code(&generated), 0);
    let doc = stdout_json(&generated);
    assert_eq!(doc["kind"], "directed");
    assert_eq!(doc["n"], 10);

    let forest = write_temp(&dir, "f.json", &doc.to_string());
    let solved = bkpvc(&["solve", "--forest", forest.to_str().unwrap(), "--k", "2"]);
    assert_eq!(code(&solved), 0);
    let result = stdout_json(&solved);
    assert_eq!(result["value"], 3);
    let witness: Vec<u64> = result["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    let cover_arg = witness
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");

    let verified = bkpvc(&[
        "verify",
        "--forest",
        forest.to_str().unwrap(),
        "--k",
        "2",
        "--cover",
        &cover_arg,
    ]);
    assert_eq!(code(&verified), 0);
    assert_eq!(stdout_json(&verified)["ok"], true);
}

#[test]
fn verify_reports_violations_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let forest = write_temp(
        &dir,
        "path.json",
        r#"{"kind":"undirected","n":2,"edges":[[0,1]]}"#,
    );
    let output = bkpvc(&[
        "verify",
        "--forest",
        forest.to_str().unwrap(),
        "--k",
        "2",
        "--cover",
        "",
    ]);
    assert_eq!(code(&output), 1);
    let violation = stdout_json(&output);
    assert_eq!(violation["kind"], "uncovered-leaf");
    assert_eq!(violation["witness"], 0);
}

#[test]
fn cover_can_come_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let forest = write_temp(
        &dir,
        "path.json",
        r#"{"kind":"undirected","n":3,"edges":[[0,1],[1,2]]}"#,
    );
    let cover = write_temp(&dir, "cover.json", "[0,2]");
    let arg = format!("@{}", cover.to_str().unwrap());
    let output = bkpvc(&[
        "verify",
        "--forest",
        forest.to_str().unwrap(),
        "--k",
        "3",
        "--cover",
        &arg,
    ]);
    assert_eq!(code(&output), 0);
}

#[test]
fn solve_oracle_respects_cutoff() {
    let dir = tempfile::tempdir().unwrap();
    let edges: Vec<String> = (1..25).map(|v| format!("[{},{}]", v - 1, v)).collect();
    let forest = write_temp(
        &dir,
        "big.json",
        &format!(
            r#"{{"kind":"undirected","n":25,"edges":[{}]}}"#,
            edges.join(",")
        ),
    );
    let output = bkpvc(&[
        "solve",
        "--forest",
        forest.to_str().unwrap(),
        "--k",
        "2",
        "--oracle",
    ]);
    assert_eq!(code(&output), 2);
    assert!(String::from_utf8_lossy(&output.stderr).contains("cutoff"));
}

#[test]
fn bound_prints_exact_rational() {
    let output = bkpvc(&["bound", "--kind", "undirected", "--n", "7", "--k", "2"]);
    assert_eq!(code(&output), 0);
    let bound = stdout_json(&output);
    assert_eq!(bound["numerator"], 12);
    assert_eq!(bound["denominator"], 4);
    assert_eq!(bound["ceiling"], 3);

    let bad = bkpvc(&["bound", "--kind", "undirected", "--n", "1", "--k", "2"]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn certify_emits_a_replayable_trace() {
    let dir = tempfile::tempdir().unwrap();
    let forest = write_temp(
        &dir,
        "f2.json",
        r#"{"kind":"directed","n":6,"parent":[null,0,1,2,1,4]}"#,
    );
    let output = bkpvc(&[
        "certify",
        "--forest",
        forest.to_str().unwrap(),
        "--k",
        "2",
        "--cover",
        "3,5",
    ]);
    assert_eq!(code(&output), 0);
    let trace = stdout_json(&output);
    assert_eq!(trace["cover_size"], 2);
    assert_eq!(trace["certified"], 2);
    assert_eq!(trace["steps"][0]["case"], "branching-fan");

    let not_a_cover = bkpvc(&[
        "certify",
        "--forest",
        forest.to_str().unwrap(),
        "--k",
        "2",
        "--cover",
        "3",
    ]);
    assert_eq!(code(&not_a_cover), 1);
    assert_eq!(stdout_json(&not_a_cover)["kind"], "uncovered-leaf");
}

#[test]
fn certify_rejects_undirected_documents() {
    let dir = tempfile::tempdir().unwrap();
    let forest = write_temp(
        &dir,
        "u.json",
        r#"{"kind":"undirected","n":2,"edges":[[0,1]]}"#,
    );
    let output = bkpvc(&[
        "certify",
        "--forest",
        forest.to_str().unwrap(),
        "--k",
        "2",
        "--cover",
        "0,1",
    ]);
    assert_eq!(code(&output), 2);
}

#[test]
fn reduce_reports_h_and_mapping() {
    let dir = tempfile::tempdir().unwrap();
    let forest = write_temp(
        &dir,
        "p4.json",
        r#"{"kind":"undirected","n":4,"edges":[[0,1],[1,2],[2,3]]}"#,
    );
    let output = bkpvc(&["reduce", "--forest", forest.to_str().unwrap()]);
    assert_eq!(code(&output), 0);
    let reduction = stdout_json(&output);
    assert_eq!(reduction["p"], 1);
    assert_eq!(reduction["h"]["kind"], "directed");
    assert_eq!(reduction["h"]["n"], 3);
    assert_eq!(reduction["removed_per_component"][0]["removed"], 0);
    assert_eq!(reduction["removed_per_component"][0]["new_root"], 1);
    assert_eq!(reduction["to_original"], serde_json::json!([1, 2, 3]));
}

#[test]
fn generate_random_is_deterministic_and_dot_works() {
    let run = || {
        bkpvc(&[
            "generate",
            "--random",
            "--kind",
            "undirected",
            "--n",
            "30",
            "--seed",
            "17",
        ])
    };
    let a = run();
    let b = run();
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);

    let dot = bkpvc(&[
        "generate",
        "--family",
        "undirected-extremal",
        "--i",
        "2",
        "--k",
        "2",
        "--dot",
    ]);
    assert_eq!(code(&dot), 0);
    let text = String::from_utf8_lossy(&dot.stdout);
    assert!(text.starts_with("graph forest {"));
    assert!(text.contains("--"));

    let missing = bkpvc(&["generate", "--random", "--kind", "directed", "--n", "5"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn campaign_is_clean_deterministic_and_exports_csv() {
    let args = [
        "campaign",
        "--kind",
        "directed",
        "--n-min",
        "1",
        "--n-max",
        "12",
        "--k-max",
        "3",
        "--trials",
        "4",
        "--seed",
        "5",
        "--include-extremal",
    ];
    let a = bkpvc(&args);
    let b = bkpvc(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(
        a.stdout, b.stdout,
        "same seed must reproduce the report byte for byte"
    );

    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines().rev();
    let summary: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(summary["summary"]["violations"], 0);
    assert_eq!(summary["summary"]["min_gap"]["numerator"], 0);
    let record: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert!(record["gap"].as_i64().unwrap() >= 0);

    let csv = bkpvc(&[
        "campaign",
        "--kind",
        "undirected",
        "--n-min",
        "2",
        "--n-max",
        "8",
        "--k-max",
        "2",
        "--trials",
        "3",
        "--seed",
        "5",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&csv), 0);
    let csv_text = String::from_utf8(csv.stdout).unwrap();
    assert!(csv_text.starts_with("kind,source,n,k,psi_b,bound_ceiling,gap"));
    assert!(csv_text.lines().count() > 1);

    let bad = bkpvc(&[
        "campaign",
        "--kind",
        "undirected",
        "--n-min",
        "1",
        "--n-max",
        "8",
        "--k-max",
        "2",
    ]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn usage_errors_exit_2() {
    let output = bkpvc(&["solve", "--k", "2"]);
    assert_eq!(code(&output), 2);
    let output = bkpvc(&["solve", "--forest", "/nonexistent.json", "--k", "2"]);
    assert_eq!(code(&output), 2);
}
