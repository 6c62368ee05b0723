use std::path::PathBuf;
use std::process::{Command, Output};

const EXAMPLE_POLY: &str = "t^20 + 4*t^15 + 2*t^8 + 3*t^2 + t + 5";

fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
}

fn monomat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monomat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 output")
}

#[test]
fn eval_diff_on_worked_example() {
    let a4 = example("a4.txt");
    let out = monomat(&[
        "eval",
        "-p",
        EXAMPLE_POLY,
        "-A",
        a4.to_str().unwrap(),
        "--diff",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("# discrepancies: 0"));
    assert!(text.contains("24301805 3 45 3240000"));
}

#[test]
fn eval_closed_and_oracle_agree() {
    let a4 = example("a4.txt");
    let a4 = a4.to_str().unwrap();
    let closed = monomat(&["eval", "-p", EXAMPLE_POLY, "-A", a4]);
    let oracle = monomat(&["eval", "-p", EXAMPLE_POLY, "-A", a4, "--via", "oracle"]);
    assert!(closed.status.success() && oracle.status.success());
    assert_eq!(stdout(&closed), stdout(&oracle));
    assert!(stdout(&closed).starts_with("4\n"));
}

#[test]
fn eval_blocks_output_lists_coefficients() {
    let a4 = example("a4.txt");
    let out = monomat(&[
        "eval",
        "-p",
        EXAMPLE_POLY,
        "-A",
        a4.to_str().unwrap(),
        "--output",
        "blocks",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["n"], 4);
    assert_eq!(json["blocks"][0]["alpha"], "30");
    assert_eq!(
        json["blocks"][0]["coefficients"],
        serde_json::json!(["24301805", "1", "3", "108000"])
    );
}

#[test]
fn eval_structured_input_with_two_blocks() {
    let path = example("split3.json");
    let out = monomat(&[
        "eval",
        "-p",
        "t^2 - 1",
        "-A",
        path.to_str().unwrap(),
        "--diff",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("# discrepancies: 0"));
}

#[test]
fn eval_reads_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_monomat"))
        .args(["eval", "-p", "t^2", "-A", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"2\n0 2\n3 0\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n6 0\n0 6\n");
}

#[test]
fn power_structured_and_diff() {
    let a4 = example("a4.txt");
    let a4 = a4.to_str().unwrap();
    let out = monomat(&["power", "-A", a4, "-j", "5", "--output", "structured"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["perm"], serde_json::json!([2, 3, 4, 1]));
    assert_eq!(json["values"], serde_json::json!(["90", "150", "60", "30"]));
    let diff = monomat(&["power", "-A", a4, "-j", "37", "--diff"]);
    assert!(diff.status.success());
    assert!(stdout(&diff).contains("# discrepancies: 0"));
    let zero = monomat(&["power", "-A", a4, "-j", "0"]);
    assert_eq!(stdout(&zero), "4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
}

#[test]
fn parts_lists_every_residue() {
    let out = monomat(&["parts", "-p", EXAMPLE_POLY, "-n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("p_(0,4)(t) = t^20 + 2*t^8 + 5\n"));
    assert!(text.contains("p_(1,4)(t) = t\n"));
    assert!(text.contains("p_(2,4)(t) = 3*t^2\n"));
    assert!(text.contains("p_(3,4)(t) = 4*t^15\n"));
    assert!(text.contains("sum of parts reproduces p"));
    let sparse = monomat(&["parts", "-p", "t^4", "-n", "3"]);
    assert!(stdout(&sparse).contains("p_(0,3)(t) = 0\n"));
}

#[test]
fn check_true_verdict() {
    let out = monomat(&["check", "-p", "t^3 - 2*t^2 + t", "-n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("verdict: true"));
}

#[test]
fn check_false_verdict_writes_witness_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let out = monomat(&[
        "check",
        "-p",
        "t^3 - 2*t^2 + t",
        "-n",
        "3",
        "--witness-matrix",
        w.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("verdict: false"));
    assert!(text.contains("counterexample: k=3 r=2 p(A)[1,3] = -2"));
    let matrix = std::fs::read_to_string(&w).unwrap();
    assert_eq!(matrix, "3\n0 1 0\n0 0 1\n1 0 0\n");

    // the written matrix really is a counterexample
    let eval = monomat(&[
        "eval",
        "-p",
        "t^3 - 2*t^2 + t",
        "-A",
        w.to_str().unwrap(),
        "--via",
        "oracle",
    ]);
    let rows: Vec<String> = stdout(&eval).lines().skip(1).map(String::from).collect();
    assert_eq!(rows[0].split_whitespace().nth(2), Some("-2"));
}

#[test]
fn check_json_report() {
    let out = monomat(&["check", "-p", "t^2 - t + 1", "-n", "2", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(json["verdict"], false);
    assert_eq!(json["failures"][0]["k"], 2);
    assert_eq!(json["failures"][0]["r"], 1);
    assert_eq!(json["counterexample"]["value"], "-1");
}

#[test]
fn parse_errors_report_position() {
    let a4 = example("a4.txt");
    let out = monomat(&["eval", "-p", "t^2 + * 3", "-A", a4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("position 7"), "{}", stderr(&out));
}

#[test]
fn non_monomial_input_reports_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3\n0 1 0\n1 0 1\n0 0 1\n").unwrap();
    let out = monomat(&["eval", "-p", "t", "-A", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("row 2"), "{}", stderr(&out));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(monomat(&["eval"]).status.code(), Some(2));
    assert_eq!(
        monomat(&["check", "-p", "t", "-n", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        monomat(&["parts", "-p", "t", "-n", "0"]).status.code(),
        Some(2)
    );
    let missing = monomat(&["eval", "-p", "t", "-A", "/nonexistent/a.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn bench_emits_csv() {
    let out = monomat(&[
        "bench",
        "--sizes",
        "2,3",
        "--degrees",
        "5",
        "--seed",
        "9",
        "--min-time-ms",
        "0",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,t_closed_form,t_dense,speedup"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[0][0], rows[0][1]), ("2", "5"));
    assert_eq!((rows[1][0], rows[1][1]), ("3", "5"));
    assert!(rows.iter().all(|r| r.len() == 5));
}
