use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_subcubic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn gen_pipes_into_verify() {
    let g = run(&["gen", "--n", "10", "--cubic"], "");
    assert!(g.status.success());
    assert_eq!(stdout(&g).lines().count(), 19);
    let v = run(&["verify", "--format", "summary"], &stdout(&g));
    assert_eq!(v.status.code(), Some(0));
    let s: serde_json::Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(s["graphs"], 19);
    assert_eq!(s["violations"], 0);
}

#[test]
fn gen_count_only_and_file_output() {
    let o = run(&["gen", "--n", "8", "--count-only"], "");
    assert_eq!(stdout(&o).trim(), "194");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic8.g6");
    let o = run(&["gen", "--n", "8", "--cubic", "--out", path.to_str().unwrap()], "");
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 5);
    let o = run(&["verify", "--input", path.to_str().unwrap(), "--format", "csv"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn gen_rejects_large_orders() {
    let o = run(&["gen", "--n", "11"], "");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["gen", "--n", "11", "--cap", "11", "--count-only"], "");
    assert_eq!(stdout(&o).trim(), "5524");
}

#[test]
fn solve_both_methods() {
    for method in ["bb", "brute"] {
        let o = run(&["solve", "--input", "petersen", "--method", method], "");
        assert!(o.status.success());
        let rec = &json_lines(&o)[0];
        assert_eq!(rec["gamma"], 2);
        assert_eq!(rec["n"], 10);
        assert!(rec["certificate"].as_str().unwrap().contains(':'));
    }
}

#[test]
fn solve_reads_edge_lists_and_reports_partial() {
    let o = run(&["solve"], "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(json_lines(&o)[0]["gamma"], 2);
    let o = run(&["solve", "--input", "c12", "--cap", "10"], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(json_lines(&o)[0]["error"].as_str().unwrap().contains("cap"));
}

#[test]
fn verify_reports_partial_exit_code() {
    let o = run(&["verify", "--cap", "8", "--format", "summary"], "C~\nI????????\n");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn analyze_one_vertex() {
    let o = run(&["analyze", "--input", "JC`Q`Og@_B_", "--vertex", "3"], "");
    assert!(o.status.success());
    let rec = &json_lines(&o)[0]["analysis"];
    assert_eq!(rec["case"]["r"], 4);
    assert_eq!(rec["set_profile"]["a"], 1);
    let o = run(&["analyze", "--input", "k33"], "");
    assert_eq!(json_lines(&o).len(), 6);
}

#[test]
fn reduce_lists_and_applies() {
    // A 4-cycle 0123 hung from the ends of the path 4-5-6 by edges 0-4 and 1-6.
    let edges = "7 7\n0 1\n1 2\n2 3\n3 0\n4 5\n5 6\n0 4\n";
    let with_back = format!("{edges}1 6\n").replacen("7 7", "7 8", 1);
    let o = run(&["reduce"], &with_back);
    let found = &json_lines(&o)[0]["separated_c4"];
    assert_eq!(found.as_array().unwrap().len(), 1);
    let o = run(&["reduce", "--apply", "0"], &with_back);
    assert!(o.status.success());
    let contracted = stdout(&o);
    // The result is a 4-cycle.
    let s = run(&["solve", "--input", contracted.trim()], "");
    assert_eq!(json_lines(&s)[0]["n"], 4);
    let o = run(&["reduce", "--apply", "3"], &with_back);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_input_is_an_error() {
    let o = run(&["solve", "--input", "not a graph"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("error"));
}
