use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multideg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn multideg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_json(tag: &str, v: &Value) -> PathBuf {
    let path = std::env::temp_dir().join(format!("multideg-cli-{}-{tag}.json", std::process::id()));
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

#[test]
fn coeff_and_n_mismatch() {
    let o = run(&["coeff", "--k", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");
    assert_eq!(stdout(&run(&["coeff", "--k", "(2,1,0)", "--n", "3"])), "3\n");
    assert_eq!(run(&["coeff", "--k", "1,1", "--n", "3"]).status.code(), Some(1));
    assert_eq!(run(&["coeff", "--k", "1,2"]).status.code(), Some(1));
    assert_eq!(run(&["coeff", "--k", "1,x"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["coeff", "--bogus"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["multidegree", "--n", "2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn cone_degree_reports_check() {
    let o = run(&["cone-degree", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\ncheck (2*1-1)!! = 1: PASS\n");
    let o = run(&["cone-degree", "--n", "10"]);
    assert_eq!(stdout(&o), "135135\ncheck (2*7-1)!! = 135135: PASS\n");
}

#[test]
fn multidegree_formats() {
    let o = run(&["multidegree", "--n", "5", "--format", "csv"]);
    assert_eq!(stdout(&o), "k_1,k_2,deg\n2,0,0\n1,1,2\n0,2,1\n");
    let o = run(&["multidegree", "--n", "5", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cone_degree"], json!(3));
    assert_eq!(v["entries"][1], json!({"k": [1, 1], "deg": 2}));
    let o = run(&["multidegree", "--n", "5"]);
    assert!(stdout(&o).ends_with("cone degree = 3\n"));
}

#[test]
fn cpf_count_and_enumerate() {
    assert_eq!(stdout(&run(&["cpf", "count", "--n", "4"])), "105\n");
    assert_eq!(stdout(&run(&["cpf", "count", "--heights", "1,1,1"])), "6\n");
    assert_eq!(run(&["cpf", "count"]).status.code(), Some(1));
    let o = run(&["cpf", "enumerate", "--heights", "2,0"]);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines, vec![json!({"n": 2, "columns": [[1, 2], []]})]);
    let o = run(&["cpf", "enumerate", "--heights", "2,0", "--render"]);
    assert!(stdout(&o).contains(" _ _\n|2 .\n|1 ."));
}

#[test]
fn classify_insert_remove_via_files() {
    let p = temp_json("p", &json!({"n": 3, "columns": [[1, 3], [], [2]]}));
    let o = run(&["insert", "--algorithm", "iota", "--file", p.to_str().unwrap(), "--point", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let q: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(q, json!({"n": 4, "columns": [[1, 3, 4], [], [2], []]}));

    let qpath = temp_json("q", &q);
    let o = run(&["cpf", "classify", "--file", qpath.to_str().unwrap()]);
    assert_eq!(stdout(&o), "bad\n");
    let o = run(&["remove", "--algorithm", "nu", "--file", qpath.to_str().unwrap()]);
    let back: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(back, json!({"n": 3, "columns": [[1, 3], [], [2]], "point": 2}));

    let o = run(&["insert", "--algorithm", "iota", "--file", p.to_str().unwrap(), "--point", "9"]);
    assert_eq!(o.status.code(), Some(1));
    for f in [p, qpath] {
        let _ = std::fs::remove_file(f);
    }
}

#[test]
fn iota_prime_failure_exits_two() {
    let p = temp_json("bad", &json!({"n": 4, "columns": [[3], [4], [2], [1]]}));
    let o = run(&["insert", "--algorithm", "iota-prime", "--file", p.to_str().unwrap(), "--point", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not column-restricted"));
    let _ = std::fs::remove_file(p);
}

#[test]
fn stdin_input_and_bad_json() {
    let mut child = bin()
        .args(["cpf", "classify", "--file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n":2,"columns":[[2],[1]]}"#)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "good\n");

    let p = temp_json("mismatch", &json!({"n": 3, "columns": [[1], [2]]}));
    let o = run(&["cpf", "classify", "--file", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let _ = std::fs::remove_file(p);
}

#[test]
fn genfun_print_and_eval() {
    assert_eq!(stdout(&run(&["genfun", "--n", "2"])), "x1^2 + 2*x1*x2\n");
    assert_eq!(stdout(&run(&["genfun", "--n", "4", "--eval", "1,1,1,1"])), "105\n");
    assert_eq!(run(&["genfun", "--n", "2", "--eval", "1"]).status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--max-n", "5", "--suite", "bijection"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("FAIL bijection"));
    assert_eq!(run(&["verify", "--max-n", "3", "--suite", "nope"]).status.code(), Some(1));
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = multideg::cli::run(["multideg", "coeff", "--k", "1,1,1"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "6\n");
    assert!(err.is_empty());
}
