//! End-to-end tests of the installed binary: exact stdout, exit codes,
//! determinism, and the no-partial-output rule.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorforest"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_forests_gallery() {
    assert_eq!(
        stdout(&["count", "forests", "--lambda", "3,1,1", "--roots", "1,1"]),
        "20\n"
    );
}

#[test]
fn count_forests_headline() {
    assert_eq!(
        stdout(&["count", "forests", "--lambda", "11,7,8,6", "--roots", "1,1,3"]),
        "2223687758798502796800\n"
    );
}

#[test]
fn count_empty_forest() {
    assert_eq!(stdout(&["count", "forests", "--lambda", "0,0,0"]), "1\n");
}

#[test]
fn count_trees_zero_branch() {
    assert_eq!(
        stdout(&["count", "trees", "--lambda", "0,5", "--root", "1"]),
        "0\n"
    );
}

#[test]
fn count_triangulations() {
    assert_eq!(
        stdout(&["count", "tri", "--n", "16", "--type", "6,5,5"]),
        "1382976\n"
    );
}

#[test]
fn count_fuss() {
    assert_eq!(
        stdout(&["count", "fuss", "--n", "6", "--p", "2", "--r", "6"]),
        "6188\n"
    );
}

#[test]
fn table_xi_golden() {
    let expected = "\
nu1\\nu2,0,1,2,3,4
0,0,0,0,0,1
1,0,0,0,64,20
2,0,0,200,400,30
3,0,64,400,192,4
4,1,20,30,4,0
total,1430
";
    assert_eq!(stdout(&["table", "xi", "--n", "8"]), expected);
}

#[test]
fn table_tri_two_rows() {
    let expected = "lambda,count\n\"(3,2,1)\",6\n\"(2,2,2)\",8\ntotal,14\n";
    assert_eq!(stdout(&["table", "tri", "--n", "6"]), expected);
    // the brute path must emit the identical bytes
    assert_eq!(stdout(&["table", "tri", "--n", "6", "--brute"]), expected);
}

#[test]
fn table_alpha_total_line() {
    let out = stdout(&["table", "alpha", "--n", "6", "--rho", "1,1,1"]);
    assert!(out.ends_with("total,6188\n"), "{out}");
    assert!(out.contains("2,10,640,2000,640,10\n"), "{out}");
}

#[test]
fn table_output_file_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("xi.json");
    let out = run(&[
        "table",
        "xi",
        "--n",
        "4",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let body: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(body["total"], "14");
    assert_eq!(body["formula"], "xi");
}

#[test]
fn sequence_catalan_bfile() {
    assert_eq!(
        stdout(&["sequence", "catalan", "--max", "6"]),
        "0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n"
    );
}

#[test]
fn sequence_fuss_hits_alpha_total() {
    let out = stdout(&["sequence", "fuss", "--p", "2", "--r", "6", "--max", "6"]);
    assert!(out.ends_with("6 6188\n"), "{out}");
}

#[test]
fn sequence_row_sums() {
    // row h = 0 sums to xi_n((t,0)) over t; spot value at n = 4 is 1
    let out = stdout(&["sequence", "row-sums", "--h", "0", "--max", "4"]);
    assert_eq!(out, "1 1\n2 1\n3 1\n4 1\n");
}

#[test]
fn enumerate_forests_line_count() {
    let out = stdout(&[
        "enumerate",
        "forests",
        "--lambda",
        "3,1,1",
        "--roots",
        "1,1",
    ]);
    assert_eq!(out.lines().count(), 20);
    let distinct: std::collections::BTreeSet<&str> = out.lines().collect();
    assert_eq!(distinct.len(), 20);
}

#[test]
fn enumerate_tri_records() {
    let out = stdout(&["enumerate", "tri", "--n", "6", "--format", "json"]);
    assert_eq!(out.lines().count(), 14);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 6);
        assert_eq!(v["diagonals"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn enumerate_trees_dot() {
    let out = stdout(&[
        "enumerate",
        "trees",
        "--lambda",
        "1,1,1",
        "--root",
        "3",
        "--format",
        "dot",
    ]);
    assert_eq!(out.matches("digraph").count(), 3);
}

#[test]
fn verify_pass_lines_and_exit() {
    let out = run(&["verify", "oracle", "--k", "3", "--max-n", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS oracle-equivalence"), "{text}");
}

#[test]
fn verify_json_report() {
    let out = run(&["verify", "poly", "--k", "2", "--json-report"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 4);
}

#[test]
fn determinism_byte_identical() {
    for args in [
        vec!["table", "xi", "--n", "7"],
        vec![
            "table", "alpha", "--n", "6", "--rho", "2,1,0", "--format", "json",
        ],
        vec![
            "enumerate",
            "forests",
            "--lambda",
            "2,2,1",
            "--roots",
            "1,2",
        ],
        vec!["verify", "poly", "--k", "3", "--seed", "42"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn invalid_inputs_exit_two_with_message() {
    let out = run(&["count", "forests", "--lambda", "3,1,1", "--roots", "1,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));

    let out = run(&["count", "tri", "--n", "6", "--type", "3,2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sum"));

    // no partial table on a bad parameter
    let out = run(&["table", "xi", "--n", "8", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn enumerate_guard_refuses_heavy_characters() {
    let out = run(&["enumerate", "forests", "--lambda", "9,9,9", "--roots", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max-weight"));
    let ok = run(&[
        "enumerate",
        "forests",
        "--lambda",
        "5,4,4",
        "--roots",
        "1",
        "--max-weight",
        "13",
    ]);
    assert!(ok.status.success());
}
