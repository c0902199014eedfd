//! End-to-end checks of the binary: exit codes, formats, file input.

use std::io::Write;
use std::process::{Command, Output};

fn treelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treelab"))
        .args(args)
        .output()
        .expect("failed to run treelab")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

#[test]
fn unknown_flag_exits_2() {
    let out = treelab(&["heap", "trace", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_size_exits_2() {
    let out = treelab(&["heap", "trace", "--input", "ascending"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--size"));
}

#[test]
fn heap_trace_csv_header_is_exact() {
    let out = treelab(&["heap", "trace", "--size", "7", "--input", "ascending"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("step,root_index,left_level,right_level,case,actual_cost,phi_before,phi_after,amortized")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0], "1,3,1,1,same,1,7,6,0");
    assert_eq!(rows[2], "3,1,2,2,same,2,5,3,0");
}

#[test]
fn heap_trace_json_schema() {
    let out = treelab(&[
        "heap",
        "trace",
        "--size",
        "4",
        "--input",
        "ascending",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(value["config"]["subcommand"], "heap trace");
    assert_eq!(value["config"]["input"], "ascending");
    assert_eq!(value["summary"]["n"], 4);
    assert_eq!(value["summary"]["phi_initial"], 4);
    assert_eq!(value["summary"]["phi_final"], 3);
    assert_eq!(value["summary"]["total_actual"], 3);
    let events = value["events"].as_array().expect("events array");
    assert_eq!(events.len(), 2);
    // Field names match the CSV columns.
    let first = events[0].as_object().unwrap();
    for field in [
        "step",
        "root_index",
        "left_level",
        "right_level",
        "case",
        "actual_cost",
        "phi_before",
        "phi_after",
        "amortized",
    ] {
        assert!(first.contains_key(field), "missing {field}");
    }
    assert_eq!(events[0]["case"], "diff");
}

#[test]
fn heap_trace_from_file_matches_generated() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("keys.txt");
    let mut f = std::fs::File::create(&path).unwrap();
    for k in 1..=7 {
        writeln!(f, "{k}").unwrap();
    }
    drop(f);

    let from_file = treelab(&[
        "heap",
        "trace",
        "--input",
        "file",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(from_file.status.code(), Some(0));
    let generated = treelab(&["heap", "trace", "--size", "7", "--input", "ascending"]);
    assert_eq!(from_file.stdout, generated.stdout);
}

#[test]
fn malformed_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "1\ntwo\n3\n").unwrap();
    let out = treelab(&[
        "heap",
        "trace",
        "--input",
        "file",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.txt:2"));
}

#[test]
fn file_size_mismatch_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("keys.txt");
    std::fs::write(&path, "5\n6\n").unwrap();
    let out = treelab(&[
        "heap",
        "trace",
        "--size",
        "3",
        "--input",
        "file",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fibtree_dot_output() {
    let out = treelab(&[
        "fibtree", "build", "--height", "3", "--method", "grow", "--format", "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout_of(&out);
    assert!(dot.starts_with("digraph fibtree {"));
    assert_eq!(dot.matches("label=").count(), 7);
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert_eq!(dot.matches("fillcolor").count(), 7);
}

#[test]
fn fibtree_build_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.json");
    let out = treelab(&[
        "fibtree",
        "build",
        "--height",
        "2",
        "--method",
        "recursive",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["summary"]["nodes"], 4);
    assert_eq!(value["summary"]["leaves"], 2);
    // Recursive builds carry no generation data.
    assert!(value.get("generations").is_none());
    assert!(value["summary"].get("histogram").is_none());
}

#[test]
fn fibtree_build_height_cap_exits_2() {
    let out = treelab(&["fibtree", "build", "--height", "90", "--method", "grow"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn avl_experiment_rows_are_deterministic() {
    let args = [
        "avl",
        "experiment",
        "--n",
        "500",
        "--input",
        "random",
        "--seed",
        "11",
    ];
    let first = treelab(&args);
    let second = treelab(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout_of(&first);
    assert!(text.starts_with("n,height,bound,pass\n"));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn heap_verify_sweep_passes() {
    let out = treelab(&["heap", "verify", "--max-size", "64", "--seeds", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("n,input,seed,total_actual,ratio,pass\n"));
    // 64 sizes x (ascending + descending + 3 seeds)
    assert_eq!(text.lines().count() - 1, 64 * 5);
}

#[test]
fn oracle_limits_exit_2() {
    assert_eq!(
        treelab(&["oracle", "avl", "--max-height", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        treelab(&["oracle", "heap", "--max-size", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_all_small_scale_exits_0() {
    let out = treelab(&["verify", "all", "--max-height", "8", "--max-size", "48"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert_eq!(text.matches("[PASS]").count(), 7);
    assert!(text.ends_with("all checks passed\n"));
}
