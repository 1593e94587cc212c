//! End-to-end tests of the binary: exit codes, record output, survey
//! resume and deterministic export.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_engel-cli"))
}

#[test]
fn analyze_emits_a_parsable_record() {
    let out = bin().args(["analyze", "S(4)", "--diameter"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rec: engel_cli::record::ResultRecord =
        serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(rec.expr, "S(4)");
    assert_eq!(rec.group_order, 24);
    assert!(rec.strongly_connected);
    assert_eq!(rec.undirected_diameter, Some(2));
}

#[test]
fn analyze_disconnected_group() {
    let out = bin().args(["analyze", "A(5)"]).output().unwrap();
    assert!(out.status.success());
    let rec: engel_cli::record::ResultRecord =
        serde_json::from_str(String::from_utf8(out.stdout).unwrap().lines().last().unwrap())
            .unwrap();
    assert!(!rec.strongly_connected);
    assert!(rec.weakly_connected);
}

#[test]
fn hypercentral_group_reports_empty_graph() {
    let out = bin().args(["analyze", "C(6)"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("empty graph"));
}

#[test]
fn parse_errors_exit_one() {
    let out = bin().args(["analyze", "A(6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte 3"));
}

#[test]
fn constraint_errors_exit_one() {
    let out = bin().args(["analyze", "Frob(19,5)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cap_errors_exit_two() {
    let out = bin().args(["analyze", "S(9)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gamma_n_requires_n() {
    let out = bin().args(["analyze", "S(4)", "--mode", "gamma_n"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let ok = bin().args(["analyze", "S(4)", "--mode", "gamma_n", "--n", "2"]).output().unwrap();
    assert!(ok.status.success());
}

#[test]
fn survey_is_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("survey.jsonl");
    let first = bin()
        .args(["survey", "PSL2", "5..13", "--store"])
        .arg(&store)
        .output()
        .unwrap();
    assert!(first.status.success());
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.contains("# 4 new record(s)"), "unexpected output: {text}");
    // p in {5, 7, 11, 13}; disconnected exactly at 5 and 13
    let loaded = engel_cli::store::load(&store).unwrap();
    assert_eq!(loaded.records.len(), 4);
    for rec in &loaded.records {
        let p: u64 = rec.expr.trim_start_matches("PSL(2,").trim_end_matches(')').parse().unwrap();
        assert_eq!(rec.strongly_connected, p % 8 != 5, "at {}", rec.expr);
    }
    // re-running adds nothing
    let second = bin()
        .args(["survey", "PSL2", "5..13", "--store"])
        .arg(&store)
        .output()
        .unwrap();
    assert!(second.status.success());
    assert!(String::from_utf8(second.stdout).unwrap().contains("# 0 new record(s)"));
    // an empty range is a no-op success
    let empty = bin()
        .args(["survey", "PSL2", "24..28", "--store"])
        .arg(&store)
        .output()
        .unwrap();
    assert!(empty.status.success());
    assert_eq!(engel_cli::store::load(&store).unwrap().records.len(), 4);
}

#[test]
fn export_is_deterministic() {
    let a = bin().args(["export", "A(5)", "--format", "dot"]).output().unwrap();
    let b = bin().args(["export", "A(5)", "--format", "dot"]).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("order="));
    assert!(text.contains("scc="));
}

#[test]
fn edgelist_header_and_sorted_edges() {
    let out = bin()
        .args(["export", "S(4)", "--format", "edgelist"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "# S(4) gamma 23");
    let edges: Vec<(u32, u32)> = lines
        .map(|l| {
            let (u, v) = l.split_once(' ').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert!(!edges.is_empty());
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    assert_eq!(edges, sorted);
}

#[test]
fn export_of_empty_graph_has_header_only() {
    let out = bin()
        .args(["export", "C(4)", "--format", "edgelist"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), "# C(4) gamma 0");
}
