use std::process::{Command, Output};

use serde_json::Value;

fn nqf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nqf")).args(args).env_remove("NQF_CACHE").output().expect("spawn nqf")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn verify_all_on_a2() {
    let out = nqf(&["verify", "all", "--type", "A", "--rank", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let reports = lines(&out);
    assert_eq!(reports.len(), 10);
    let names: Vec<&str> = reports.iter().map(|r| r["check"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for r in &reports {
        let expected = if r["check"] == "bn-relations" { "skipped" } else { "pass" };
        assert_eq!(r["status"], expected, "{r}");
        assert_eq!(r["instance"], "A2");
        assert!(r["max_degree"].is_null());
        assert!(r.get("wall_ms").is_none());
    }
}

#[test]
fn timings_are_opt_in() {
    let out = nqf(&["verify", "hilbert", "--type", "A", "--rank", "1", "--timings"]);
    assert!(out.status.success());
    assert!(lines(&out)[0]["wall_ms"].is_u64());
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = nqf(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonsense"));
}

#[test]
fn invalid_constants_are_rejected() {
    let out = nqf(&["verify", "prop3", "--type", "B", "--rank", "2", "--c-short", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hilbert_table_for_b2() {
    let out = nqf(&["hilbert", "--type", "B", "--rank", "2"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 4, 8, 12, 14, 12, 8, 4, 1]));
    assert_eq!(v["total"], 64);
    assert_eq!(v["complete"], true);
}

#[test]
fn truncated_hilbert_table() {
    let out = nqf(&["hilbert", "--type", "B", "--rank", "3", "--max-degree", "3"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 9, 46, 180]));
    assert_eq!(v["complete"], false);
}

#[test]
fn schubert_for_one_element() {
    let out = nqf(&["schubert", "--type", "A", "--rank", "2", "--w", "1,2", "--format", "text"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.matches("w = ").count(), 1);
    assert!(text.contains("schubert_ambient"));
}

#[test]
fn schubert_word_out_of_range() {
    let out = nqf(&["schubert", "--type", "A", "--rank", "2", "--w", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quantum_invariants_of_a2() {
    let out = nqf(&["invariants", "--type", "A", "--rank", "2"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let invs = v["invariants"].as_array().unwrap();
    assert_eq!(invs.len(), 2);
    assert_eq!(invs[0]["degree"], 2);
    assert!(invs[0]["quantum_ambient"].as_str().unwrap().contains('q'));
}

#[test]
fn dump_basis_lists_words() {
    let out = nqf(&["dump", "basis", "--type", "A", "--rank", "2"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let degrees = v["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 5);
    assert_eq!(degrees[4]["words"].as_array().unwrap().len(), 1);
    assert_eq!(degrees[0]["words"][0], "1");
}

#[test]
fn dump_rejects_unknown_table() {
    assert_eq!(nqf(&["dump", "tables"]).status.code(), Some(2));
}

#[test]
fn text_reports() {
    let out = nqf(&["verify", "bn-relations", "coxeter", "--type", "B", "--rank", "2", "--format", "text"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let first: Vec<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(first, ["PASS", "PASS"]);
}

#[test]
fn empty_check_list_succeeds_silently() {
    let out = nqf(&["verify"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}
