use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert-ed"))
        .args(args)
        .env_remove("SCHUBERT_ED_CACHE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn validator() -> jsonschema::Validator {
    let text = include_str!("../schema/ed_report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

fn assert_schema(v: &Value) {
    let errors: Vec<String> = validator().iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{v:#}");
}

#[test]
fn ed_both_methods_agree_on_f4() {
    let (v, code) = json(&["ed", "--family", "F4", "--node", "2", "--method", "both"]);
    assert_eq!(code, 0);
    assert_eq!(v["ed"], 14);
    assert_eq!(v["witness"]["total_degree"], 15);
    assert_schema(&v);
}

#[test]
fn ed_brute_force_a3() {
    let (v, code) = json(&["ed", "--family", "A", "--rank", "3", "--node", "2", "--method", "brute"]);
    assert_eq!(code, 0);
    assert_eq!(v["ed"], 3);
    assert_eq!(v["method"], "brute_force");
    assert_schema(&v);
}

#[test]
fn ed_flag_e6() {
    let (v, code) = json(&["ed", "--family", "E6", "--flag"]);
    assert_eq!(code, 0);
    assert_eq!(v["ed"], 12);
    assert_eq!(v["method"], "reduction");
    assert_schema(&v);
}

#[test]
fn ed_truncation_exits_3() {
    let (v, code) = json(&["--budget-pairs", "10", "ed", "--family", "E6", "--node", "4", "--method", "brute"]);
    assert_eq!(code, 3);
    assert_eq!(v["truncated"], true);
    assert!(v["ed"].is_null());
    assert_schema(&v);
}

#[test]
fn ed_tsv_row() {
    let out = run(&["--format", "tsv", "ed", "--family", "B", "--rank", "3", "--node", "2", "--method", "brute"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "spec\ted\tmethod\twitness_u\twitness_w\tL");
    let cols: Vec<&str> = lines[1].split('\t').collect();
    assert_eq!(cols.len(), 6);
    assert_eq!(&cols[..3], &["B3(2)", "5", "brute_force"]);
    assert_eq!(cols[5], "6");
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["ed", "--family", "Q", "--node", "1"]).status.code(), Some(1));
    assert_eq!(run(&["ed", "--family", "A", "--rank", "3", "--node", "5"]).status.code(), Some(1));
    assert_eq!(run(&["bruhat", "--family", "A", "--rank", "3", "--u", "1x", "--w", "1"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--threads", "0", "wp", "--family", "G2", "--node", "1"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn bruhat_examples() {
    let w3 = "6245341324567541324561324532413";
    let (v, code) = json(&["bruhat", "--family", "E7", "--u", "765432413", "--w", w3]);
    assert_eq!(code, 0);
    assert_eq!(v["leq"], false);
    let (v, _) = json(&["bruhat", "--family", "E7", "--u", "", "--w", w3]);
    assert_eq!(v["leq"], true);
    let (v, _) = json(&["bruhat", "--family", "E7", "--u", w3, "--w", w3]);
    assert_eq!(v["leq"], true);
    let (v, _) = json(&["bruhat", "--family", "B", "--rank", "3", "--u", "[1,2]", "--w", "[3,2,1,2]"]);
    assert_eq!(v["leq"], true);
}

#[test]
fn wp_histograms() {
    let (v, _) = json(&["wp", "--family", "E7", "--node", "7"]);
    assert_eq!(v["total"], 56);
    assert_eq!(v["dimension"], 27);
    let (v, _) = json(&["wp", "--family", "A", "--rank", "2", "--node", "1"]);
    assert_eq!(v["strata"], serde_json::json!([1, 1, 1]));
    let (v, _) = json(&["wp", "--family", "E8", "--node", "8"]);
    assert_eq!(v["total"], 240);
    let (v, code) = json(&["wp", "--family", "E8", "--node", "8", "--max-length", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["truncated"], true);
    assert_eq!(v["strata"], serde_json::json!([1, 1, 1, 1]));
}

#[test]
fn symbols_round_trip() {
    let (v, code) = json(&["symbols", "--family", "B", "--n", "2", "--m", "1", "--from", "partition", "--value", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["index_set"], serde_json::json!([2]));
    assert_eq!(v["dual_index_set"], serde_json::json!([4]));
    let (v, _) = json(&["symbols", "--family", "B", "--n", "2", "--m", "1", "--from", "indexset", "--value", "4"]);
    assert_eq!(v["partition"]["parts"], serde_json::json!([1]));
    let (v, _) = json(&["symbols", "--family", "B", "--n", "3", "--m", "2", "--from", "partition", "--value", "0"]);
    assert_eq!(v["index_set"], serde_json::json!([6, 7]));
    assert_eq!(v["weyl_word"], "");
    let missing_t = run(&["symbols", "--family", "D", "--n", "4", "--m", "2", "--from", "partition", "--value", "3"]);
    assert_eq!(missing_t.status.code(), Some(1));
    let (v, code) =
        json(&["symbols", "--family", "D", "--n", "4", "--m", "2", "--from", "partition", "--value", "3", "--t", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["partition"]["t"], 1);
}

#[test]
fn verify_suites() {
    let (v, code) = json(&["verify", "--suite", "table3"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["cases"].as_array().unwrap().len(), 23);
    let (_, code) = json(&["verify", "--suite", "prop34", "--n", "4", "--m", "2"]);
    assert_eq!(code, 0);
    let (_, code) = json(&["verify", "--suite", "table1-classical", "--max-rank", "4"]);
    assert_eq!(code, 0);
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(1));
}

#[test]
fn verify_truncation_exits_3() {
    let (_, code) = json(&["--budget-pairs", "1", "verify", "--suite", "table1-classical", "--max-rank", "3"]);
    assert_eq!(code, 3);
}

#[test]
fn morphism_verdicts() {
    let (v, _) = json(&[
        "morphism", "--family", "E6", "--node", "4", "--target-family", "B", "--target-rank", "7", "--target-node", "3",
    ]);
    assert_eq!(v["source_ed"], 15);
    assert_eq!(v["verdict"], "constant-forced");
    let (v, _) = json(&["morphism", "--family", "E7", "--node", "2", "--q", "7"]);
    assert_eq!(v["verdict"], "theorem does not apply");
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["ed", "--family", "E6", "--node", "3", "--method", "brute"];
    let one = run(&[&["--threads", "1"], &args[..]].concat());
    let four = run(&[&["--threads", "4"], &args[..]].concat());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (cold, _) = json(&["--cache-dir", d, "ed", "--family", "F4", "--node", "1", "--method", "brute"]);
    let (list, _) = json(&["--cache-dir", d, "cache", "--list"]);
    assert_eq!(list["files"].as_array().unwrap().len(), 1);
    let warm = Command::new(env!("CARGO_BIN_EXE_schubert-ed"))
        .args(["ed", "--family", "F4", "--node", "1", "--method", "brute"])
        .env("SCHUBERT_ED_CACHE", d)
        .output()
        .unwrap();
    assert_eq!(serde_json::from_slice::<Value>(&warm.stdout).unwrap(), cold);
    let (cleared, _) = json(&["--cache-dir", d, "cache", "--clear"]);
    assert_eq!(cleared["removed"], true);
    let (list, _) = json(&["--cache-dir", d, "cache", "--list"]);
    assert!(list["files"].as_array().unwrap().is_empty());
}
