use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn partlog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partlog"))
        .args(args)
        .env_remove("PARTLOG_SEED")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn text(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn model(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const FIGURES: &str =
    r#"{"universe":["a","b","c","d","e"],"bindings":{"s":[["a","b","c"],["d","e"]],"p":[["a","b"],["c","d","e"]]}}"#;

#[test]
fn prove_exit_codes() {
    let o = partlog(&["prove", "(s /\\ (s => p)) => p"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdict"], "proved");

    let o = partlog(&["prove", "((s => p) => s) => s"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["verdict"], "countermodel");
    assert_eq!(v["model"]["bindings"]["s"], serde_json::json!([["u0", "u1"], ["u2"]]));
    assert_eq!(v["model"]["bindings"]["p"], serde_json::json!([["u0", "u1", "u2"]]));

    let o = partlog(&["prove", "p => (s => p)", "--max-elements", "2"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["reason"], "max_elements");
}

#[test]
fn prove_trace_lists_rules() {
    let o = partlog(&["prove", "s => s", "--trace"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let rules: Vec<&str> = v["trace"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["rule"].as_str().unwrap())
        .collect();
    assert_eq!(rules.first(), Some(&"root"));
    assert!(rules.contains(&"close"));
    assert_eq!(v["branches"][0]["closed"], true);
}

#[test]
fn check_weak_and_strict() {
    let o = partlog(&["check", "s \\/ ~s", "--weak", "--max-n", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdict"], "weak_tautology_up_to");
    let o = partlog(&["check", "s \\/ ~s", "--max-n", "3"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["verdict"], "countermodel");
    let o = partlog(&["check", "(s /\\ (s => p)) => p"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["max_n"], 4);
}

#[test]
fn parse_outputs_the_tree() {
    let o = partlog(&["parse", "~s"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["ast"]["op"], "not");
    let o = partlog(&["parse", "~s", "--desugar"]);
    let v = json(&o);
    assert_eq!(v["formula"], "s => 0");
    assert_eq!(v["schema"], "partlog/1");
}

#[test]
fn usage_and_parse_errors_exit_64() {
    assert_eq!(code(&partlog(&["parse", "s /\\"])), 64);
    assert_eq!(code(&partlog(&["prove", "(s"])), 64);
    assert_eq!(code(&partlog(&["frobnicate"])), 64);
    assert_eq!(code(&partlog(&["prove"])), 64);
    assert_eq!(
        code(&partlog(&["transform", "s | p", "--kind", "godel", "--pi", "q"])),
        64
    );
    assert_eq!(code(&partlog(&["transform", "s", "--kind", "godel", "--pi", "s"])), 64);
    assert_eq!(code(&partlog(&["check", "s /\\ p /\\ t", "--max-n", "9"])), 64);
    assert_eq!(code(&partlog(&["--help"])), 0);
}

#[test]
fn eval_worked_example() {
    let m = model(FIGURES);
    let path = m.path().to_str().unwrap();
    let o = partlog(&["eval", "s => p", "--model", path]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["value"], serde_json::json!([["a"], ["b"], ["c", "d", "e"]]));
    let o = partlog(&["eval", "s | p", "--model", path]);
    assert_eq!(json(&o)["value"], serde_json::json!([["a", "b", "d", "e"], ["c"]]));
}

#[test]
fn bad_models_exit_65() {
    let m = model(r#"{"universe":["a","b"],"bindings":{"s":[["a"]]}}"#);
    assert_eq!(
        code(&partlog(&["eval", "s", "--model", m.path().to_str().unwrap()])),
        65
    );
    assert_eq!(code(&partlog(&["eval", "s", "--model", "/nonexistent/model.json"])), 65);
    let m = model(FIGURES);
    assert_eq!(
        code(&partlog(&["eval", "x", "--model", m.path().to_str().unwrap()])),
        65
    );
}

#[test]
fn entropy_is_a_ratio() {
    let m = model(FIGURES);
    let o = partlog(&["entropy", "--model", m.path().to_str().unwrap(), "--atom", "s"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["entropy"], "12/25");
    assert_eq!(v["dits"], 12);
}

#[test]
fn dual_and_transforms() {
    assert_eq!(text(&partlog(&["dual", "s => p"])), "p^d - s^d");
    assert_eq!(text(&partlog(&["dual", "s | ~t"])), "s^d nor 0^d - t^d");
    assert_eq!(
        text(&partlog(&["transform", "s \\/ ~s", "--kind", "single-pi", "--pi", "q"])),
        "(s => q) \\/ ((s => q) => q)"
    );
    assert_eq!(
        text(&partlog(&["transform", "s", "--kind", "double-pi", "--pi", "q"])),
        "(s => q) => q"
    );
    assert_eq!(
        text(&partlog(&["transform", "s /\\ t", "--kind", "godel", "--pi", "0"])),
        "((s => 0) => 0) /\\ ((t => 0) => 0)"
    );
}

#[test]
fn identities_selected_items_and_seed_override() {
    let o = partlog(&["identities", "--only", "ore", "--only", "omega-2", "--seed", "5"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["passed"], 2);
    assert_eq!(v["seed"], 5);
    let o = Command::new(env!("CARGO_BIN_EXE_partlog"))
        .args(["identities", "--only", "ore", "--seed", "5"])
        .env("PARTLOG_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(json(&o)["seed"], 11);
    assert_eq!(code(&partlog(&["identities", "--only", "no-such-item"])), 64);
}

#[test]
fn identities_full_run_is_deterministic() {
    let a = partlog(&["identities", "--max-n", "3"]);
    let b = partlog(&["identities", "--max-n", "3"]);
    assert_eq!(code(&a), 0, "{}", text(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["failed"], 0);
}
