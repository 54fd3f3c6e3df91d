use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chiefcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn check_sylow_five_of_a5() {
    let dir = TempDir::new().unwrap();
    let a5 = write(&dir, "a5.txt", "group A5\nexpr Alt(5)\n");
    let s = run(&["check", "--group", &a5, "--subgroup", "(1 2 3 4 5)", "--property", "partial-s-pi", "--format", "json"]);
    assert_eq!(s.status.code(), Some(0));
    let v = json(&s);
    assert_eq!(v["verdict"]["holds"], true);
    assert_eq!(v["subgroup_order"], 5);
    assert!(v["verdict"]["witness"].is_array());

    let p = run(&["check", "--group", &a5, "--subgroup", "(1 2 3 4 5)", "--property", "partial-pi"]);
    assert_eq!(p.status.code(), Some(0));
    assert!(stdout(&p).contains("holds: false"));
}

#[test]
fn check_with_explicit_generators() {
    let dir = TempDir::new().unwrap();
    let s4 = write(&dir, "s4.txt", "# the symmetric group\ngroup S4\ndegree 4\ngen (1 2)\ngen (1 2 3 4)\n");
    let o = run(&["check", "--group", &s4, "--subgroup", "(1 2)(3 4);(1 3)(2 4)", "--property", "s-quasinormal"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds: true"));
    let o = run(&["check", "--group", &s4, "--subgroup", "(1 2)(3 4)", "--property", "cap", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"]["holds"], false);
}

#[test]
fn invariants_and_chief_series() {
    let dir = TempDir::new().unwrap();
    let s4 = write(&dir, "s4.txt", "group S4\nexpr Sym(4)\n");
    let o = run(&["invariants", "--group", &s4, "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["order"], 24);
    assert_eq!(v["soluble"], true);
    assert_eq!(v["supersoluble"], false);
    assert_eq!(v["fitting"]["order"], 4);

    let o = run(&["chief", "--group", &s4, "--enumerate-limit", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 < 4 < 12 < 24"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "group X\ndegree 3\ngen (1 2 4)\n");
    assert_eq!(run(&["invariants", "--group", &bad]).status.code(), Some(2));
    let missing = dir.path().join("nope.txt");
    assert_eq!(
        run(&["invariants", "--group", &missing.to_string_lossy()]).status.code(),
        Some(2)
    );
    let s3 = write(&dir, "s3.txt", "expr Sym(3)\n");
    // not an element of the group
    let o = run(&["check", "--group", &s3, "--subgroup", "(1 2 3 4)", "--property", "cap"]);
    assert_eq!(o.status.code(), Some(2));
    // mixed-prime subgroup without --prime
    let o = run(&["check", "--group", &s3, "--subgroup", "(1 2);(1 2 3)", "--property", "partial-s-pi"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn element_cap_exits_3() {
    let dir = TempDir::new().unwrap();
    let s6 = write(&dir, "s6.txt", "expr Sym(6)\n");
    let o = run(&["invariants", "--group", &s6, "--cap", "100"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_writes_report() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&["verify", "--theorem", "prop-3.1,thm-1.5", "--max-order", "24", "--out", &out.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let theorems = report["theorems"].as_array().unwrap();
    assert_eq!(theorems.len(), 2);
    for t in theorems {
        assert_eq!(t["counterexamples"], 0);
        let total = t["vacuous"].as_u64().unwrap() + t["confirmed"].as_u64().unwrap();
        assert_eq!(t["instances"].as_u64().unwrap(), total);
    }
    assert!(report["corpus"]["group_count"].as_u64().unwrap() > 10);

    // an empty corpus is fine
    let empty = dir.path().join("empty.json");
    let o = run(&["verify", "--max-order", "0", "--out", &empty.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(Path::new(&empty).exists());

    let o = run(&["verify", "--theorem", "thm-9.9", "--out", &empty.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_lists_corpus() {
    let o = run(&["catalog", "list", "--max-order", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("A4"));
    assert!(text.contains("D12"));
    assert!(!text.lines().any(|l| l.starts_with("S4 ")));
}

#[test]
fn full_theorem_suite_has_no_counterexamples() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("all.json");
    let o = run(&[
        "verify",
        "--theorem",
        "all",
        "--max-order",
        "400",
        "--include-example-1875",
        "--out",
        &out.to_string_lossy(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["corpus"]["include_example_1875"], true);
    for id in ["thm-1.5", "prop-3.1", "prop-3.2", "prop-3.5"] {
        let t = report["theorems"]
            .as_array()
            .unwrap()
            .iter()
            .find(|t| t["id"] == id)
            .unwrap();
        assert_eq!(t["counterexamples"], 0);
        assert!(t["confirmed"].as_u64().unwrap() > 0, "{id}");
    }
}
