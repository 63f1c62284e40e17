//! End-to-end runs of the `gradhecke` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradhecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn table<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["tables"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["name"] == name)
        .unwrap_or_else(|| panic!("no table {}", name))
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("gradhecke-cli-{}-{}", std::process::id(), name))
}

#[test]
fn tableaux_example() {
    let out = run(&["tableaux", "--n", "2", "--e", "2", "--multicharge", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(table(&v, "shapes")["rows"], serde_json::json!(["2", "1,1"]));
    let degrees: Vec<&str> = table(&v, "tableaux")["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row[2].as_str().unwrap())
        .collect();
    assert_eq!(degrees, ["1", "0"]);
}

#[test]
fn relations_example() {
    let out = run(&["relations", "--n", "3", "--e", "3", "--p", "7", "--q", "2", "--multicharge", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["pass"], Value::Bool(true));
    assert!(v["checks"].as_array().unwrap().len() >= 10);
}

#[test]
fn decomp_example() {
    let out = run(&["decomp", "--n", "2", "--e", "2", "--p", "5", "--q", "4", "--multicharge", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(table(&v, "Dec a0 + a1")["entries"], serde_json::json!([["t"], ["1"]]));
    assert_eq!(table(&v, "Cartan a0 + a1")["entries"], serde_json::json!([["t^2 + 1"]]));
}

#[test]
fn formats_carry_the_same_numbers() {
    let base = ["decomp", "--n", "3", "--e", "2"];
    let v = json(&run(&base));
    let csv = String::from_utf8(run(&[&base[..], &["--format", "csv"]].concat()).stdout).unwrap();
    let tex = String::from_utf8(run(&[&base[..], &["--format", "latex"]].concat()).stdout).unwrap();
    assert!(tex.contains("\\begin{tabular}"));
    for t in v["tables"].as_array().unwrap() {
        assert!(csv.contains(t["name"].as_str().unwrap()));
        for (row, entries) in t["rows"].as_array().unwrap().iter().zip(t["entries"].as_array().unwrap()) {
            let cells: Vec<&str> = entries.as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
            let line = std::iter::once(row.as_str().unwrap())
                .chain(cells.iter().copied())
                .map(|c| if c.contains(',') { format!("\"{}\"", c) } else { c.to_string() })
                .collect::<Vec<_>>()
                .join(",");
            assert!(csv.contains(&line), "{} not in\n{}", line, csv);
            let tex_row = std::iter::once(row.as_str().unwrap())
                .chain(cells.iter().copied())
                .map(|c| format!("${}$", c.replace("t^2", "t^{2}")))
                .collect::<Vec<_>>()
                .join(" & ");
            assert!(tex.contains(&tex_row), "{} not in\n{}", tex_row, tex);
        }
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["pairing", "--n", "3", "--e", "2", "--multicharge", "1,0"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn config_file_is_overridden_by_flags() {
    let cfg = scratch("run.cfg");
    std::fs::write(&cfg, "# a run\nn = 3\ne = 3\nmulticharge = 0\nformat = csv\n").unwrap();
    let out = run(&["blocks", "--config", cfg.to_str().unwrap(), "--n", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["config"]["n"], 2);
    assert_eq!(v["config"]["e"], 3);
    assert_eq!(v["config"]["field"], "GF(7)");
    assert_eq!(v["config"]["q"], "2");
    std::fs::write(&cfg, "n = 2\ncolour = blue\n").unwrap();
    assert_eq!(run(&["blocks", "--config", cfg.to_str().unwrap(), "--e", "2"]).status.code(), Some(2));
    std::fs::remove_file(cfg).unwrap();
}

#[test]
fn out_writes_a_file() {
    let path = scratch("gdim.json");
    let out = run(&["gdim", "--n", "2", "--e", "2", "--census", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(table(&v, "algebra")["entries"], serde_json::json!([["t^2 + 1", "2", "2"]]));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn invalid_configurations_exit_with_2() {
    for args in [
        vec!["tableaux", "--e", "2"],
        vec!["tableaux", "--n", "2", "--e", "2", "--p", "4"],
        vec!["relations", "--n", "2", "--e", "3", "--p", "5", "--q", "4"],
        vec!["basis", "--n", "2", "--e", "2", "--degenerate"],
        vec!["relations", "--n", "9", "--e", "2"],
        vec!["relations", "--n", "2", "--e", "2", "--format", "yaml"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{:?}", args);
    }
    let out = run(&["basis", "--n", "2", "--e", "2", "--degenerate"]);
    let diag: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["status"], "error");
}

#[test]
fn failed_identities_exit_with_1_and_are_named() {
    // m_st n_{t's'} is inhomogeneous for the two-tableau shape (2,1)
    let out = run(&["zlambda", "--n", "3", "--e", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let diag: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(diag["status"], "fail");
    assert!(diag["failed"][0]["identity"].as_str().unwrap().starts_with("m_st n_t's'"));
    let v = json(&out);
    let z_checks = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"].as_str().unwrap().starts_with("z_"));
    assert!(z_checks.into_iter().all(|c| c["pass"] == true));
}

#[test]
fn every_command_passes_on_a_small_level_two_algebra() {
    for cmd in [
        "tableaux",
        "gdim",
        "blocks",
        "idempotents",
        "relations",
        "basis",
        "gram",
        "decomp",
        "pairing",
        "appendix-z",
    ] {
        let out = run(&[cmd, "--n", "2", "--e", "2", "--multicharge", "2,0"]);
        assert_eq!(out.status.code(), Some(0), "{}: {}", cmd, String::from_utf8_lossy(&out.stderr));
    }
}
