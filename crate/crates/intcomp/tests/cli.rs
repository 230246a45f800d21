use std::path::{Path, PathBuf};
use std::process::Command;

use intcomp::cli::{run, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};
use intcomp::io::{read_graph, write_edge_list};
use intcomp_core::graph::named;
use intcomp_core::{Graph, IntervalModel};
use serde_json::Value;

fn write(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, write_edge_list(g)).unwrap();
    p
}

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut all = vec!["intcomp"];
    all.extend_from_slice(args);
    let code = run(all, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s.lines().last().unwrap()).unwrap()
}

#[test]
fn solve_c4() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.el", &named::cycle(4));
    let (code, out, _) = call(&["solve", "--input", c4.to_str().unwrap(), "--k", "1"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["opt"], 1);
    assert_eq!(v["canonical"], serde_json::json!([[0, 2]]));
    assert_eq!(v["schema_version"], 1);

    let (code, out, _) = call(&["solve", "--input", c4.to_str().unwrap(), "--k", "0"]);
    assert_eq!(code, EXIT_INFEASIBLE);
    assert_eq!(json(&out)["status"], "over_budget");

    let (code, out, _) = call(&["solve", "--input", c4.to_str().unwrap(), "--k", "2", "--solver", "branching"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json(&out)["opt"], 1);

    let (code, out, _) = call(&["solve", "--input", c4.to_str().unwrap(), "--k", "2", "--all-minimal"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json(&out)["all_minimal"], serde_json::json!([[[0, 2]], [[1, 3]]]));
}

#[test]
fn recognize_p4_and_c4() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.el", &named::path(4));
    let (code, out, _) = call(&["--format", "text", "recognize", "--input", p4.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "0+ 1+ 0- 2+ 1- 3+ 3- 2-");
    // The other drawing that ends with the tail of the path is also a model
    // but has a larger key: end(3) comes before end(2) in the tuple.
    let ours = IntervalModel::parse_line(out.trim()).unwrap();
    let other = IntervalModel::parse_line("0+ 1+ 0- 2+ 1- 3+ 2- 3-").unwrap();
    assert_eq!(other.graph(), named::path(4));
    assert!(ours.canonical_key() < other.canonical_key());
    let c4 = write(dir.path(), "c4.el", &named::cycle(4));
    let (code, out, _) = call(&["recognize", "--input", c4.to_str().unwrap()]);
    assert_eq!(code, EXIT_INFEASIBLE);
    assert_eq!(json(&out)["witness"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn graph6_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("k23.g6");
    std::fs::write(&p, intcomp::io::to_graph6(&named::complete_bipartite(2, 3))).unwrap();
    let (code, out, _) = call(&["canon", "--input", p.to_str().unwrap(), "--k", "2"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["opt"], 1);
    assert_eq!(v["canonical"], serde_json::json!([[0, 1]]));
    assert!(v["model"].as_str().unwrap().starts_with("0+ 1+"));
}

#[test]
fn reduce_star() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "star.el", &named::star(6));
    let (code, out, _) = call(&["reduce", "--input", s.to_str().unwrap(), "--k", "0"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["status"], "reduced");
    assert_eq!(v["n"], 3);
    assert_eq!(v["trace"].as_array().unwrap().len(), 4);
}

#[test]
fn dp_check_c4() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.el", &named::cycle(4));
    let (code, out, _) = call(&["dp-check", "--input", c4.to_str().unwrap(), "--k", "1", "--json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v = json(&out);
    assert_eq!(v["ok"], true);
    assert_eq!(v["canonical"], v["reconstructed"]);
    let (code, _, _) = call(&["dp-check", "--input", c4.to_str().unwrap(), "--k", "0"]);
    assert_eq!(code, EXIT_INFEASIBLE);
}

#[test]
fn verify_and_suite() {
    let (code, out, _) = call(&["verify", "--lemma", "sections", "--nmax", "4"]);
    assert_eq!(code, EXIT_OK);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("checked=") && last.contains("violated=0"), "{out}");

    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let (code, _, _) = call(&["suite", "--name", "fixtures", "--json", report.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["report"]["tally"]["violated"], 0);
    assert_eq!(v["report"]["suite"], "fixtures");
}

#[test]
fn gen_writes_readable_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("corpus");
    let (code, _, _) = call(&["gen", "--kind", "exhaustive", "--n", "4", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let mut files: Vec<_> = std::fs::read_dir(&out_dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 6);
    for f in &files {
        assert_eq!(read_graph(f).unwrap().n(), 4);
    }

    // Same seed, same files.
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for d in [&a, &b] {
        let (code, _, _) = call(&["--seed", "7", "gen", "--kind", "random", "--n", "6", "--count", "3", "--out", d.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
    }
    for i in 0..3 {
        let name = format!("g{i:05}.el");
        assert_eq!(std::fs::read(a.join(&name)).unwrap(), std::fs::read(b.join(&name)).unwrap());
    }
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["solve", "--bogus"]).0, EXIT_USAGE);
    assert_eq!(call(&[]).0, EXIT_USAGE);
    assert_eq!(call(&["solve", "--input", "/nonexistent.el", "--k", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["--vertex-cap", "0", "solve", "--input", "x", "--k", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn schema_is_versioned() {
    let (code, out, _) = call(&["--schema"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["version"], 1);
    for cmd in ["solve", "reduce", "canon", "recognize", "verify", "dp-check", "gen", "suite"] {
        assert!(v["commands"].get(cmd).is_some(), "{cmd}");
    }
}

#[test]
fn env_caps_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.el", &named::cycle(5));
    let bin = env!("CARGO_BIN_EXE_intcomp");
    let status = |extra: &[&str], env: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(extra).args(["solve", "--input", c5.to_str().unwrap(), "--k", "2"]);
        cmd.env_remove("INTCOMP_ORACLE_CAP");
        if let Some(v) = env {
            cmd.env("INTCOMP_ORACLE_CAP", v);
        }
        cmd.output().unwrap().status.code().unwrap()
    };
    assert_eq!(status(&[], None), EXIT_OK);
    assert_eq!(status(&[], Some("3")), EXIT_USAGE);
    assert_eq!(status(&["--oracle-cap", "1000"], Some("3")), EXIT_OK);
}
