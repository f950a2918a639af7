use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        path
    }
}

fn ehrhart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(args)
        .env_remove("EHRHART_MAX_SCAN")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const SEGMENT: &str = r#"{"vertices": [["1/3"], ["2/3"]]}"#;

#[test]
fn segment_hstar_all_methods() {
    let ws = Workspace::new();
    let seg = ws.file("seg.json", SEGMENT);
    let out = ehrhart(&["hstar", seg.to_str().unwrap(), "--method", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    for method in ["count", "betke_mcmullen", "stapledon"] {
        assert!(text.contains(&format!("{method}: [1, 0, 1, 0, 1, 0]")), "{text}");
    }
}

#[test]
fn segment_json_round_trips() {
    let ws = Workspace::new();
    let seg = ws.file("seg.json", SEGMENT);
    let out = ehrhart(&["hstar", seg.to_str().unwrap(), "--method", "all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let docs: Vec<ehrhart_core::io::ResultDocument> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(docs.len(), 3);
    for d in &docs {
        let v: Vec<i64> = d.hstar.iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert_eq!(v, [1, 0, 1, 0, 1, 0]);
        assert_eq!(d.ell, 2);
        assert!(d.inequalities.passed);
    }
    let again = serde_json::to_value(&docs).unwrap();
    assert_eq!(again, serde_json::from_slice::<serde_json::Value>(&out.stdout).unwrap());
}

#[test]
fn hexagon_even_index_is_rejected() {
    let out = ehrhart(&["hexagon", "--index", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no L-reflexive polygon of even index"));
}

#[test]
fn hexagon_json_feeds_back_in() {
    let ws = Workspace::new();
    let out = ehrhart(&["hexagon", "--index", "1", "--dual", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let path = ws.file("hex.json", &stdout(&out));
    let out = ehrhart(&["hstar", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("count: [1, 4, 1]"));
}

#[test]
fn box_polynomial_of_two_generators() {
    let ws = Workspace::new();
    let g = ws.file("gens.json", r#"{"generators": [["1","3"],["2","3"]]}"#);
    let out = ehrhart(&["boxpoly", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "z^2 + z^4");
}

#[test]
fn malformed_input_exits_1() {
    let ws = Workspace::new();
    for (name, body) in [
        ("bad1.json", r#"{"vertices": [["1/0"]]}"#),
        ("bad2.json", "not json"),
        ("bad3.json", r#"{"vertices": [["1"], ["1", "2"]]}"#),
    ] {
        let f = ws.file(name, body);
        let out = ehrhart(&["hstar", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{name}: {}", stderr(&out));
    }
    let out = ehrhart(&["hstar", "/nonexistent/p.json"]);
    assert_eq!(out.status.code(), Some(1));
    let f = ws.file("seg.json", SEGMENT);
    let out = ehrhart(&["hstar", f.to_str().unwrap(), "--unknown-flag"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ehrhart(&["hstar", f.to_str().unwrap(), "--ray", "1;2;3", "--method", "stapledon"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn preconditions_exit_2() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", r#"{"vertices": [["0","0"],["1","0"],["0","1"]]}"#);
    let out = ehrhart(&["dual", tri.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("origin is not in the interior"));

    let seg = ws.file("seg.json", SEGMENT);
    let out = ehrhart(&["hstar", seg.to_str().unwrap(), "--q", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ehrhart(&["hstar", seg.to_str().unwrap(), "--method", "stapledon", "--ray", "0;1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_cap_exits_4() {
    let ws = Workspace::new();
    let seg = ws.file("seg.json", SEGMENT);
    let out = Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(["hstar", seg.to_str().unwrap(), "--method", "count"])
        .env("EHRHART_MAX_SCAN", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("exceeds the limit 1"));
}

#[test]
fn check_passes_on_examples() {
    let ws = Workspace::new();
    for (name, body) in [
        ("seg.json", SEGMENT),
        ("sq.json", r#"{"vertices": [["-1","-1"],["1","-1"],["-1","1"],["1","1"]]}"#),
        ("tri.json", r#"{"vertices": [["0","0"],["1/2","0"],["0","1/3"]]}"#),
    ] {
        let f = ws.file(name, body);
        for seed in ["1", "2"] {
            let out = ehrhart(&["check", f.to_str().unwrap(), "--seed", seed]);
            assert_eq!(out.status.code(), Some(0), "{name}: {}{}", stdout(&out), stderr(&out));
            assert!(!stdout(&out).contains("FAIL"));
        }
    }
}

#[test]
fn other_subcommands() {
    let ws = Workspace::new();
    let sq = ws.file("sq.json", r#"{"vertices": [["-1","-1"],["1","-1"],["-1","1"],["1","1"]]}"#);
    let sq = sq.to_str().unwrap();

    let out = ehrhart(&["count", sq, "--t", "2"]);
    assert_eq!(stdout(&out).trim(), "25");
    let out = ehrhart(&["count", sq, "--t", "2", "--interior"]);
    assert_eq!(stdout(&out).trim(), "9");
    let out = ehrhart(&["reflexive", sq]);
    assert_eq!(stdout(&out).trim(), "1-reflexive");

    let out = ehrhart(&["dual", sq, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["is_dual_lattice"], true);
    assert_eq!(v["b_is_zero"], true);
    assert_eq!(v["dual"]["vertices"].as_array().unwrap().len(), 4);

    let out = ehrhart(&["quasi", sq, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["period"], 1);
    assert_eq!(v["constituents"][0], serde_json::json!(["1", "4", "4"]));

    let out = ehrhart(&["ineq", sq]);
    assert_eq!(out.status.code(), Some(0));
    let out = ehrhart(&["ab", sq]);
    assert!(stdout(&out).contains("b = 0"));
}

#[test]
fn output_is_deterministic() {
    let ws = Workspace::new();
    let p = ws.file("p.json", r#"{"vertices": [["0","0"],["3/2","1/2"],["1/2","2"],["-1/3","1"]]}"#);
    let p = p.to_str().unwrap();
    let a = ehrhart(&["hstar", p, "--format", "json", "--seed", "9"]);
    let b = ehrhart(&["hstar", p, "--format", "json", "--seed", "9"]);
    let c = ehrhart(&["hstar", p, "--format", "json"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}
