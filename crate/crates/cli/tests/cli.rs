use std::path::PathBuf;
use std::process::{Command, Output};

use qbmg::{dgf, fixtures, recognize};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qbmg"))
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

#[test]
fn recognize_ex10_has_sinks() {
    let f = write_tmp("ex10.dgf", &dgf::write_digraph(&fixtures::ex10()));
    let o = run(&["recognize", f.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("is_qbmg: yes"), "{text}");
    assert!(text.contains("is_bmg: no"), "{text}");
}

#[test]
fn parse_error_exits_2_with_line() {
    let f = write_tmp("bad.dgf", "digraph\nv a 0\nv b 2\n");
    let o = run(&["recognize", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn missing_file_exits_2() {
    let o = run(&["recognize", "/nonexistent/x.dgf"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() >= 9);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    let v = json(&["verify"]);
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn explain_three_leaf_example() {
    let t = write_tmp("t.nwk", "((a=0,b=1),c=1);\n");
    let u = write_tmp("u.map", "c 0 4\n");
    let o = run(&["explain", "--tree", t.to_str().unwrap(), "--trunc", u.to_str().unwrap()]);
    assert!(o.status.success());
    let g = dgf::parse_digraph(&stdout(&o)).unwrap();
    let edges: Vec<_> = g
        .edges()
        .map(|(x, y)| (g.name(x).to_string(), g.name(y).to_string()))
        .collect();
    assert_eq!(
        edges,
        vec![("a".into(), "b".into()), ("b".into(), "a".into())]
    );
}

#[test]
fn trunc_requires_tree() {
    let u = write_tmp("u2.map", "c 0 4\n");
    let s = write_tmp("s.dgf", &dgf::write_digraph(&fixtures::p5a()));
    let o = run(&["explain", "--search", s.to_str().unwrap(), "--trunc", u.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn recognize_json_matches_library() {
    for (name, g) in fixtures::p5_classes().into_iter().chain([("ex10", fixtures::ex10())]) {
        let f = write_tmp(&format!("{name}.dgf"), &dgf::write_digraph(&g));
        let v = json(&["recognize", f.to_str().unwrap()]);
        let r = recognize(&g);
        assert_eq!(v["is_qbmg"], Value::Bool(r.is_qbmg), "{name}");
        assert_eq!(v["is_bmg"], Value::Bool(r.is_bmg), "{name}");
        assert_eq!(v["is_reciprocal"], Value::Bool(r.is_reciprocal), "{name}");
        assert_eq!(v["sinks"].as_array().unwrap().len(), r.sinks.len(), "{name}");
    }
}

#[test]
fn text_and_json_agree() {
    let f = write_tmp("ex7.dgf", &dgf::write_digraph(&fixtures::ex7()));
    let p = f.to_str().unwrap();

    let text = stdout(&run(&["recognize", p]));
    let v = json(&["recognize", p]);
    for key in ["is_qbmg", "is_bmg", "is_reciprocal"] {
        let yes = v[key].as_bool().unwrap();
        let line = format!("{key}: {}", if yes { "yes" } else { "no" });
        assert!(text.contains(&line), "{key}: {text}");
    }

    let text = stdout(&run(&["analyze", p]));
    let v = json(&["analyze", p]);
    for check in v["checks"].as_array().unwrap() {
        let label = check["check"].as_str().unwrap().to_uppercase();
        let free = check["free"].as_bool().unwrap();
        let line = text
            .lines()
            .find(|l| l.starts_with(&format!("{label}-free:")))
            .unwrap_or_else(|| panic!("{label} missing: {text}"));
        assert_eq!(line.contains(": yes"), free, "{line}");
    }
}

#[test]
fn emitted_dgf_round_trips() {
    let f = write_tmp("ex10b.dgf", &dgf::write_digraph(&fixtures::ex10()));
    let p = f.to_str().unwrap();
    let o = run(&["enumerate", "--underlying", "path:5"]);
    let text = stdout(&o);
    let blocks: Vec<&str> = text.split("\n\n").skip(1).collect();
    assert_eq!(blocks.len(), 6);
    for b in blocks {
        let block = format!("{}\n", b.trim_end());
        let g = dgf::parse_digraph(&block).unwrap();
        assert_eq!(dgf::write_digraph(&g), block);
    }
    let o = run(&["orient", p]);
    let text = stdout(&o);
    let start = text.find("digraph").unwrap();
    let end = text[start..].find("order:").map_or(text.len(), |i| start + i);
    let block = &text[start..end];
    let g = dgf::parse_digraph(block).unwrap();
    assert_eq!(dgf::write_digraph(&g), block);
}

#[test]
fn enumerate_counts() {
    for (template, classes) in [("path:4", 4), ("path:5", 6), ("cycle:4", 10), ("path:6", 0), ("cycle:6", 0)] {
        let v = json(&["enumerate", "--underlying", template]);
        assert_eq!(v["classes"], Value::from(classes), "{template}");
        assert_eq!(v["representatives"].as_array().unwrap().len(), classes);
    }
}

#[test]
fn output_independent_of_thread_cap() {
    let a = bin().args(["enumerate", "--all", "4"]).env("QBMG_THREADS", "1").output().unwrap();
    let b = bin().args(["enumerate", "--all", "4"]).env("QBMG_THREADS", "4").output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn search_finds_explanation() {
    let s = write_tmp("p5a.dgf", &dgf::write_digraph(&fixtures::p5a()));
    let v = json(&["explain", "--search", s.to_str().unwrap()]);
    assert!(v["tree"].is_string(), "{v}");
}
