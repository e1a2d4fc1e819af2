use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use iwforms_cli::demos::{family_scenario, source, DEMOS};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn iwforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwforms")).args(args).output().unwrap()
}

fn json_report(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["timing_ms"].is_u64());
    v["report"].clone()
}

fn scratch(src: &str) -> tempfile::NamedTempFile {
    let f = tempfile::Builder::new().suffix(".iw").tempfile().unwrap();
    std::fs::write(f.path(), src).unwrap();
    f
}

#[test]
fn sl2_point_is_integrable() {
    let p = fixture("sl2_point.iw");
    let out = iwforms(&["check", "--input", p.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(r["results"][0]["outcome"]["value"], Value::Bool(true));
}

#[test]
fn family_demo_is_contained() {
    let out = iwforms(&["demo", "paper-4.3", "--n", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(r["results"][0]["outcome"]["contained"], Value::Bool(true));
    assert_eq!(r["results"][0]["outcome"]["rnc"]["degree"], 3);
}

#[test]
fn stats_prints_codimension_and_degree() {
    let out = iwforms(&["stats", "--n", "3", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("codimension 28, degree 1430"), "{text}");
}

#[test]
fn every_demo_exits_zero() {
    for d in DEMOS {
        let out = iwforms(&["demo", d.name]);
        assert_eq!(out.status.code(), Some(0), "{}", d.name);
    }
    for n in ["1", "4"] {
        assert_eq!(iwforms(&["demo", "paper-4.3", "--n", n]).status.code(), Some(0));
    }
}

#[test]
fn shipped_family_matches_generator() {
    let shipped = std::fs::read_to_string(fixture("family_n2.iw")).unwrap();
    assert_eq!(shipped, family_scenario(2));
    assert_eq!(source("paper-4.3", None).unwrap(), shipped);
}

#[test]
fn golden_reports() {
    for name in ["sl2", "steiner_conic"] {
        let p = fixture(&format!("{name}.iw"));
        let out = iwforms(&["check", "--input", p.to_str().unwrap(), "--json"]);
        let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{name}.report.json"));
        let want: Value = serde_json::from_str(&std::fs::read_to_string(golden).unwrap()).unwrap();
        assert_eq!(json_report(&out), want, "{name}");
    }
}

#[test]
fn json_bodies_are_byte_identical() {
    let p = fixture("gv.iw");
    let body = |out: Output| {
        let text = String::from_utf8(out.stdout).unwrap();
        let cut = text.rfind("\"timing_ms\"").unwrap();
        text[..cut].to_string()
    };
    let first = body(iwforms(&["check", "--input", p.to_str().unwrap(), "--json"]));
    for _ in 0..3 {
        assert_eq!(body(iwforms(&["check", "--input", p.to_str().unwrap(), "--json"])), first);
    }
}

#[test]
fn exit_codes() {
    let refuted = scratch("ambient 3; a = x1*d(x0) + d(x2); is_integrable(a);");
    assert_eq!(iwforms(&["check", "--input", refuted.path().to_str().unwrap()]).status.code(), Some(1));

    let expected_false = scratch("ambient 3; a = x1*d(x0) + d(x2); is_integrable(a) == false;");
    assert_eq!(iwforms(&["check", "--input", expected_false.path().to_str().unwrap()]).status.code(), Some(0));

    let syntax = scratch("ambient 1;\nw = d(x0) + ;\n");
    let out = iwforms(&["check", "--input", syntax.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains(":2:13: syntax error"), "{err}");

    let failing = scratch("ambient 2; W = space(d(x0), d(x1)); veronese_web(W, d(x0));");
    assert_eq!(iwforms(&["check", "--input", failing.path().to_str().unwrap()]).status.code(), Some(2));

    assert_eq!(iwforms(&["check", "--input", "/nonexistent/file.iw"]).status.code(), Some(2));
    assert_eq!(iwforms(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(iwforms(&["demo", "no-such-demo"]).status.code(), Some(2));
    assert_eq!(iwforms(&["demo", "paper-4.1", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn subcommands_select_and_derive_queries() {
    let p = fixture("sl2.iw");
    let out = iwforms(&["lie", "--input", p.to_str().unwrap(), "--json"]);
    let r = json_report(&out);
    let kinds: Vec<_> = r["results"].as_array().unwrap().iter().map(|x| x["kind"].clone()).collect();
    assert_eq!(kinds, ["jacobi", "lie_iw", "integrable_at", "integrable_at"]);

    let f = fixture("family_n2.iw");
    let out = iwforms(&["rank", "--input", f.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json_report(&out);
    assert_eq!(r["results"].as_array().unwrap().len(), 1);
    assert_eq!(r["results"][0]["outcome"]["value"], 3);

    let out = iwforms(&["quadrics", "--input", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let out = iwforms(&["gv", "--input", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = iwforms(&["demo", "steiner-conic", "--json", "--output", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v["report"]["schema_version"], 1);
}
