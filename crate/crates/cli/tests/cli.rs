//! End-to-end runs of the binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use lirlab::families::triangle_chain_script;
use lirlab::io::{decode, encode_graph, plan_document, to_json, Decoded};

fn lirlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lirlab")).args(args).output().expect("binary runs")
}

fn lirlab_with_input(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lirlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lirlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn plan_of(o: &Output) -> (lirlab::Multigraph, lirlab::DoublingPlan) {
    match decode(&stdout(o)).unwrap() {
        Decoded::Plan(g, p) => (g, p),
        other => panic!("expected a plan, got {other:?}"),
    }
}

#[test]
fn cube_of_c11_needs_no_doubling() {
    let o = lirlab(&["color", "powcycle:11,3"]);
    assert!(o.status.success());
    let (g, p) = plan_of(&o);
    assert_eq!(p.count(), 0);
    assert!(p.is_valid(&g));
    let v = lirlab_with_input(&["verify"], &o.stdout);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("\"ok\":true"));
}

#[test]
fn k6_needs_two_doublings() {
    let o = lirlab(&["solve", "--dlir", "complete:6", "--max-doublings", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["status"], "found");
    let cert = serde_json::to_string(&v["certificate"]).unwrap();
    let Decoded::Plan(g, p) = decode(&cert).unwrap() else { panic!("certificate is a plan") };
    assert!(p.is_valid(&g) && p.count() == 2);
}

#[test]
fn bowtie_lir_is_four() {
    let o = lirlab(&["solve", "bowtie"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 4);
}

#[test]
fn tampered_plan_is_rejected() {
    let o = lirlab(&["color", "powcycle:11,3"]);
    let mut doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let first = &mut doc["coloring"][0];
    *first = if first == "B" { "R".into() } else { "B".into() };
    let v = lirlab_with_input(&["verify", "--format", "table"], doc.to_string().as_bytes());
    assert_eq!(v.status.code(), Some(1));
    let text = stdout(&v);
    assert!(text.starts_with("ok: false"));
    assert!(text.contains("bundle "), "{text}");
    assert!(String::from_utf8_lossy(&v.stderr).contains("bundles"));
}

#[test]
fn color_then_verify_for_every_family() {
    let script = scratch("cactus.json");
    std::fs::write(&script, triangle_chain_script(3).unwrap().to_json()).unwrap();
    let cactus = format!("taustar:@{}", script.display());
    let specs = [
        "path:7",
        "path:12",
        "cycle:9",
        "complete:7",
        "complete:11",
        "kpartite:2,3",
        "kpartite:1,2,2,4",
        "powcycle:14,3",
        "split:8;1",
        "split:5;2,1",
        "bowtie",
        "almostirr:6,connected",
        "trianglechain:2",
        "eighth:2",
        "eighth:3",
        cactus.as_str(),
    ];
    for spec in specs {
        let o = lirlab(&["color", spec]);
        assert!(o.status.success(), "{spec}: {}", String::from_utf8_lossy(&o.stderr));
        let (g, p) = plan_of(&o);
        assert!(p.is_valid(&g), "{spec}");
        // the output decodes and encodes back to the same plan
        let again = to_json(&plan_document(&g, &p).unwrap());
        assert_eq!(decode(&again).unwrap(), Decoded::Plan(g, p), "{spec}");
        let v = lirlab_with_input(&["verify"], &o.stdout);
        assert_eq!(v.status.code(), Some(0), "{spec}");
    }
}

#[test]
fn cactus_script_must_parse() {
    let o = lirlab(&["color", "taustar:@/nonexistent/script.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generated_graphs_round_trip() {
    for spec in ["path:5", "kpartite:2,2,3", "split:4;2", "eighth:2"] {
        let o = lirlab(&["generate", spec]);
        assert!(o.status.success());
        let text = stdout(&o);
        let Decoded::Graph(g) = decode(&text).unwrap() else { panic!("graph document") };
        assert_eq!(encode_graph(&g), text.trim_end());
        let want = lirlab::families::generate(&spec.parse().unwrap()).unwrap();
        assert_eq!(g, want);
    }
}

#[test]
fn graph_files_use_the_tree_colorer_or_the_solver() {
    let tree = scratch("tree.json");
    std::fs::write(&tree, r#"{"n":5,"edges":[[0,1,1],[1,2,1],[1,3,1],[3,4,1]]}"#).unwrap();
    let o = lirlab(&["color", &format!("@{}", tree.display())]);
    assert!(o.status.success());
    let (g, p) = plan_of(&o);
    assert!(p.is_valid(&g) && p.count() <= 1);
    let o = lirlab_with_input(&["color", "@-"], br#"{"n":4,"edges":[[0,1,1],[1,2,1],[2,0,1],[2,3,1]]}"#);
    assert!(o.status.success());
    let (g, p) = plan_of(&o);
    assert!(p.is_valid(&g));
}

#[test]
fn dot_export_draws_doubled_edges_twice() {
    let o = lirlab(&["color", "complete:6"]);
    let (g, p) = plan_of(&o);
    let dot = lirlab_with_input(&["export"], &o.stdout);
    assert!(dot.status.success());
    let text = stdout(&dot);
    assert!(text.starts_with("graph G {"));
    assert_eq!(text.matches(" -- ").count(), g.bundle_count() + p.count());
    let direct = lirlab(&["color", "complete:6", "--format", "dot"]);
    assert_eq!(stdout(&direct), text);
}

#[test]
fn export_json_round_trips() {
    let o = lirlab(&["color", "split:6;1"]);
    let j = lirlab_with_input(&["export", "--format", "json"], &o.stdout);
    assert_eq!(decode(&stdout(&j)).unwrap(), decode(&stdout(&o)).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(lirlab(&["color", "bogus:3"]).status.code(), Some(2));
    assert_eq!(lirlab(&["color", "cycle:3"]).status.code(), Some(2));
    assert_eq!(lirlab(&["solve", "path:4", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(lirlab_with_input(&["verify"], b"not json").status.code(), Some(2));
    assert_eq!(lirlab_with_input(&["verify"], br#"{"n":2,"edges":[[0,1,1]]}"#).status.code(), Some(2));
    let o = lirlab(&["solve", "--dlir", "complete:9", "--max-doublings", "2", "--budget-nodes", "1000"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "budget_exceeded");
}

#[test]
fn sweeps_report_pass_lines() {
    let o = lirlab(&["sweep", "fixture-labels"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("fixture-labels") && stdout(&o).contains("PASS"));
    let list = stdout(&lirlab(&["sweep", "list"]));
    for name in ["thm-paths", "thm-cycles", "thm-kn", "thm-powcycle", "lemma-a6-validator"] {
        assert!(list.contains(name));
    }
    assert_eq!(lirlab(&["sweep", "nope"]).status.code(), Some(2));
    let o = lirlab(&["sweep", "bowtie", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["pass"], true);
}

#[test]
fn fixture_directory_overrides_the_builtin_copies() {
    assert_eq!(lirlab(&["--fixtures", "/nonexistent", "sweep", "list"]).status.code(), Some(2));
    let dir = scratch("fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let o = lirlab(&["--fixtures", dir.to_str().unwrap(), "color", "powcycle:11,3"]);
    // the cube of C11 reads its stored coloring, which is missing here
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn checkpointed_search_resumes() {
    let ck = scratch("k6");
    let args = ["solve", "--dlir", "complete:6", "--max-doublings", "2", "--checkpoint", ck.to_str().unwrap()];
    let first = lirlab(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(v["value"], 2);
    assert!(PathBuf::from(format!("{}.1.0", ck.display())).exists());
    let again: serde_json::Value = serde_json::from_str(&stdout(&lirlab(&args))).unwrap();
    assert_eq!(again["value"], 2);
}
