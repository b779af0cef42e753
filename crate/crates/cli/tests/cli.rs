use std::process::{Command, Output};

use exturan::graph::{graph6_decode, is_isomorphic, turan_graph};
use serde_json::Value;

fn exturan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exturan")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn exsearch_finds_the_turan_graph() {
    let doc = json(&exturan(&["exsearch", "n=6", "T=K3", "H=K4"]));
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["best"], "8");
    let w = graph6_decode(rows[0]["witness"].as_str().unwrap()).unwrap();
    assert!(is_isomorphic(&w, &turan_graph(6, 3).unwrap()));
    assert_eq!(doc["config"]["T"], "K3");
    assert!(doc["version"].is_string());
}

#[test]
fn classify_and_turan_examples() {
    let doc = json(&exturan(&["classify", "r=2", "s=1", "t=3"]));
    assert_eq!(doc["rows"][0]["case"], "Boundary");
    let doc = json(&exturan(&["turan", "n=7", "r=3", "m=3"]));
    assert_eq!(doc["rows"][0]["count"], "12");
}

#[test]
fn big_counts_are_decimal_strings() {
    let doc = json(&exturan(&["turan", "n=64", "r=32", "m=32"]));
    assert_eq!(doc["rows"][0]["count"], Value::String("4294967296".into()));
    let doc = json(&exturan(&["f-eval", "r=3", "s=4", "t=7", "n=60", "a=40"]));
    let f = doc["rows"][0]["F"].as_str().unwrap();
    assert!(f.len() > 10 && f.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn rows_are_reproducible() {
    let args = ["exsearch", "n=7", "T=K3", "H=K5", "mode=local", "seed=7", "iterations=4"];
    let a = json(&exturan(&args));
    let b = json(&exturan(&args));
    assert_eq!(a["rows"], b["rows"]);
    let sweep = ["analytic-sweep", "quantity=H", "r=3", "s=2", "t=4", "from=0.5", "to=3", "steps=7", "--format", "csv"];
    assert_eq!(exturan(&sweep).stdout, exturan(&sweep).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(exturan(&["turan", "n=7", "r=3", "k=1"]).status.code(), Some(2));
    assert_eq!(exturan(&["turan", "n=7"]).status.code(), Some(2));
    assert_eq!(exturan(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(exturan(&["count", "G=K_{2,", "T=K3"]).status.code(), Some(2));
    assert_eq!(exturan(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(exturan(&["exsearch", "n=12", "T=K3", "H=K4"]).status.code(), Some(3));
    assert_eq!(exturan(&["biex", "n=11", "H=K_{2,2,2}"]).status.code(), Some(3));
}

#[test]
fn config_file_and_atomic_csv_output() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    let out = dir.path().join("sweep.csv");
    std::fs::write(
        &conf,
        "# F along a\ncommand = f-eval\nr = 2\ns = 1\nt = 2\nn = 6\nformat = csv\n",
    )
    .unwrap();
    let o = exturan(&["--config", conf.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,s,t,n,a,F");
    assert_eq!(lines.len(), 7);
    // Command-line values override the file.
    let o = exturan(&["--config", conf.to_str().unwrap(), "a=3"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 2, "no temporary files left behind");
}

#[test]
fn graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("c5.txt");
    std::fs::write(&el, "# a five-cycle\n5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let g6 = dir.path().join("k4.g6");
    std::fs::write(&g6, "C~\n").unwrap();
    let doc = json(&exturan(&["count", &format!("G=@{}", g6.display()), "T=K3"]));
    assert_eq!(doc["rows"][0]["copies"], "4");
    let doc = json(&exturan(&["count", &format!("G=@{}", el.display()), "T=P3"]));
    assert_eq!(doc["rows"][0]["copies"], "5");
}

#[test]
fn analytic_sweep_columns() {
    let o = exturan(&["analytic-sweep", "quantity=ratio", "r=2", "s=1", "t=2", "n=100", "from=40", "to=45", "--format", "csv"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("r,s,t,n_or_x,a_or_alpha,quantity,value\n"));
    assert_eq!(text.lines().count(), 7);
    assert_eq!(exturan(&["analytic-sweep", "quantity=zeta", "r=2", "s=1", "t=2"]).status.code(), Some(2));
    let doc = json(&exturan(&["analytic-sweep", "quantity=fpp", "r=2", "s=1", "t=4"]));
    assert_eq!(doc["rows"][0]["value"], "16");
}

#[test]
fn verify_single_suite() {
    let doc = json(&exturan(&["verify", "shift-identity"]));
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["rows"][0]["status"], "PASS");
}

#[test]
fn decomp_lists_members() {
    let doc = json(&exturan(&["decomp", "H=K_{2,2,2}"]));
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["edges"], "4");
    assert_eq!(rows[0]["sigma"], "2");
    let doc = json(&exturan(&["construct", "n=9", "H=K_{2,2,2}", "m=2"]));
    assert_eq!(doc["rows"][0]["free_exact"], "false");
}

#[test]
fn verify_all_passes() {
    let o = exturan(&["verify", "all", "--format", "csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(",PASS,")).count(), 12);
}
