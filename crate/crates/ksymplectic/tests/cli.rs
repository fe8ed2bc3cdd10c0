//! Black-box tests of the ksymp binary: exit codes, document piping, and
//! the report surface.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_ksymp");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn catalog_list_and_show() {
    let o = run(&["catalog", "list"]);
    assert!(o.status.success());
    let listing = stdout(&o);
    let names: Vec<&str> = listing.lines().collect();
    assert_eq!(names.len(), 17);
    assert_eq!(names[0], "su2");

    let o = run(&["catalog", "list", "--dim", "3"]);
    assert_eq!(stdout(&o).lines().count(), 2);

    let o = run(&["catalog", "show", "sl2R"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"format_version\": 1"));

    let o = run(&["catalog", "show", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_exit_codes() {
    let doc = stdout(&run(&["catalog", "show", "so31"]));
    let o = run_stdin(&["check", "-"], &doc);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certificate k=2: valid"));

    // corrupt a structure constant: Jacobi breaks, semantic exit 1
    let broken = doc.replace("\"3\": \"1\"", "\"3\": \"2\"");
    assert_ne!(doc, broken);
    let o = run_stdin(&["check", "-"], &broken);
    assert_eq!(o.status.code(), Some(1));

    // invalid JSON: parse exit 2
    let o = run_stdin(&["check", "-"], "{ not json");
    assert_eq!(o.status.code(), Some(2));

    // bad flags: usage exit 2 (clap default)
    let o = run(&["check"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_rejects_bad_certificate() {
    let doc = stdout(&run(&["catalog", "show", "sl2R"]));
    // zero out a theta entry: the family becomes jointly degenerate
    let broken = doc.replace("\"value\": \"-1\"", "\"value\": \"0\"");
    assert_ne!(doc, broken);
    let o = run_stdin(&["check", "-"], &broken);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INVALID"));
}

#[test]
fn construct_pipeline() {
    let o = run(&["construct", "tstar", "--entry", "su2"]);
    assert!(o.status.success());
    let tstar = stdout(&o);

    let o = run_stdin(&["h2", "-"], &tstar);
    assert!(stdout(&o).starts_with("dim H2 = 0"));

    let o = run(&["construct", "oscillator", "--lambdas", "1,2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"dim\": 6"));

    let o = run(&["construct", "oscillator", "--lambdas", "2,1"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["construct", "sln", "--n", "3"]);
    let sln = stdout(&o);
    let o = run_stdin(&["check", "-"], &sln);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certificate k=3: valid"));

    let o = run(&["construct", "abelian-ksym", "--n", "2", "--k", "2"]);
    let o = run_stdin(&["check", "-"], &stdout(&o));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn search_and_obstructions() {
    let sl2 = stdout(&run(&["catalog", "show", "sl2R"]));
    let o = run_stdin(&["search", "-", "-k", "2"], &sl2);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("found k=2 certificate"));

    let su2 = stdout(&run(&["catalog", "show", "su2"]));
    let o = run_stdin(&["search", "-", "-k", "2"], &su2);
    assert!(stdout(&o).contains("no k=2 structure exists"));
    let o = run_stdin(&["obstructions", "-"], &su2);
    assert!(stdout(&o).contains("R6 [rules out all k]"));

    // infeasible dimension
    let o = run_stdin(&["search", "-", "-k", "4"], &sl2);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn admissible_derivations_surface() {
    let tsu = stdout(&run(&["construct", "tstar", "--entry", "su2"]));
    let o = run_stdin(&["derivations", "-", "--admissible", "1,4,5,6"], &tsu);
    assert!(o.status.success());
    assert!(stdout(&o).contains("common kernel: nonzero"));
}

#[test]
fn report_matches_golden() {
    let o = run(&["catalog", "report"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), include_str!("data/classification_report.txt"));

    let o = run(&["catalog", "report", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["format_version"], 1);
    assert_eq!(
        v["rows"].as_array().unwrap().len(),
        include_str!("data/classification_report.txt").lines().count()
    );
}
