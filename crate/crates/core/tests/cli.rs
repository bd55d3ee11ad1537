use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn aut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aut")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("UTF-8 output")
}

fn scratch(name: &str, contents: &str) -> String {
    let p = std::env::temp_dir().join(format!("aut-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p.display().to_string()
}

#[test]
fn nuc_writes_the_three_state_dot() {
    let dot = std::env::temp_dir().join(format!("aut-cli-{}-nuc.dot", std::process::id()));
    let o = aut(&["nuc", &data("two_state.aut"), "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    std::fs::remove_file(&dot).unwrap();
    assert_eq!(text.matches("shape=circle").count() + text.matches("shape=doublecircle").count(), 3);
    assert!(text.contains("\"[ε]\" [shape=doublecircle];"));
    assert!(text.contains("\"[b]\" [shape=doublecircle];"));
    assert!(text.contains("\"[a]\" -> \"[a]\" [label=\"a\"];"));
}

#[test]
fn one_state_monoid_has_one_class() {
    let f = scratch("one.aut", "type: dfa\nalphabet: a b\nstates: s\ninitial: s\ntrans: s a s\ntrans: s b s\n");
    let o = aut(&["tmonoid", &f]);
    std::fs::remove_file(&f).unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"], serde_json::json!(["[ε]"]));
    assert_eq!(v["accepted"], serde_json::Value::Null);
}

#[test]
fn laws_on_the_two_state_automaton_all_pass() {
    let o = aut(&["laws", &data("two_state.aut")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["status"] == "pass"), "{reports:?}");
}

#[test]
fn law_failure_exits_one() {
    let o = aut(&["laws", &data("spoke_parity.aut")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"fail\""));
}

#[test]
fn parse_errors_exit_two_with_a_line_number() {
    let f = scratch("bad.aut", "type: dfa\nalphabet: a\nstates: s\n# comment\ntrans: s a t\n");
    let o = aut(&["reach", &f]);
    std::fs::remove_file(&f).unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
}

#[test]
fn size_guard_exits_three() {
    let o = aut(&["mupl", &data("two_state.aut"), "--max-classes", "2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn contract_violations_exit_four() {
    let f = scratch("noacc.aut", "type: dfa\nalphabet: a\nstates: s\ninitial: s\ntrans: s a s\n");
    let o = aut(&["mupl", &f]);
    std::fs::remove_file(&f).unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(aut(&["omega", "adm", &data("two_state.aut")]).status.code(), Some(4));
}

#[test]
fn gamma_command() {
    assert_eq!(stdout(&aut(&["omega", "gamma", ":ab", "a:ba"])), "true\n");
    assert_eq!(stdout(&aut(&["omega", "gamma", ":ab", ":ba"])), "false\n");
}

#[test]
fn reach_round_trips_the_file() {
    let path = data("first_letter.aut");
    let o = aut(&["reach", &path]);
    let original = std::fs::read_to_string(&path).unwrap();
    let body: String = original.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert_eq!(stdout(&o), body);
}

#[test]
fn lasso_dot_double_circles_accepting_loop_states() {
    let dot = std::env::temp_dir().join(format!("aut-cli-{}-lasso.dot", std::process::id()));
    let o = aut(&["lasso", "nuc", &data("first_letter.aut"), "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    std::fs::remove_file(&dot).unwrap();
    assert!(text.contains("\"2:[(ε,a)]\" [label=\"[(ε,a)]\", shape=doublecircle];"));
    assert!(text.contains("\"2:[(ε,b)]\" [label=\"[(ε,b)]\", shape=circle];"));
}

#[test]
fn atoms_reports_the_simplified_formula() {
    let o = aut(&["atoms", &data("two_state.aut"), "--class", "ε"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("simplified: L(x,{x}) ∩ L(y,{y})\n"));
}
