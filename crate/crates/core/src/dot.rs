//! Graphviz output. Node ids are the state names, so output is stable.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::dfa::Dfa;
use crate::lasso::LassoAutomaton;
use crate::word::{Alphabet, State};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Parallel edges merged into one edge labelled `a,b`, in source order.
fn edges(ab: &Alphabet, rows: usize, table: &[State]) -> Vec<(State, State, String)> {
    let k = ab.len();
    (0..rows)
        .flat_map(|s| {
            let mut by_target: BTreeMap<State, Vec<&str>> = BTreeMap::new();
            for a in 0..k {
                by_target.entry(table[s * k + a]).or_default().push(ab.name(a));
            }
            by_target.into_iter().map(move |(t, ls)| (s, t, ls.join(",")))
        })
        .collect()
}

pub fn dfa_dot(dfa: &Dfa, names: &[String], initial: Option<State>, accepting: Option<&[bool]>) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for (s, name) in names.iter().enumerate() {
        let shape = if accepting.is_some_and(|c| c[s]) { "doublecircle" } else { "circle" };
        writeln!(out, "  {} [shape={shape}];", quote(name)).unwrap();
    }
    if let Some(i) = initial {
        writeln!(out, "  __start [shape=point];\n  __start -> {};", quote(&names[i])).unwrap();
    }
    for (s, t, label) in edges(dfa.alphabet(), dfa.state_count(), dfa.table()) {
        writeln!(out, "  {} -> {} [label={}];", quote(&names[s]), quote(&names[t]), quote(&label)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Both sorts as clusters; entering edges are dashed and accepting loop
/// states are double-circled. Ids are prefixed by sort so names may repeat.
pub fn lasso_dot(la: &LassoAutomaton, names1: &[String], names2: &[String]) -> String {
    let ab = la.alphabet();
    let id1 = |s: State| quote(&format!("1:{}", names1[s]));
    let id2 = |s: State| quote(&format!("2:{}", names2[s]));
    let (d1, d2, d3) = la.tables();
    let mut out = String::from("digraph lasso {\n  rankdir=LR;\n  subgraph cluster_spoke {\n    label=\"X1\";\n");
    for (s, name) in names1.iter().enumerate() {
        writeln!(out, "    {} [label={}, shape=circle];", id1(s), quote(name)).unwrap();
    }
    out.push_str("  }\n  subgraph cluster_loop {\n    label=\"X2\";\n");
    for (s, name) in names2.iter().enumerate() {
        let shape = if la.is_accepting(s) { "doublecircle" } else { "circle" };
        writeln!(out, "    {} [label={}, shape={shape}];", id2(s), quote(name)).unwrap();
    }
    out.push_str("  }\n");
    if let Some(i) = la.initial() {
        writeln!(out, "  __start [shape=point];\n  __start -> {};", id1(i)).unwrap();
    }
    for (s, t, l) in edges(ab, la.spoke_count(), d1) {
        writeln!(out, "  {} -> {} [label={}];", id1(s), id1(t), quote(&l)).unwrap();
    }
    for (s, t, l) in edges(ab, la.spoke_count(), d2) {
        writeln!(out, "  {} -> {} [label={}, style=dashed];", id1(s), id2(t), quote(&l)).unwrap();
    }
    for (s, t, l) in edges(ab, la.loop_count(), d3) {
        writeln!(out, "  {} -> {} [label={}];", id2(s), id2(t), quote(&l)).unwrap();
    }
    out.push_str("}\n");
    out
}
