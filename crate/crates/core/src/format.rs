//! The line-oriented automaton text format.
//!
//! ```text
//! # the two-state example
//! type: dfa
//! alphabet: a b
//! states: x y
//! initial: x
//! accepting: x
//! trans: x a y
//! trans: x b x
//! trans: y a y
//! trans: y b x
//! ```
//!
//! Lasso files declare `states1:` and `states2:` and use `trans1:` (spoke),
//! `trans2:` (entering the loop) and `trans3:` (inside the loop). Congruence
//! files declare `classes:` and `epsilon:` and give the right action with
//! `trans:`. Names must be declared before use; every table must be total.

use std::collections::HashMap;

use crate::dfa::{AcceptingDfa, Dfa, PointedDfa};
use crate::error::{Error, Result};
use crate::lasso::{LassoAutomaton, LassoCongruenceRep};
use crate::monoid::{verify_congruence, CongruenceRep, RawCongruence};
use crate::word::{Alphabet, State};

/// A DFA with optional initial state and accepting set, and state names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaFile {
    pub dfa: Dfa,
    pub names: Vec<String>,
    pub initial: Option<State>,
    pub accepting: Option<Vec<bool>>,
}

impl DfaFile {
    pub fn pointed(&self) -> Result<PointedDfa> {
        self.dfa
            .clone()
            .pointed(self.initial.ok_or(Error::MissingInitial("this command"))?)
    }

    pub fn accepting_dfa(&self) -> Result<AcceptingDfa> {
        let c = self.accepting.clone().ok_or(Error::MissingAccepting("this command"))?;
        AcceptingDfa::new(self.dfa.clone(), c, self.initial)
    }
}

/// A right-Cayley table with class names, not yet verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceFile {
    pub raw: RawCongruence,
    pub names: Vec<String>,
}

impl CongruenceFile {
    pub fn verify(&self) -> Result<CongruenceRep> {
        verify_congruence(&self.raw)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoFile {
    pub automaton: LassoAutomaton,
    pub names1: Vec<String>,
    pub names2: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomatonFile {
    Dfa(DfaFile),
    Congruence(CongruenceFile),
    Lasso(LassoFile),
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

#[derive(Default)]
struct Names {
    list: Vec<String>,
    index: HashMap<String, usize>,
    line: usize,
}

impl Names {
    fn declare(&mut self, line: usize, tokens: &[&str], what: &str) -> Result<()> {
        if self.line != 0 {
            return Err(err(line, format!("{what} declared twice")));
        }
        if tokens.is_empty() {
            return Err(err(line, format!("{what} must name at least one state")));
        }
        self.line = line;
        for &t in tokens {
            if self.index.insert(t.to_string(), self.list.len()).is_some() {
                return Err(err(line, format!("duplicate name {t:?}")));
            }
            self.list.push(t.to_string());
        }
        Ok(())
    }

    fn get(&self, line: usize, name: &str, what: &str) -> Result<usize> {
        if self.line == 0 {
            return Err(err(line, format!("{what} used before it is declared")));
        }
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| err(line, format!("unknown {what} {name:?}")))
    }
}

/// A transition table filled in line by line.
struct Table {
    cells: Vec<Option<State>>,
    key: &'static str,
}

impl Table {
    fn new(key: &'static str) -> Self {
        Table { cells: Vec::new(), key }
    }

    fn set(&mut self, line: usize, rows: usize, k: usize, src: usize, a: usize, dst: usize) -> Result<()> {
        if self.cells.is_empty() {
            self.cells = vec![None; rows * k];
        }
        let cell = &mut self.cells[src * k + a];
        match *cell {
            Some(old) if old != dst => Err(err(line, format!("conflicting {} transition", self.key))),
            _ => {
                *cell = Some(dst);
                Ok(())
            }
        }
    }

    fn finish(self, rows: usize, k: usize, line: usize, src: &[String], ab: &Alphabet) -> Result<Vec<State>> {
        let cells = if self.cells.is_empty() { vec![None; rows * k] } else { self.cells };
        cells
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| {
                    err(
                        line,
                        format!("{} is not total: missing {} {}", self.key, src[i / k], ab.name(i % k)),
                    )
                })
            })
            .collect()
    }
}

/// Parses an automaton file. Errors carry 1-based line numbers; totality
/// failures point at the line declaring the source states.
pub fn parse(text: &str) -> Result<AutomatonFile> {
    let mut kind: Option<(usize, String)> = None;
    let mut alphabet: Option<Alphabet> = None;
    let (mut s0, mut s1, mut s2) = (Names::default(), Names::default(), Names::default());
    let mut initial: Option<(usize, String)> = None;
    let mut accepting: Option<(usize, Vec<String>)> = None;
    let mut trans: Vec<(usize, &'static str, Vec<String>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| err(line, "expected `key: value`"))?;
        let tokens: Vec<&str> = value.split_whitespace().collect();
        match key.trim() {
            "type" => {
                if kind.is_some() {
                    return Err(err(line, "type declared twice"));
                }
                match tokens.as_slice() {
                    [t @ ("dfa" | "congruence" | "lasso")] => kind = Some((line, t.to_string())),
                    _ => return Err(err(line, "type must be dfa, congruence or lasso")),
                }
            }
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err(line, "alphabet declared twice"));
                }
                alphabet = Some(Alphabet::new(tokens.iter().copied()).map_err(|e| err(line, e.to_string()))?);
            }
            "states" | "classes" => s0.declare(line, &tokens, key.trim())?,
            "states1" => s1.declare(line, &tokens, "states1")?,
            "states2" => s2.declare(line, &tokens, "states2")?,
            k @ ("initial" | "epsilon") => {
                if initial.is_some() {
                    return Err(err(line, format!("{k} declared twice")));
                }
                match tokens.as_slice() {
                    [s] => initial = Some((line, s.to_string())),
                    _ => return Err(err(line, format!("{k} takes exactly one state"))),
                }
            }
            "accepting" => {
                if accepting.is_some() {
                    return Err(err(line, "accepting declared twice"));
                }
                accepting = Some((line, tokens.iter().map(|s| s.to_string()).collect()));
            }
            k @ ("trans" | "trans1" | "trans2" | "trans3") => {
                if tokens.is_empty() || !tokens.len().is_multiple_of(3) {
                    return Err(err(line, "transitions are triples `src symbol dst`"));
                }
                let key = match k {
                    "trans" => "trans",
                    "trans1" => "trans1",
                    "trans2" => "trans2",
                    _ => "trans3",
                };
                // names must be declared before use, so resolve now
                trans.push((line, key, tokens.iter().map(|s| s.to_string()).collect()));
                let ab = alphabet.as_ref().ok_or_else(|| err(line, "alphabet used before it is declared"))?;
                for t in tokens.chunks(3) {
                    ab.index_of(t[1]).ok_or_else(|| err(line, format!("unknown symbol {:?}", t[1])))?;
                    let (src, dst) = match key {
                        "trans" => (&s0, &s0),
                        "trans1" => (&s1, &s1),
                        "trans2" => (&s1, &s2),
                        _ => (&s2, &s2),
                    };
                    src.get(line, t[0], "state")?;
                    dst.get(line, t[2], "state")?;
                }
            }
            other => return Err(err(line, format!("unknown key {other:?}"))),
        }
    }

    let (type_line, kind) = kind.ok_or_else(|| err(1, "missing `type:`"))?;
    let ab = alphabet.ok_or_else(|| err(type_line, "missing `alphabet:`"))?;
    let k = ab.len();
    let lookup = |names: &Names, (line, s): &(usize, String)| names.get(*line, s, "state");
    let marks = |names: &Names, acc: &Option<(usize, Vec<String>)>| -> Result<Option<Vec<bool>>> {
        acc.as_ref()
            .map(|(line, list)| {
                let mut v = vec![false; names.list.len()];
                for s in list {
                    v[names.get(*line, s, "state")?] = true;
                }
                Ok(v)
            })
            .transpose()
    };
    let check_keys = |allowed: &[&str]| -> Result<()> {
        match trans.iter().find(|(_, key, _)| !allowed.contains(key)) {
            Some((line, key, _)) => Err(err(*line, format!("{key} is not valid in a {kind} file"))),
            None => Ok(()),
        }
    };
    let fill = |key: &'static str, src: &Names, dst: &Names| -> Result<Vec<State>> {
        let mut t = Table::new(key);
        for (line, _, tokens) in trans.iter().filter(|(_, k2, _)| *k2 == key) {
            for c in tokens.chunks(3) {
                let (s, a, d) = (src.get(*line, &c[0], "state")?, ab.index_of(&c[1]).expect("checked"), dst.get(*line, &c[2], "state")?);
                t.set(*line, src.list.len(), k, s, a, d)?;
            }
        }
        t.finish(src.list.len(), k, src.line, &src.list, &ab)
    };

    match kind.as_str() {
        "dfa" | "congruence" => {
            if s1.line != 0 || s2.line != 0 {
                return Err(err(s1.line.max(s2.line), format!("states1/states2 are not valid in a {kind} file")));
            }
            let what = if kind == "dfa" { "states" } else { "classes" };
            if s0.line == 0 {
                return Err(err(type_line, format!("missing `{what}:`")));
            }
            check_keys(&["trans"])?;
            let table = fill("trans", &s0, &s0)?;
            let init = initial.as_ref().map(|i| lookup(&s0, i)).transpose()?;
            let acc = marks(&s0, &accepting)?;
            if kind == "dfa" {
                let dfa = Dfa::new(ab, s0.list.len(), table)?;
                Ok(AutomatonFile::Dfa(DfaFile {
                    dfa,
                    names: s0.list,
                    initial: init,
                    accepting: acc,
                }))
            } else {
                let eps = init.ok_or_else(|| err(type_line, "missing `epsilon:`"))?;
                Ok(AutomatonFile::Congruence(CongruenceFile {
                    raw: RawCongruence {
                        alphabet: ab,
                        class_count: s0.list.len(),
                        eps_class: eps,
                        right_step: table,
                        accepted: acc,
                    },
                    names: s0.list,
                }))
            }
        }
        _ => {
            if s0.line != 0 {
                return Err(err(s0.line, "lasso files declare states1 and states2"));
            }
            if s1.line == 0 || s2.line == 0 {
                return Err(err(type_line, "missing `states1:` or `states2:`"));
            }
            check_keys(&["trans1", "trans2", "trans3"])?;
            let d1 = fill("trans1", &s1, &s1)?;
            let d2 = fill("trans2", &s1, &s2)?;
            let d3 = fill("trans3", &s2, &s2)?;
            let init = initial.as_ref().map(|i| lookup(&s1, i)).transpose()?;
            let acc = marks(&s2, &accepting)?;
            let automaton = LassoAutomaton::new(ab, s1.list.len(), s2.list.len(), d1, d2, d3, init, acc)?;
            Ok(AutomatonFile::Lasso(LassoFile {
                automaton,
                names1: s1.list,
                names2: s2.list,
            }))
        }
    }
}

fn header(out: &mut String, kind: &str, ab: &Alphabet) {
    out.push_str(&format!("type: {kind}\nalphabet: {}\n", ab.symbols().join(" ")));
}

fn accepting_line(out: &mut String, names: &[String], acc: Option<&[bool]>) {
    if let Some(acc) = acc {
        let list: Vec<&str> = names.iter().zip(acc).filter(|(_, &c)| c).map(|(n, _)| n.as_str()).collect();
        if list.is_empty() {
            out.push_str("accepting:\n");
        } else {
            out.push_str(&format!("accepting: {}\n", list.join(" ")));
        }
    }
}

fn table_lines(out: &mut String, key: &str, ab: &Alphabet, src: &[String], dst: &[String], table: &[State]) {
    let k = ab.len();
    for (i, &t) in table.iter().enumerate() {
        out.push_str(&format!("{key}: {} {} {}\n", src[i / k], ab.name(i % k), dst[t]));
    }
}

/// Canonical text of a DFA: declarations, then transitions in state-major,
/// alphabet order.
pub fn write_dfa(dfa: &Dfa, names: &[String], initial: Option<State>, accepting: Option<&[bool]>) -> String {
    let mut out = String::new();
    header(&mut out, "dfa", dfa.alphabet());
    out.push_str(&format!("states: {}\n", names.join(" ")));
    if let Some(i) = initial {
        out.push_str(&format!("initial: {}\n", names[i]));
    }
    accepting_line(&mut out, names, accepting);
    table_lines(&mut out, "trans", dfa.alphabet(), names, names, dfa.table());
    out
}

pub fn write_dfa_file(f: &DfaFile) -> String {
    write_dfa(&f.dfa, &f.names, f.initial, f.accepting.as_deref())
}

/// Canonical text of a verified congruence, classes named `[rep]`.
pub fn write_congruence(c: &CongruenceRep) -> String {
    let ab = c.alphabet();
    let names = class_names(c);
    let mut out = String::new();
    header(&mut out, "congruence", ab);
    out.push_str(&format!("classes: {}\n", names.join(" ")));
    out.push_str(&format!("epsilon: {}\n", names[c.eps_class()]));
    accepting_line(&mut out, &names, c.accepted_classes());
    let table: Vec<usize> = (0..c.class_count())
        .flat_map(|q| (0..ab.len()).map(move |a| (q, a)))
        .map(|(q, a)| c.right_step(q, a))
        .collect();
    table_lines(&mut out, "trans", ab, &names, &names, &table);
    out
}

pub fn write_congruence_file(f: &CongruenceFile) -> String {
    let ab = &f.raw.alphabet;
    let mut out = String::new();
    header(&mut out, "congruence", ab);
    out.push_str(&format!("classes: {}\n", f.names.join(" ")));
    out.push_str(&format!("epsilon: {}\n", f.names[f.raw.eps_class]));
    accepting_line(&mut out, &f.names, f.raw.accepted.as_deref());
    table_lines(&mut out, "trans", ab, &f.names, &f.names, &f.raw.right_step);
    out
}

/// `[w]` for each class representative.
pub fn class_names(c: &CongruenceRep) -> Vec<String> {
    c.representatives()
        .iter()
        .map(|w| format!("[{}]", c.alphabet().render(w)))
        .collect()
}

/// `[w]` for the word classes and `[(u,v)]` for the lasso classes.
pub fn lasso_class_names(c: &LassoCongruenceRep) -> (Vec<String>, Vec<String>) {
    let ab = c.word_part().alphabet();
    (
        class_names(c.word_part()),
        c.representatives().iter().map(|l| format!("[{}]", l.render(ab))).collect(),
    )
}

pub fn write_lasso(la: &LassoAutomaton, names1: &[String], names2: &[String]) -> String {
    let ab = la.alphabet();
    let (d1, d2, d3) = la.tables();
    let mut out = String::new();
    header(&mut out, "lasso", ab);
    out.push_str(&format!("states1: {}\n", names1.join(" ")));
    out.push_str(&format!("states2: {}\n", names2.join(" ")));
    if let Some(i) = la.initial() {
        out.push_str(&format!("initial: {}\n", names1[i]));
    }
    accepting_line(&mut out, names2, la.accepting());
    table_lines(&mut out, "trans1", ab, names1, names1, d1);
    table_lines(&mut out, "trans2", ab, names1, names2, d2);
    table_lines(&mut out, "trans3", ab, names2, names2, d3);
    out
}

pub fn write_lasso_file(f: &LassoFile) -> String {
    write_lasso(&f.automaton, &f.names1, &f.names2)
}

pub fn write(f: &AutomatonFile) -> String {
    match f {
        AutomatonFile::Dfa(d) => write_dfa_file(d),
        AutomatonFile::Congruence(c) => write_congruence_file(c),
        AutomatonFile::Lasso(l) => write_lasso_file(l),
    }
}

/// Default names `0, 1, ...` (or with a prefix).
pub fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}
