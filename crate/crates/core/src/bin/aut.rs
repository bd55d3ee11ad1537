//! `aut`: transition monoids, machines, equations and coequations of
//! deterministic, lasso and Ω-automata from the command line.
//!
//! Exit codes: 0 success, 1 law failure, 2 parse error, 3 size guard,
//! 4 contract violation or unreadable input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use aut_core::dfa::{reachable_part, Dfa};
use aut_core::dot::{dfa_dot, lasso_dot};
use aut_core::equations::{atom_decomposition, cofree, free_congruence, mupl, CofreeMode};
use aut_core::format::{class_names, lasso_class_names, parse, write_dfa, write_lasso, AutomatonFile, DfaFile, LassoFile};
use aut_core::lasso::{
    lasso_machine, lasso_mupl, lasso_reachable_part, lasso_transition, myhill_nerode, syntactic_congruence,
    LassoCongruenceRep,
};
use aut_core::laws::{self, LawReport, Status};
use aut_core::monoid::{machine, m_with_acceptance, t_with_acceptance, transition_monoid, verify_congruence};
use aut_core::omega::{
    admissible_sets, gamma_equivalent, is_saturated, meet_preservation_check, saturation_partition, wilke_transition,
};
use aut_core::oracle::BoundConfig;
use aut_core::random::{random_accepting, random_lasso, rng};
use aut_core::{Alphabet, CongruenceRep, Error, Lasso, LassoAutomaton, Result, State};

#[derive(Parser)]
#[command(name = "aut", version, about = "Algebraic constructions on finite automata")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Also write the resulting automaton as Graphviz DOT.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Emit JSON instead of the text format.
    #[arg(long, global = true)]
    json: bool,
    /// Word length bound for bounded checks.
    #[arg(long, global = true, default_value_t = 8)]
    max_len: usize,
    /// Seed for randomized law checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Reachable part of a pointed automaton.
    Reach { file: PathBuf },
    /// Transition monoid class table (JSON).
    Tmonoid { file: PathBuf },
    /// Machine of a congruence, or of an automaton's transition monoid.
    Machine { file: PathBuf },
    /// νC: the machine of the transition monoid of the reachable part.
    Nuc { file: PathBuf },
    /// Machine of the kernel quantified over every state.
    Free { file: PathBuf },
    /// Automaton of the languages L(x, U).
    Cofree {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Colorings::All)]
        colorings: Colorings,
    },
    /// μPL: every set of classes of the generated subset monoid.
    Mupl {
        file: PathBuf,
        #[arg(long, default_value_t = aut_core::DEFAULT_MAX_CLASSES)]
        max_classes: usize,
    },
    /// Atom decomposition of the μPL state {[REP]}.
    Atoms {
        file: PathBuf,
        #[arg(long, value_name = "REP")]
        class: String,
        #[arg(long, default_value_t = aut_core::DEFAULT_MAX_CLASSES)]
        max_classes: usize,
    },
    /// Lasso automata.
    #[command(subcommand)]
    Lasso(LassoCommand),
    /// Ω-automata.
    #[command(subcommand)]
    Omega(OmegaCommand),
    /// Run every applicable law on the inputs (JSON report).
    Laws {
        files: Vec<PathBuf>,
        /// Also check this many random automata of each kind.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

#[derive(Subcommand)]
enum LassoCommand {
    Tmonoid { file: PathBuf },
    Machine { file: PathBuf },
    Nuc { file: PathBuf },
    Mupl {
        file: PathBuf,
        #[arg(long, default_value_t = aut_core::DEFAULT_MAX_CLASSES)]
        max_classes: usize,
    },
    Minimal { file: PathBuf },
    Syntactic { file: PathBuf },
    Nerode { file: PathBuf },
}

#[derive(Subcommand)]
enum OmegaCommand {
    /// Whether two lassos `SPOKE:LOOP` denote the same infinite word.
    Gamma {
        l1: String,
        l2: String,
        /// Space-separated symbols; defaults to the letters used.
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Admissibility classes and admissible accepting sets.
    Adm { file: PathBuf },
    /// Whether the accepting set respects γ-equivalence.
    Saturated { file: PathBuf },
    /// Transition Wilke algebra (JSON).
    Wilke { file: PathBuf },
    /// Meet preservation of the Wilke transition congruence.
    Meet {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Colorings {
    All,
    Singleton,
}

/// What a command prints, its DOT rendering, and whether a law failed.
struct Output {
    text: String,
    dot: Option<String>,
    failed: bool,
}

impl Output {
    fn text(text: String) -> Self {
        Output {
            text,
            dot: None,
            failed: false,
        }
    }

    fn json(v: Value) -> Self {
        Output::text(pretty(&v))
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn load(path: &Path) -> Result<AutomatonFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        e => e,
    })
}

fn load_dfa(path: &Path) -> Result<DfaFile> {
    match load(path)? {
        AutomatonFile::Dfa(d) => Ok(d),
        _ => Err(Error::Invalid(format!("{} is not a dfa file", path.display()))),
    }
}

fn load_lasso(path: &Path) -> Result<LassoFile> {
    match load(path)? {
        AutomatonFile::Lasso(l) => Ok(l),
        _ => Err(Error::Invalid(format!("{} is not a lasso file", path.display()))),
    }
}

fn dfa_json(dfa: &Dfa, names: &[String], initial: Option<State>, accepting: Option<&[bool]>) -> Value {
    let ab = dfa.alphabet();
    let k = ab.len();
    json!({
        "type": "dfa",
        "alphabet": ab.symbols(),
        "states": names,
        "initial": initial.map(|i| names[i].clone()),
        "accepting": accepting.map(|c| picked(names, c)),
        "trans": dfa.table().iter().enumerate()
            .map(|(i, &t)| [names[i / k].clone(), ab.name(i % k).to_string(), names[t].clone()])
            .collect::<Vec<_>>(),
    })
}

fn picked(names: &[String], c: &[bool]) -> Vec<String> {
    names.iter().zip(c).filter(|(_, &b)| b).map(|(n, _)| n.clone()).collect()
}

fn emit_dfa(g: &Global, dfa: &Dfa, names: &[String], initial: Option<State>, accepting: Option<&[bool]>) -> Output {
    let text = if g.json {
        pretty(&dfa_json(dfa, names, initial, accepting))
    } else {
        write_dfa(dfa, names, initial, accepting)
    };
    Output {
        text,
        dot: Some(dfa_dot(dfa, names, initial, accepting)),
        failed: false,
    }
}

fn lasso_json(la: &LassoAutomaton, n1: &[String], n2: &[String]) -> Value {
    let ab = la.alphabet();
    let k = ab.len();
    let (d1, d2, d3) = la.tables();
    let rows = |src: &[String], dst: &[String], t: &[State]| -> Vec<[String; 3]> {
        t.iter()
            .enumerate()
            .map(|(i, &s)| [src[i / k].clone(), ab.name(i % k).to_string(), dst[s].clone()])
            .collect()
    };
    json!({
        "type": "lasso",
        "alphabet": ab.symbols(),
        "states1": n1,
        "states2": n2,
        "initial": la.initial().map(|i| n1[i].clone()),
        "accepting": la.accepting().map(|c| picked(n2, c)),
        "trans1": rows(n1, n1, d1),
        "trans2": rows(n1, n2, d2),
        "trans3": rows(n2, n2, d3),
    })
}

fn emit_lasso(g: &Global, la: &LassoAutomaton, n1: &[String], n2: &[String]) -> Output {
    let text = if g.json {
        pretty(&lasso_json(la, n1, n2))
    } else {
        write_lasso(la, n1, n2)
    };
    Output {
        text,
        dot: Some(lasso_dot(la, n1, n2)),
        failed: false,
    }
}

fn congruence_json(c: &CongruenceRep) -> Value {
    let names = class_names(c);
    let k = c.alphabet().len();
    json!({
        "alphabet": c.alphabet().symbols(),
        "classes": names,
        "representatives": c.representatives().iter().map(|w| c.alphabet().render(w)).collect::<Vec<_>>(),
        "epsilon": names[c.eps_class()],
        "right": (0..c.class_count()).map(|q| (0..k).map(|a| names[c.right_step(q, a)].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "left": (0..c.class_count()).map(|q| (0..k).map(|a| names[c.left_step(a, q)].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "accepted": c.accepted_classes().map(|acc| picked(&names, acc)),
    })
}

/// The transition monoid of a dfa file (with accepted classes when the file
/// has an accepting set) or the verified table of a congruence file.
fn congruence_of(path: &Path) -> Result<CongruenceRep> {
    match load(path)? {
        AutomatonFile::Dfa(d) => {
            if d.accepting.is_some() {
                t_with_acceptance(&d.accepting_dfa()?)
            } else {
                Ok(transition_monoid(&reachable_part(&d.pointed()?).0))
            }
        }
        AutomatonFile::Congruence(c) => verify_congruence(&c.raw),
        AutomatonFile::Lasso(_) => Err(Error::Invalid("expected a dfa or congruence file".into())),
    }
}

fn emit_machine(g: &Global, c: &CongruenceRep) -> Result<Output> {
    let names = class_names(c);
    Ok(match c.accepted_classes() {
        Some(_) => {
            let m = m_with_acceptance(c)?;
            emit_dfa(g, m.dfa(), &names, m.initial(), Some(m.accepting()))
        }
        None => {
            let m = machine(c);
            emit_dfa(g, m.dfa(), &names, Some(m.initial()), None)
        }
    })
}

fn lasso_congruence_json(c: &LassoCongruenceRep) -> Value {
    let k = c.word_part().alphabet().len();
    let (words, lassos) = lasso_class_names(c);
    json!({
        "words": congruence_json(c.word_part()),
        "lassos": lassos,
        "entry": (0..c.word_part().class_count()).map(|q| (0..k).map(|a| lassos[c.sigma2(q, a)].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "loop": (0..c.lasso_count()).map(|p| (0..k).map(|a| lassos[c.sigma3(p, a)].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "left": (0..c.lasso_count()).map(|p| (0..k).map(|a| lassos[c.left_ext(a, p)].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "accepted": c.accepted_classes().map(|acc| picked(&lassos, acc)),
        "word_classes": words,
    })
}

fn set_label(names: &[String], members: &[State]) -> String {
    format!("{{{}}}", members.iter().map(|&s| names[s].as_str()).collect::<Vec<_>>().join(","))
}

fn run_reach(g: &Global, path: &Path) -> Result<Output> {
    match load(path)? {
        AutomatonFile::Dfa(d) => {
            let (r, map) = reachable_part(&d.pointed()?);
            let names = invert(&map, &d.names);
            let acc = d.accepting.as_ref().map(|c| restrict(&map, c, r.state_count()));
            Ok(emit_dfa(g, r.dfa(), &names, Some(0), acc.as_deref()))
        }
        AutomatonFile::Lasso(l) => {
            let (r, maps) = lasso_reachable_part(&l.automaton)?;
            Ok(emit_lasso(g, &r, &invert(&maps.spoke, &l.names1), &invert(&maps.cycle, &l.names2)))
        }
        AutomatonFile::Congruence(_) => Err(Error::Invalid("reach needs a dfa or lasso file".into())),
    }
}

fn invert(map: &[Option<State>], names: &[String]) -> Vec<String> {
    let mut out = vec![String::new(); map.iter().flatten().count()];
    for (old, new) in map.iter().enumerate() {
        if let Some(n) = new {
            out[*n] = names[old].clone();
        }
    }
    out
}

fn restrict(map: &[Option<State>], c: &[bool], n: usize) -> Vec<bool> {
    let mut out = vec![false; n];
    for (old, new) in map.iter().enumerate() {
        if let Some(n) = new {
            out[*n] = c[old];
        }
    }
    out
}

fn run(g: &Global, command: &Command) -> Result<Output> {
    match command {
        Command::Reach { file } => run_reach(g, file),
        Command::Tmonoid { file } => {
            let c = congruence_of(file)?;
            let mut out = Output::json(congruence_json(&c));
            out.dot = emit_machine(g, &c)?.dot;
            Ok(out)
        }
        Command::Machine { file } | Command::Nuc { file } => emit_machine(g, &congruence_of(file)?),
        Command::Free { file } => {
            let d = load_dfa(file)?;
            let c = free_congruence(&d.dfa);
            emit_machine(g, &c)
        }
        Command::Cofree { file, colorings } => {
            let d = load_dfa(file)?;
            let mode = match colorings {
                Colorings::All => CofreeMode::All,
                Colorings::Singleton => CofreeMode::Singleton,
            };
            let cf = cofree(&d.dfa, mode, 16)?;
            let names: Vec<String> = cf
                .labels
                .iter()
                .map(|(x, u)| format!("L({},{})", d.names[*x], set_label(&d.names, u)))
                .collect();
            let a = &cf.automaton;
            Ok(emit_dfa(g, a.dfa(), &names, a.initial(), Some(a.accepting())))
        }
        Command::Mupl { file, max_classes } => {
            let d = load_dfa(file)?;
            let m = mupl(&d.accepting_dfa()?, *max_classes)?;
            let names: Vec<String> = (0..m.state_count()).map(|u| m.label(u)).collect();
            let a = m.to_accepting();
            Ok(emit_dfa(g, a.dfa(), &names, a.initial(), Some(a.accepting())))
        }
        Command::Atoms {
            file,
            class,
            max_classes,
        } => run_atoms(g, file, class, *max_classes),
        Command::Lasso(cmd) => run_lasso(g, cmd),
        Command::Omega(cmd) => run_omega(g, cmd),
        Command::Laws { files, random } => run_laws(g, files, *random),
    }
}

fn run_atoms(g: &Global, file: &Path, class: &str, max_classes: usize) -> Result<Output> {
    let d = load_dfa(file)?;
    let a = d.accepting_dfa()?;
    let m = mupl(&a, max_classes)?;
    let w = a.alphabet().parse_word(class)?;
    let q = m.classes().class_of(&w);
    let f = atom_decomposition(&a, q, max_classes)?;
    let s = f.simplified(a.dfa());
    let name = |x: State| d.names[x].clone();
    let atom = m.state_of(&[q]);
    let words = aut_core::oracle::enumerate_words(a.alphabet().len(), g.max_len);
    let bad = words
        .iter()
        .find(|u| f.eval(a.dfa(), u) != m.in_language(atom, u) || s.eval(a.dfa(), u) != f.eval(a.dfa(), u));
    let rep = format!("[{}]", a.alphabet().render(m.classes().representative(q)));
    let text = if g.json {
        pretty(&json!({
            "atom": format!("{{{rep}}}"),
            "formula": f.render(name),
            "simplified": s.render(name),
            "checked_words": words.len(),
            "max_len": g.max_len,
            "counterexample": bad.map(|u| a.alphabet().render(u)),
        }))
    } else {
        let verdict = match bad {
            None => format!("verified on {} words up to length {}", words.len(), g.max_len),
            Some(u) => format!("mismatch at {}", a.alphabet().render(u)),
        };
        format!(
            "atom: {{{rep}}}\nformula: {}\nsimplified: {}\n{verdict}\n",
            f.render(name),
            s.render(name)
        )
    };
    Ok(Output {
        text,
        dot: None,
        failed: bad.is_some(),
    })
}

fn run_lasso(g: &Global, cmd: &LassoCommand) -> Result<Output> {
    match cmd {
        LassoCommand::Tmonoid { file } => {
            let c = lasso_transition(&load_lasso(file)?.automaton)?;
            let (n1, n2) = lasso_class_names(&c);
            let mut out = Output::json(lasso_congruence_json(&c));
            out.dot = Some(lasso_dot(&lasso_machine(&c), &n1, &n2));
            Ok(out)
        }
        LassoCommand::Machine { file } => {
            let c = lasso_transition(&load_lasso(file)?.automaton)?.with_accepted(None)?;
            let (n1, n2) = lasso_class_names(&c);
            Ok(emit_lasso(g, &lasso_machine(&c), &n1, &n2))
        }
        LassoCommand::Nuc { file } => {
            let c = lasso_transition(&load_lasso(file)?.automaton)?;
            let (n1, n2) = lasso_class_names(&c);
            Ok(emit_lasso(g, &lasso_machine(&c), &n1, &n2))
        }
        LassoCommand::Mupl { file, max_classes } => {
            let m = lasso_mupl(&load_lasso(file)?.automaton, *max_classes)?;
            let t = m.automaton();
            let n1: Vec<String> = (0..t.spoke_count()).map(|s| m.lasso_label(s)).collect();
            let n2: Vec<String> = (0..t.loop_count()).map(|s| m.word_label(s)).collect();
            Ok(emit_lasso(g, t, &n1, &n2))
        }
        LassoCommand::Minimal { file } => {
            let n = myhill_nerode(&load_lasso(file)?.automaton)?;
            let ab = n.minimal.alphabet().clone();
            let n1: Vec<String> = n.spoke_reps.iter().map(|u| format!("[{}]", ab.render(u))).collect();
            let n2: Vec<String> = n.lasso_reps.iter().map(|l| format!("[{}]", l.render(&ab))).collect();
            Ok(emit_lasso(g, &n.minimal, &n1, &n2))
        }
        LassoCommand::Syntactic { file } => {
            let c = syntactic_congruence(&load_lasso(file)?.automaton)?;
            Ok(Output::json(lasso_congruence_json(&c)))
        }
        LassoCommand::Nerode { file } => {
            let n = myhill_nerode(&load_lasso(file)?.automaton)?;
            let ab = n.minimal.alphabet();
            Ok(Output::json(json!({
                "spoke_classes": n.spoke_reps.iter().map(|u| ab.render(u)).collect::<Vec<_>>(),
                "lasso_classes": n.lasso_reps.iter().map(|l| l.render(ab)).collect::<Vec<_>>(),
            })))
        }
    }
}

fn infer_alphabet(texts: &[&str]) -> Result<Alphabet> {
    let mut letters: Vec<char> = texts
        .iter()
        .flat_map(|t| t.chars())
        .filter(|&c| c != ':' && c != 'ε' && !c.is_whitespace())
        .collect();
    letters.sort_unstable();
    letters.dedup();
    if letters.is_empty() {
        letters.push('a');
    }
    Alphabet::new(letters.iter().map(char::to_string))
}

fn run_omega(g: &Global, cmd: &OmegaCommand) -> Result<Output> {
    match cmd {
        OmegaCommand::Gamma { l1, l2, alphabet } => {
            let ab = match alphabet {
                Some(s) => Alphabet::new(s.split_whitespace())?,
                None => infer_alphabet(&[l1, l2])?,
            };
            let (a, b) = (Lasso::parse(&ab, l1)?, Lasso::parse(&ab, l2)?);
            let eq = gamma_equivalent(&a, &b);
            Ok(if g.json {
                Output::json(json!({"left": a.render(&ab), "right": b.render(&ab), "equivalent": eq}))
            } else {
                Output::text(format!("{eq}\n"))
            })
        }
        OmegaCommand::Adm { file } => {
            let l = load_lasso(file)?;
            let (r, maps) = lasso_reachable_part(&l.automaton)?;
            let names = invert(&maps.cycle, &l.names2);
            let e = saturation_partition(&r).partition;
            let classes: Vec<String> = e.classes().iter().map(|c| set_label(&names, c)).collect();
            let sets: Vec<String> = admissible_sets(&r, 20)?.iter().map(|c| set_label(&names, c)).collect();
            Ok(if g.json {
                Output::json(json!({"classes": classes, "admissible": sets}))
            } else {
                Output::text(format!("classes: {}\nadmissible: {}\n", classes.join(" "), sets.join(" ")))
            })
        }
        OmegaCommand::Saturated { file } => {
            let l = load_lasso(file)?;
            let (r, maps) = lasso_reachable_part(&l.automaton)?;
            let n1 = invert(&maps.spoke, &l.names1);
            let ab = r.alphabet();
            let witness = is_saturated(&r)?.map(|p| {
                format!(
                    "from {}: {} reaches {}, {} reaches {}",
                    n1[p.state],
                    p.lasso.render(ab),
                    if r.is_accepting(p.left) { "an accepting state" } else { "a rejecting state" },
                    p.other.render(ab),
                    if r.is_accepting(p.right) { "an accepting state" } else { "a rejecting state" },
                )
            });
            Ok(if g.json {
                Output::json(json!({"saturated": witness.is_none(), "witness": witness}))
            } else {
                Output::text(match witness {
                    None => "true\n".into(),
                    Some(w) => format!("false\nwitness: {w}\n"),
                })
            })
        }
        OmegaCommand::Wilke { file } => {
            let w = wilke_transition(&load_lasso(file)?.automaton)?;
            let ab = w.alphabet();
            let plus: Vec<String> = w.plus_representatives().iter().map(|u| ab.render(u)).collect();
            let up: Vec<String> = w.up_representatives().iter().map(|l| l.render(ab)).collect();
            let (n, m) = (w.plus_count(), w.up_count());
            Ok(Output::json(json!({
                "plus": plus,
                "letters": (0..ab.len()).map(|a| plus[w.letter_class(a)].clone()).collect::<Vec<_>>(),
                "product": (0..n).map(|s| (0..n).map(|t| plus[w.multiply(s, t)].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "up": up,
                "omega": (0..n).map(|s| up[w.omega(s)].clone()).collect::<Vec<_>>(),
                "mixed": (0..n).map(|s| (0..m).map(|e| up[w.mixed(s, e)].clone()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })))
        }
        OmegaCommand::Meet { files } => {
            let las = files
                .iter()
                .map(|f| Ok(load_lasso(f)?.automaton))
                .collect::<Result<Vec<_>>>()?;
            let ab = las[0].alphabet().clone();
            let verdict = meet_preservation_check(&ab, &las)?;
            let report = LawReport::from_result(
                "meet preservation",
                match verdict {
                    aut_core::lasso::Verdict::Holds => Ok(()),
                    aut_core::lasso::Verdict::Fails(w) => Err(aut_core::Violation::new("meet preservation", w).into()),
                },
            );
            let failed = !report.passed();
            let mut out = Output::json(serde_json::to_value(&report).expect("reports serialize"));
            out.failed = failed;
            Ok(out)
        }
    }
}

fn prefixed(source: &str, reports: Vec<LawReport>) -> Vec<LawReport> {
    reports
        .into_iter()
        .map(|mut r| {
            r.check = format!("{source}: {}", r.check);
            r
        })
        .collect()
}

fn run_laws(g: &Global, files: &[PathBuf], random: usize) -> Result<Output> {
    let cfg = BoundConfig {
        max_word_len: g.max_len,
        ..BoundConfig::default()
    };
    let mut reports = Vec::new();
    let mut lassos = Vec::new();
    for f in files {
        let source = f.display().to_string();
        match load(f)? {
            AutomatonFile::Dfa(d) => {
                let a = d.accepting_dfa()?;
                a.pointed()?;
                reports.extend(prefixed(&source, laws::dfa_suite(&a, &cfg)));
            }
            AutomatonFile::Congruence(c) => {
                let rep = verify_congruence(&c.raw)?;
                let again = transition_monoid(&machine(&rep));
                let unit = if again == rep.bare() {
                    Ok(())
                } else {
                    Err(aut_core::Violation::new("unit: C = TMC", "class tables differ").into())
                };
                reports.push(LawReport::from_result(&format!("{source}: unit"), unit));
                reports.push(LawReport::from_result(
                    &format!("{source}: congruence invariants"),
                    rep.check_invariants().map_err(Error::from),
                ));
            }
            AutomatonFile::Lasso(l) => {
                let la = l.automaton;
                la.accepting().ok_or(Error::MissingAccepting("laws"))?;
                reports.extend(prefixed(&source, laws::lasso_suite(&la, &cfg)));
                reports.extend(prefixed(&source, laws::omega_suite(&la, &cfg)));
                lassos.push(la);
            }
        }
    }
    if lassos.len() >= 2 {
        let ab = lassos[0].alphabet().clone();
        reports.push(LawReport::from_result("inputs: meet preservation", laws::meet_preservation(&ab, &lassos)));
    }
    let mut r = rng(g.seed);
    for i in 0..random {
        let k = 1 + i % 3;
        let a = random_accepting(&mut r, 6, k);
        reports.extend(prefixed(&format!("random dfa {i}"), laws::dfa_suite(&a, &cfg)));
    }
    for i in 0..random {
        let la = random_lasso(&mut r, 3, 3, 2);
        reports.extend(prefixed(&format!("random lasso {i}"), laws::lasso_suite(&la, &cfg)));
        reports.extend(prefixed(&format!("random lasso {i}"), laws::omega_suite(&la, &cfg)));
    }
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    let mut out = Output::json(serde_json::to_value(&reports).expect("reports serialize"));
    out.failed = failed;
    Ok(out)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Law(_) => 1,
        Error::Parse { .. } => 2,
        Error::SizeGuard { .. } => 3,
        Error::AlphabetMismatch { .. }
        | Error::MissingInitial(_)
        | Error::MissingAccepting(_)
        | Error::NotCongruence { .. }
        | Error::Invalid(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.global, &cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if let (Some(path), Some(dot)) = (&cli.global.dot, &out.dot) {
                if let Err(e) = std::fs::write(path, dot) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(4);
                }
            }
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
