//! Acceptance criteria, one printed line each. Every line is asserted
//! except those in `KNOWN_FALSE`, which are computed and printed like the
//! rest.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use aut_core::dfa::reachable_part;
use aut_core::equations::{atom_decomposition, cofree, mupl, CofreeMode};
use aut_core::format::{class_names, write_dfa};
use aut_core::lasso::{lasso_isomorphic, lasso_machine, lasso_nuc, syntactic_congruence};
use aut_core::laws::{self, language_quotient};
use aut_core::monoid::{m_with_acceptance, machine, t_with_acceptance, transition_monoid};
use aut_core::oracle::{accepts_by_hand, enumerate_words, BoundConfig};
use aut_core::random::{all_dfas, all_unit_lassos, random_accepting, random_lasso, rng};
use aut_core::samples::{meet_pair, two_state_accepting, two_state_dfa, two_state_powerset, spoke_parity_lasso};
use aut_core::{AcceptingDfa, Alphabet, Error, LassoAutomaton, Result, Word};

/// Word length for the golden language checks.
const GOLDEN_LEN: usize = 8;
/// Random corpus sizes and seeds.
const RANDOM_DFAS: usize = 200;
const RANDOM_LASSOS: usize = 100;
const MEET_PAIRS: usize = 50;
const SEED_DFA: u64 = 2;
const SEED_LASSO: u64 = 4;
const SEED_OMEGA: u64 = 5;
const SEED_MEET: u64 = 6;
/// Bounds for the brute-force oracles.
const LASSO_CLASS_BOUND: usize = 3;
const GAMMA_BOUND: usize = 4;

/// Laws that do not hold as stated; see the printed detail.
const KNOWN_FALSE: [&str; 2] = ["4d", "5f"];

struct Table {
    rows: Vec<(String, bool)>,
}

impl Table {
    fn new() -> Self {
        Table { rows: Vec::new() }
    }

    fn line(&mut self, id: &str, what: &str, ok: bool, detail: impl Into<String>) {
        let detail = detail.into();
        let tag = if ok { "PASS" } else { "FAIL" };
        let text = if detail.is_empty() {
            format!("{tag} [{id}] {what}")
        } else {
            format!("{tag} [{id}] {what}: {detail}")
        };
        // written past the test harness's capture so the table always shows
        writeln!(std::io::stdout().lock(), "{text}").expect("stdout is writable");
        self.rows.push((id.to_string(), ok));
    }

    fn tally(&mut self, id: &str, what: &str, t: &Tally) {
        self.line(id, what, t.failed == 0, t.summary());
    }
}

/// Counts of a law over a corpus, keeping the first failure.
#[derive(Default)]
struct Tally {
    passed: usize,
    skipped: usize,
    failed: usize,
    first: Option<String>,
}

impl Tally {
    fn add(&mut self, source: &str, r: Result<()>) {
        match r {
            Ok(()) => self.passed += 1,
            Err(Error::SizeGuard { .. }) => self.skipped += 1,
            Err(e) => {
                self.failed += 1;
                self.first.get_or_insert_with(|| format!("{source}: {e}"));
            }
        }
    }

    fn summary(&self) -> String {
        let mut s = format!("{} passed", self.passed);
        if self.skipped > 0 {
            s.push_str(&format!(", {} over the class-count size guard", self.skipped));
        }
        if self.failed > 0 {
            s.push_str(&format!(", {} failed, first {}", self.failed, self.first.as_deref().unwrap_or("")));
        }
        s
    }
}

/// A language named by its expression and decided by a predicate.
type Named = (&'static str, fn(&Word) -> bool);

fn ends_with(w: &Word, a: usize) -> bool {
    w.letters().last() == Some(&a)
}

/// The eight languages over `{a, b}` in the μPL lattice, decided by hand.
fn golden_languages() -> Vec<Named> {
    vec![
        ("∅", |_| false),
        ("(b*a)+", |w| ends_with(w, 0)),
        ("{ε}", |w| w.is_empty()),
        ("(a*b)+", |w| ends_with(w, 1)),
        ("(b*a)*", |w| w.is_empty() || ends_with(w, 0)),
        ("Σ+", |w| !w.is_empty()),
        ("(a*b)*", |w| w.is_empty() || ends_with(w, 1)),
        ("Σ*", |_| true),
    ]
}

/// Names the language of each state among `candidates`, by bounded
/// comparison; `None` where no candidate matches.
fn identify(a: &AcceptingDfa, candidates: &[Named]) -> Vec<Option<&'static str>> {
    let words = enumerate_words(2, GOLDEN_LEN);
    (0..a.state_count())
        .map(|s| {
            candidates
                .iter()
                .find(|(_, f)| words.iter().all(|w| accepts_by_hand(a, s, w) == f(w)))
                .map(|(n, _)| *n)
        })
        .collect()
}

fn is_bijection(found: &[Option<&str>], names: &[&str]) -> bool {
    let mut got: Vec<&str> = found.iter().flatten().copied().collect();
    got.sort_unstable();
    let mut want = names.to_vec();
    want.sort_unstable();
    found.len() == names.len() && got == want
}

fn golden(t: &mut Table) {
    let a = two_state_accepting();
    let names = ["x".to_string(), "y".to_string()];

    let c = t_with_acceptance(&a).expect("pointed and accepting");
    let m = m_with_acceptance(&c).expect("accepted classes");
    let text = write_dfa(m.dfa(), &class_names(&c), m.initial(), Some(m.accepting()));
    let want = "type: dfa\nalphabet: a b\nstates: [ε] [a] [b]\ninitial: [ε]\naccepting: [ε] [b]\n\
                trans: [ε] a [a]\ntrans: [ε] b [b]\ntrans: [a] a [a]\ntrans: [a] b [b]\n\
                trans: [b] a [a]\ntrans: [b] b [b]\n";
    t.line("1a", "νC of the two-state automaton", text == want, format!("{} states", m.state_count()));

    let p = two_state_powerset();
    let subset = |s: usize| {
        let m: Vec<String> = p.subset_members(s).iter().map(|&x| names[x].clone()).collect();
        format!("{{{}}}", m.join(","))
    };
    let mut edges: Vec<String> = (0..p.state_count())
        .flat_map(|s| (0..2).map(move |x| (s, x)))
        .map(|(s, x)| format!("{} {} {}", subset(s), ["a", "b"][x], subset(p.dfa().step(s, x))))
        .collect();
    edges.sort();
    let mut drawn = vec![
        "{x} a {}",
        "{x} b {x,y}",
        "{} a {}",
        "{} b {}",
        "{x,y} a {x,y}",
        "{x,y} b {x,y}",
        "{y} a {x,y}",
        "{y} b {}",
    ];
    drawn.sort();
    t.line(
        "1b",
        "powerset lift",
        p.state_count() == 4 && edges == drawn,
        format!("{} states, {} generated from c", p.state_count(), p.generated_count()),
    );

    let gen = reachable_part(&p.pointed()).0;
    let cp = transition_monoid(&gen);
    let nc = machine(&cp);
    let ab = Alphabet::letters(2);
    let looped = |w: &str| {
        let q = cp.class_of(&ab.parse_word(w).expect("letters"));
        (0..2).all(|x| nc.dfa().step(q, x) == q)
    };
    t.line(
        "1c",
        "νC of the powerset lift",
        nc.state_count() == 3 && looped("a") && looped("b"),
        format!("{} states, [a] and [b] absorbing", nc.state_count()),
    );

    let mu = mupl(&a, 20).expect("three classes");
    let acc = mu.to_accepting();
    let eps = mu.classes().eps_class();
    let accepting_ok = (0..mu.state_count()).all(|u| acc.is_accepting(u) == mu.members(u).contains(&eps));
    let accepting_count = (0..mu.state_count()).filter(|&u| acc.is_accepting(u)).count();
    t.line(
        "1d",
        "μPL states and acceptance",
        mu.state_count() == 8 && accepting_count == 4 && accepting_ok,
        format!("{} states, {} accepting", mu.state_count(), accepting_count),
    );

    let langs = golden_languages();
    let found = identify(&acc, &langs);
    let all: Vec<&str> = langs.iter().map(|(n, _)| *n).collect();
    t.line(
        "1e",
        "μPL state languages",
        is_bijection(&found, &all),
        format!("up to length {GOLDEN_LEN}: {:?}", found.iter().map(|f| f.unwrap_or("?")).collect::<Vec<_>>()),
    );

    let cf = cofree(&two_state_dfa(), CofreeMode::Singleton, 16).expect("two states");
    let found = identify(&cf.automaton, &langs);
    t.line(
        "1f",
        "cofree with singleton colorings",
        is_bijection(&found, &["(b*a)+", "(b*a)*", "(a*b)+", "(a*b)*"]),
        format!("{} states", cf.automaton.state_count()),
    );

    let q = mu.classes().class_of(&Word::empty());
    let f = atom_decomposition(&a, q, 20).expect("three classes");
    let s = f.simplified(a.dfa());
    let rendered = s.render(|x| names[x].clone());
    let atom = mu.state_of(&[q]);
    let agree = enumerate_words(2, GOLDEN_LEN)
        .iter()
        .all(|w| s.eval(a.dfa(), w) == w.is_empty() && f.eval(a.dfa(), w) == mu.in_language(atom, w));
    t.line(
        "1g",
        "atom {[ε]}",
        rendered == "L(x,{x}) ∩ L(y,{y})" && agree,
        rendered,
    );
}

/// Random automata and every one- and two-state automaton over two letters
/// with every initial state and accepting set.
fn dfa_corpus() -> Vec<(String, AcceptingDfa)> {
    let mut out = Vec::new();
    let mut r = rng(SEED_DFA);
    for i in 0..RANDOM_DFAS {
        out.push((format!("random dfa {i}"), random_accepting(&mut r, 6, 1 + i % 3)));
    }
    for n in 1..=2 {
        for (j, d) in all_dfas(n, 2).into_iter().enumerate() {
            for x in 0..n {
                for mask in 0..1usize << n {
                    let c = (0..n).map(|s| mask >> s & 1 == 1).collect();
                    let a = AcceptingDfa::new(d.clone(), c, Some(x)).expect("valid");
                    let a = aut_core::dfa::reachable_accepting(&a).expect("pointed");
                    out.push((format!("{n}-state dfa {j} from {x} with mask {mask}"), a));
                }
            }
        }
    }
    out
}

fn galois(t: &mut Table, corpus: &[(String, AcceptingDfa)]) {
    let (mut unit, mut counit, mut lang, mut thin) = Default::default();
    for (name, a) in corpus {
        let p = a.pointed().expect("pointed");
        Tally::add(&mut unit, name, laws::dfa_unit(&p));
        Tally::add(&mut counit, name, laws::dfa_counit(&p));
        Tally::add(&mut lang, name, laws::dfa_language_preservation(a));
        Tally::add(
            &mut thin,
            name,
            language_quotient(a).and_then(|q| laws::dfa_thinness(&p, &q)).and_then(|_| laws::dfa_thinness(&p, &p)),
        );
    }
    t.tally("2a", "unit C = TMC", &unit);
    t.tally("2b", "counit is a morphism", &counit);
    t.tally("2c", "language preservation at bound 2·|X|", &lang);
    t.tally("2d", "thinness by exhaustive morphism search", &thin);
}

fn structure(t: &mut Table, corpus: &[(String, AcceptingDfa)]) {
    let cfg = BoundConfig::default();
    let (mut idem, mut mu, mut emb) = Default::default();
    for (name, a) in corpus {
        let p = a.pointed().expect("pointed");
        Tally::add(&mut idem, name, laws::nuc_idempotence(&p));
        Tally::add(&mut mu, name, laws::mupl_laws(a, &cfg));
        Tally::add(&mut emb, name, laws::embed_cofree(a, &cfg));
    }
    let mut free = Tally::default();
    for (n, k) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3)] {
        for (j, d) in all_dfas(n, k).iter().enumerate() {
            free.add(&format!("{n}-state dfa {j} over {k} letters"), laws::free_is_product(d));
        }
    }
    t.tally("3a", "νC is idempotent", &idem);
    t.tally("3b", "μPL minimality, preformation closure and state languages", &mu);
    t.tally("3c", "free ≅ Π νC(x), every automaton up to 3 states", &free);
    t.tally("3d", "cofree embeds in μPL when the Boolean closure of ⟨c⟩ is P(X)", &emb);
}

fn lasso_corpus(seed: u64) -> Vec<(String, LassoAutomaton)> {
    let mut r = rng(seed);
    let mut out: Vec<(String, LassoAutomaton)> = (0..RANDOM_LASSOS)
        .map(|i| (format!("random lasso {i}"), random_lasso(&mut r, 3, 3, 2)))
        .collect();
    for k in 1..=3 {
        for (j, la) in all_unit_lassos(k).into_iter().enumerate() {
            out.push((format!("1+1 lasso {j} over {k} letters"), la));
        }
    }
    out
}

fn lasso(t: &mut Table) {
    let cfg = BoundConfig::default();
    let corpus = lasso_corpus(SEED_LASSO);
    let (mut unit, mut counit, mut teq, mut nucmin, mut syn, mut mu, mut brute) = Default::default();
    for (name, la) in &corpus {
        Tally::add(&mut unit, name, laws::lasso_unit(la));
        Tally::add(&mut counit, name, laws::lasso_counit_law(la));
        Tally::add(&mut teq, name, laws::lasso_t_is_eq(la));
        Tally::add(&mut nucmin, name, laws::lasso_nuc_of_minimal(la));
        Tally::add(&mut syn, name, syntactic_fixed_point(la));
        Tally::add(&mut mu, name, laws::lasso_mupl_minimal(la, &cfg));
        Tally::add(&mut brute, name, laws::lasso_brute_classes(la, LASSO_CLASS_BOUND));
    }
    t.tally("4a", "lasso unit", &unit);
    t.tally("4b", "lasso counit", &counit);
    t.tally("4c", "T = Eq", &teq);
    t.tally("4d", "νC(⟨L⟩) ≅ ⟨L⟩ for the minimal automaton ⟨L⟩", &nucmin);
    let spoke = laws::lasso_nuc_of_minimal(&spoke_parity_lasso());
    t.line(
        "4d'",
        "the two-state spoke example refutes νC(⟨L⟩) ≅ ⟨L⟩",
        spoke.is_err(),
        spoke.err().map(|e| e.to_string()).unwrap_or_default(),
    );
    t.tally("4e", "νC fixes the syntactic machine", &syn);
    t.tally("4f", "lasso μPL minimality", &mu);
    t.tally("4g", "brute-force class agreement at bound 3", &brute);
}

/// The machine of the syntactic congruence is a fixed point of νC.
fn syntactic_fixed_point(la: &LassoAutomaton) -> Result<()> {
    let m = lasso_machine(&syntactic_congruence(la)?);
    let n = lasso_nuc(&m)?;
    if lasso_isomorphic(&n, &m) {
        Ok(())
    } else {
        Err(aut_core::Violation::new("νC fixes the syntactic machine", "not isomorphic").into())
    }
}

fn omega(t: &mut Table) {
    let mut gamma = Tally::default();
    for k in 1..=2 {
        gamma.add(&format!("{k} letters"), laws::gamma_exactness(k, GAMMA_BOUND));
    }
    t.tally("5a", "γ-equivalence matches naive unrolling, all lassos within bound 4", &gamma);

    let corpus = lasso_corpus(SEED_OMEGA);
    let (mut sat, mut wilke, mut pull) = Default::default();
    for (name, la) in corpus.iter().filter(|(_, la)| la.alphabet().len() == 2) {
        Tally::add(&mut sat, name, laws::saturation_agrees(la, GAMMA_BOUND));
        Tally::add(&mut wilke, name, laws::wilke_laws(la));
        Tally::add(&mut pull, name, laws::wilke_monotonicity(la));
    }
    t.tally("5b", "E equals the bounded γ-closure at bound 4", &sat);
    t.tally("5c", "Wilke laws on every transition Wilke algebra", &wilke);
    t.tally("5d", "preimages of admissible sets along morphisms", &pull);

    let mut r = rng(SEED_MEET);
    let ab = Alphabet::letters(2);
    let mut meet = Tally::default();
    for i in 0..MEET_PAIRS {
        let pair = [random_lasso(&mut r, 3, 3, 2), random_lasso(&mut r, 3, 3, 2)];
        meet.add(&format!("pair {i}"), laws::meet_preservation(&ab, &pair));
    }
    t.tally("5e", "meet preservation on 50 random pairs", &meet);
    let known = laws::meet_preservation(&ab, &meet_pair());
    t.line(
        "5f",
        "meet preservation on the fixed counterexample pair",
        known.is_ok(),
        known.err().map(|e| e.to_string()).unwrap_or_default(),
    );
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn determinism(t: &mut Table) {
    let (dfa, lasso, spoke, cong) = (
        data("two_state.aut"),
        data("first_letter.aut"),
        data("spoke_parity.aut"),
        data("contains_a.aut"),
    );
    let dot = std::env::temp_dir().join(format!("aut-acceptance-{}.dot", std::process::id()));
    let dot = dot.display().to_string();
    let runs: Vec<Vec<&str>> = vec![
        vec!["reach", &dfa],
        vec!["reach", &lasso],
        vec!["tmonoid", &dfa],
        vec!["tmonoid", &cong],
        vec!["machine", &cong],
        vec!["nuc", &dfa, "--dot", &dot],
        vec!["nuc", &dfa, "--json"],
        vec!["free", &dfa],
        vec!["cofree", &dfa],
        vec!["cofree", &dfa, "--colorings", "singleton"],
        vec!["mupl", &dfa, "--dot", &dot],
        vec!["atoms", &dfa, "--class", "ε"],
        vec!["lasso", "tmonoid", &lasso],
        vec!["lasso", "machine", &lasso],
        vec!["lasso", "nuc", &spoke, "--dot", &dot],
        vec!["lasso", "mupl", &lasso],
        vec!["lasso", "minimal", &spoke],
        vec!["lasso", "syntactic", &spoke],
        vec!["lasso", "nerode", &spoke],
        vec!["omega", "gamma", ":ab", "a:ba"],
        vec!["omega", "adm", &lasso],
        vec!["omega", "saturated", &lasso],
        vec!["omega", "wilke", &spoke],
        vec!["omega", "meet", &lasso, &spoke],
        vec!["laws", &dfa, &lasso, &cong],
        vec!["laws", "--random", "3", "--seed", "9"],
    ];
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_aut")).args(args).output().expect("binary runs");
        let dot_bytes = if args.contains(&"--dot") {
            std::fs::read(&dot).unwrap_or_default()
        } else {
            Vec::new()
        };
        (out.status.code(), out.stdout, out.stderr, dot_bytes)
    };
    let mut differing = Vec::new();
    for args in &runs {
        if run(args) != run(args) {
            differing.push(args.join(" "));
        }
    }
    let _ = std::fs::remove_file(&dot);
    t.line(
        "6",
        "repeated CLI runs are byte-identical",
        differing.is_empty(),
        if differing.is_empty() {
            format!("{} commands", runs.len())
        } else {
            format!("differs: {}", differing.join("; "))
        },
    );
}

#[test]
fn acceptance() {
    let mut t = Table::new();
    golden(&mut t);
    let corpus = dfa_corpus();
    galois(&mut t, &corpus);
    structure(&mut t, &corpus);
    lasso(&mut t);
    omega(&mut t);
    determinism(&mut t);
    let unexpected: Vec<&str> = t
        .rows
        .iter()
        .filter(|(id, ok)| !ok && !KNOWN_FALSE.contains(&id.as_str()))
        .map(|(id, _)| id.as_str())
        .collect();
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
}
