//! Equations and coequations for deterministic automata: the comonad `νC`,
//! the free automaton, the lifted contravariant powerset, the monad `μPL`,
//! cofree automata and the atom decomposition of `μPL` states.

use std::collections::HashMap;

use crate::closure::orbit;
use crate::dfa::{bisimilarity_partition, first_difference, reachable_part, AcceptingDfa, Dfa, PointedDfa};
use crate::error::{ensure, Error, Result, Violation};
use crate::monoid::{machine, m_with_acceptance, t_with_acceptance, transition_congruence, transition_monoid, CongruenceRep};
use crate::word::{State, Word};

/// Largest base automaton whose subsets are stored as bitmasks.
const MAX_BITMASK_STATES: usize = 63;

/// `νC(p) = M T R (p)`.
pub fn nuc(p: &PointedDfa) -> PointedDfa {
    machine(&transition_monoid(p))
}

/// `νC` with acceptance: class `[w]` accepts iff `δ(x̄)(w) ∈ c`.
pub fn nuc_accepting(a: &AcceptingDfa) -> Result<AcceptingDfa> {
    m_with_acceptance(&t_with_acceptance(a)?)
}

/// The machine of the kernel of `δ♯` over every state of `d`, pointed at `[ε]`.
pub fn free(d: &Dfa) -> PointedDfa {
    machine(&free_congruence(d))
}

/// The kernel of `δ♯` quantified over every state: the class table behind
/// [`free`].
pub fn free_congruence(d: &Dfa) -> CongruenceRep {
    transition_congruence(d)
}

fn members(mask: u64) -> impl Iterator<Item = State> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

fn mask_of(states: impl IntoIterator<Item = State>) -> u64 {
    states.into_iter().fold(0, |m, s| m | 1 << s)
}

/// `δ̂(U, a) = {x | δ(x, a) ∈ U}`.
fn preimage(d: &Dfa, u: u64, a: usize) -> u64 {
    mask_of((0..d.state_count()).filter(|&x| u >> d.step(x, a) & 1 == 1))
}

fn check_bitmask_size(n: usize, what: &'static str) -> Result<()> {
    if n > MAX_BITMASK_STATES {
        return Err(Error::SizeGuard {
            what,
            needed: n,
            limit: MAX_BITMASK_STATES,
        });
    }
    Ok(())
}

/// The lifted contravariant powerset of an accepting automaton.
///
/// All subsets are materialized. The subsets generated from `c` under `δ̂`
/// (written `⟨c⟩`) come first, in breadth-first order with `c` at index 0;
/// the remaining subsets follow in binary-counter order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowersetDfa {
    base: AcceptingDfa,
    subsets: Vec<u64>,
    generated: usize,
    dfa: Dfa,
}

/// `⟨c⟩` with its transition table, in BFS order.
fn generated_subsets(a: &AcceptingDfa) -> Result<(Vec<u64>, Vec<usize>)> {
    check_bitmask_size(a.state_count(), "subset automaton states")?;
    let d = a.dfa();
    let c = mask_of(a.accepting_states());
    let orb = orbit(d.alphabet().len(), vec![(c, Word::empty())], |&u, x| preimage(d, u, x));
    Ok((orb.items, orb.step))
}

/// Builds the full powerset automaton; fails if `2^|X|` exceeds `2^limit`.
pub fn powerset_lift(a: &AcceptingDfa, limit: usize) -> Result<PowersetDfa> {
    let n = a.state_count();
    if n > limit.min(MAX_BITMASK_STATES) {
        return Err(Error::SizeGuard {
            what: "powerset base states",
            needed: n,
            limit: limit.min(MAX_BITMASK_STATES),
        });
    }
    let (mut subsets, _) = generated_subsets(a)?;
    let generated = subsets.len();
    let mut seen: Vec<bool> = vec![false; 1 << n];
    for &u in &subsets {
        seen[u as usize] = true;
    }
    subsets.extend((0..1u64 << n).filter(|&u| !seen[u as usize]));
    let index: HashMap<u64, State> = subsets.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let d = a.dfa();
    let k = d.alphabet().len();
    let delta = subsets
        .iter()
        .flat_map(|&u| (0..k).map(move |x| (u, x)))
        .map(|(u, x)| index[&preimage(d, u, x)])
        .collect();
    let dfa = Dfa::new(d.alphabet().clone(), subsets.len(), delta)?;
    Ok(PowersetDfa {
        base: a.clone(),
        subsets,
        generated,
        dfa,
    })
}

impl PowersetDfa {
    pub fn base(&self) -> &AcceptingDfa {
        &self.base
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn state_count(&self) -> usize {
        self.subsets.len()
    }

    pub fn subset_members(&self, s: State) -> Vec<State> {
        members(self.subsets[s]).collect()
    }

    pub fn subset_mask(&self, s: State) -> u64 {
        self.subsets[s]
    }

    pub fn index_of(&self, states: &[State]) -> Option<State> {
        let m = mask_of(states.iter().copied());
        self.subsets.iter().position(|&u| u == m)
    }

    /// `|⟨c⟩|`.
    pub fn generated_count(&self) -> usize {
        self.generated
    }

    /// The whole powerset pointed at `c`.
    pub fn pointed(&self) -> PointedDfa {
        PointedDfa::new(self.dfa.clone(), 0).expect("c is stored first")
    }

    /// `⟨c⟩` pointed at `c`; its states are the first
    /// [`generated_count`](Self::generated_count) states of [`dfa`](Self::dfa).
    pub fn generated(&self) -> PointedDfa {
        reachable_part(&self.pointed()).0
    }
}

/// `μPL(δ, c)`: the automaton of all subsets of the classes of `≈`, the
/// kernel of `δ̂♯` on `⟨c⟩`.
///
/// State `i` is the subset whose bit `q` is set iff class `q` belongs to it.
/// `U -a-> {q | [q·a] ∈ U}`, and `U` accepts iff `[ε] ∈ U`, so the language of
/// `U` is `{u | [u^r] ∈ U}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuplAutomaton {
    classes: CongruenceRep,
    dfa: Dfa,
    accepting: Vec<bool>,
    eta: Vec<State>,
    initial: Option<State>,
}

/// Subsets of a set of `k` classes, checked against `max_classes`.
pub(crate) fn subset_count(k: usize, max_classes: usize) -> Result<usize> {
    let limit = max_classes.min(MAX_BITMASK_STATES);
    if k > limit {
        return Err(Error::SizeGuard {
            what: "congruence classes for the subset construction",
            needed: k,
            limit,
        });
    }
    Ok(1usize << k)
}

pub fn mupl(a: &AcceptingDfa, max_classes: usize) -> Result<MuplAutomaton> {
    let (subsets, step) = generated_subsets(a)?;
    let k = a.alphabet().len();
    let gen = Dfa::new(a.alphabet().clone(), subsets.len(), step)?;
    let classes = transition_monoid(&gen.pointed(0)?);
    let n = subset_count(classes.class_count(), max_classes)?;
    let delta = (0..n * k)
        .map(|i| {
            let (u, x) = (i / k, i % k);
            (0..classes.class_count())
                .filter(|&q| u >> classes.right_step(q, x) & 1 == 1)
                .fold(0, |m, q| m | 1 << q)
        })
        .collect();
    let dfa = Dfa::new(a.alphabet().clone(), n, delta)?;
    let accepting = (0..n).map(|u| u >> classes.eps_class() & 1 == 1).collect();
    // η(x) = {[u] | δ(x)(u^r) ∈ c}, i.e. the classes whose representative
    // reaches a subset of ⟨c⟩ containing x
    let d = a.dfa();
    let eta = (0..a.state_count())
        .map(|x| {
            (0..classes.class_count())
                .filter(|&q| a.is_accepting(d.run_word(x, &classes.representative(q).reversed())))
                .fold(0, |m, q| m | 1 << q)
        })
        .collect::<Vec<State>>();
    let initial = a.initial().map(|x| eta[x]);
    Ok(MuplAutomaton {
        classes,
        dfa,
        accepting,
        eta,
        initial,
    })
}

impl MuplAutomaton {
    pub fn classes(&self) -> &CongruenceRep {
        &self.classes
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn state_count(&self) -> usize {
        self.dfa.state_count()
    }

    pub fn initial(&self) -> Option<State> {
        self.initial
    }

    pub fn is_accepting(&self, u: State) -> bool {
        self.accepting[u]
    }

    /// Classes contained in state `u`.
    pub fn members(&self, u: State) -> Vec<usize> {
        members(u as u64).filter(|&q| q < self.classes.class_count()).collect()
    }

    pub fn state_of(&self, classes: &[usize]) -> State {
        mask_of(classes.iter().copied()) as State
    }

    /// The unit `η` as a map from base states.
    pub fn eta(&self) -> &[State] {
        &self.eta
    }

    pub fn to_accepting(&self) -> AcceptingDfa {
        AcceptingDfa::new(self.dfa.clone(), self.accepting.clone(), self.initial).expect("consistent sizes")
    }

    /// `u ∈ L(U)` decided through the class table: `[u^r] ∈ U`.
    pub fn in_language(&self, u: State, w: &Word) -> bool {
        u >> self.classes.class_of(&w.reversed()) & 1 == 1
    }

    /// A label such as `{[ε],[b]}` built from class representatives.
    pub fn label(&self, u: State) -> String {
        let ab = self.classes.alphabet();
        let parts: Vec<String> = self
            .members(u)
            .into_iter()
            .map(|q| format!("[{}]", ab.render(self.classes.representative(q))))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// The unit `η: (X, δ, c) → μPL(δ, c)`, verified to preserve acceptance and
/// commute with transitions.
pub fn unit_eta(a: &AcceptingDfa, max_classes: usize) -> Result<Vec<State>> {
    let m = mupl(a, max_classes)?;
    check_eta(a, &m)?;
    Ok(m.eta.clone())
}

pub(crate) fn check_eta(a: &AcceptingDfa, m: &MuplAutomaton) -> Result<(), Violation> {
    for x in 0..a.state_count() {
        ensure(a.is_accepting(x) == m.is_accepting(m.eta[x]), "η preserves acceptance", || {
            format!("state {x}")
        })?;
        for c in 0..a.alphabet().len() {
            ensure(
                m.eta[a.dfa().step(x, c)] == m.dfa.step(m.eta[x], c),
                "η commutes with transitions",
                || format!("state {x}, letter {c}"),
            )?;
        }
    }
    Ok(())
}

/// Which colorings `U ⊆ X` generate cofree languages `L(x, U)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CofreeMode {
    /// Every subset of states.
    #[default]
    All,
    /// Singletons only.
    Singleton,
}

/// The automaton of languages `L(x, U)`, one state per distinct language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cofree {
    pub automaton: AcceptingDfa,
    /// For each state, the least pair `(x, U)` denoting its language.
    pub labels: Vec<(State, Vec<State>)>,
}

pub fn cofree(d: &Dfa, mode: CofreeMode, limit: usize) -> Result<Cofree> {
    let n = d.state_count();
    let colorings: Vec<u64> = match mode {
        CofreeMode::Singleton => (0..n).map(|x| 1u64 << x).collect(),
        CofreeMode::All => {
            if n > limit.min(MAX_BITMASK_STATES) {
                return Err(Error::SizeGuard {
                    what: "cofree colorings",
                    needed: n,
                    limit: limit.min(MAX_BITMASK_STATES),
                });
            }
            (0..1u64 << n).collect()
        }
    };
    // disjoint union over colorings, state (U, x) at index U_i * n + x
    let k = d.alphabet().len();
    let m = colorings.len() * n;
    let delta = (0..m * k)
        .map(|i| {
            let (s, c) = (i / k, i % k);
            (s / n) * n + d.step(s % n, c)
        })
        .collect();
    let accepting = (0..m).map(|s| colorings[s / n] >> (s % n) & 1 == 1).collect();
    let union = AcceptingDfa::new(Dfa::new(d.alphabet().clone(), m, delta)?, accepting, None)?;
    let part = bisimilarity_partition(&union);
    let quotient_delta = part
        .classes()
        .iter()
        .flat_map(|cls| (0..k).map(move |c| (cls[0], c)))
        .map(|(s, c)| part.class_of(union.dfa().step(s, c)))
        .collect();
    let classes = part.classes();
    let quotient = AcceptingDfa::new(
        Dfa::new(d.alphabet().clone(), part.class_count(), quotient_delta)?,
        classes.iter().map(|cls| union.is_accepting(cls[0])).collect(),
        None,
    )?;
    let labels = classes
        .iter()
        .map(|cls| (cls[0] % n, members(colorings[cls[0] / n]).collect()))
        .collect();
    Ok(Cofree {
        automaton: quotient,
        labels,
    })
}

/// A literal `L(x, U)` or its complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Literal {
    pub state: State,
    pub subset: Vec<State>,
    pub negated: bool,
}

/// A conjunction of literals; the empty conjunction denotes `Σ*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomFormula {
    pub literals: Vec<Literal>,
}

/// The atom `{q}` of `μPL(δ, c)` as the intersection over `x ∈ X` and
/// `U ∈ ⟨c⟩` of `L(x, U)` when `δ(x)(w^r) ∈ U` and of its complement
/// otherwise, where `w` represents `q`.
pub fn atom_decomposition(a: &AcceptingDfa, q: usize, max_classes: usize) -> Result<AtomFormula> {
    let m = mupl(a, max_classes)?;
    if q >= m.classes.class_count() {
        return Err(Error::Invalid(format!("class {q} out of range")));
    }
    let (subsets, _) = generated_subsets(a)?;
    let wr = m.classes.representative(q).reversed();
    let mut literals = Vec::new();
    for x in 0..a.state_count() {
        let end = a.dfa().run_word(x, &wr);
        for &u in &subsets {
            literals.push(Literal {
                state: x,
                subset: members(u).collect(),
                negated: u >> end & 1 == 0,
            });
        }
    }
    Ok(AtomFormula { literals })
}

impl AtomFormula {
    pub fn eval(&self, d: &Dfa, w: &Word) -> bool {
        self.literals
            .iter()
            .all(|l| l.subset.contains(&d.run_word(l.state, w)) != l.negated)
    }

    /// Rewrites complements `¬L(x, U)` as `L(x, X∖U)`, drops literals whose
    /// language is `Σ*`, and removes duplicates.
    pub fn simplified(&self, d: &Dfa) -> AtomFormula {
        let n = d.state_count();
        let mut out: Vec<Literal> = Vec::new();
        for l in &self.literals {
            let subset: Vec<State> = if l.negated {
                (0..n).filter(|s| !l.subset.contains(s)).collect()
            } else {
                l.subset.clone()
            };
            let reach = crate::dfa::bfs_order(d, l.state);
            if reach.iter().all(|s| subset.contains(s)) {
                continue;
            }
            let lit = Literal {
                state: l.state,
                subset,
                negated: false,
            };
            if !out.contains(&lit) {
                out.push(lit);
            }
        }
        AtomFormula { literals: out }
    }

    /// Renders with the given state names, e.g. `L(x,{x}) ∩ L(y,{y})`.
    pub fn render(&self, name: impl Fn(State) -> String) -> String {
        if self.literals.is_empty() {
            return "Σ*".to_string();
        }
        self.literals
            .iter()
            .map(|l| {
                let set: Vec<String> = l.subset.iter().map(|&s| name(s)).collect();
                let term = format!("L({},{{{}}})", name(l.state), set.join(","));
                if l.negated {
                    format!("¬{term}")
                } else {
                    term
                }
            })
            .collect::<Vec<_>>()
            .join(" ∩ ")
    }
}

/// Structural preformation checks on `μPL`: Boolean closure of the state set,
/// right derivatives match the transitions, and left derivatives land on the
/// state `{q | [a·q] ∈ U}` as certified by the left action.
pub fn preformation_closure_check(m: &MuplAutomaton) -> Result<(), Violation> {
    let c = &m.classes;
    let k = c.class_count();
    let full = (1usize << k) - 1;
    ensure(m.state_count() == 1 << k, "every subset of classes is a state", || {
        format!("{} states for {k} classes", m.state_count())
    })?;
    for u in 0..m.state_count() {
        ensure(
            m.is_accepting(full ^ u) != m.is_accepting(u),
            "complement",
            || m.label(u),
        )?;
        for a in 0..c.alphabet().len() {
            let right = (0..k).filter(|&q| u >> c.right_step(q, a) & 1 == 1).fold(0, |s, q| s | 1 << q);
            ensure(m.dfa.step(u, a) == right, "right derivative", || {
                format!("{} by {}", m.label(u), c.alphabet().name(a))
            })?;
            let left = (0..k).filter(|&q| u >> c.left_step(a, q) & 1 == 1).fold(0, |s, q| s | 1 << q);
            ensure(left < m.state_count(), "left derivative", || m.label(u))?;
            // the complement of a derivative is the derivative of the complement
            ensure(m.dfa.step(full ^ u, a) == full ^ right, "derivative commutes with complement", || {
                m.label(u)
            })?;
        }
    }
    for q in 0..k {
        for a in 0..c.alphabet().len() {
            let w = c.representative(q).prepend(a);
            ensure(c.class_of(&w) == c.left_step(a, q), "left action certificate", || {
                format!("{:?}", w)
            })?;
        }
    }
    Ok(())
}

/// Result of checking that every cofree language embeds into `μPL`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbedOutcome {
    /// `⟨c⟩` does not generate `P(X)` as a Boolean algebra.
    HypothesisFailed,
    Embedded,
    Failed(Violation),
}

/// Whether the Boolean closure of `⟨c⟩` is all of `P(X)`, i.e. `⟨c⟩` separates
/// every pair of states.
pub fn generates_powerset(a: &AcceptingDfa) -> Result<bool> {
    let (subsets, _) = generated_subsets(a)?;
    let n = a.state_count();
    Ok((0..n).all(|x| {
        (x + 1..n).all(|y| subsets.iter().any(|&u| (u >> x & 1) != (u >> y & 1)))
    }))
}

pub fn embed_cofree_check(a: &AcceptingDfa, max_classes: usize, limit: usize) -> Result<EmbedOutcome> {
    if !generates_powerset(a)? {
        return Ok(EmbedOutcome::HypothesisFailed);
    }
    let n = a.state_count();
    if n > limit.min(MAX_BITMASK_STATES) {
        return Err(Error::SizeGuard {
            what: "cofree colorings",
            needed: n,
            limit: limit.min(MAX_BITMASK_STATES),
        });
    }
    let m = mupl(a, max_classes)?;
    let target = m.to_accepting();
    let c = &m.classes;
    let d = a.dfa();
    for u in 0..1u64 << n {
        let colored = AcceptingDfa::from_states(d.clone(), &members(u).collect::<Vec<_>>(), None)?;
        for x in 0..n {
            let v = (0..c.class_count())
                .filter(|&q| u >> d.run_word(x, &c.representative(q).reversed()) & 1 == 1)
                .fold(0, |s, q| s | 1 << q);
            if let Some(w) = first_difference(&colored, x, &target, v) {
                return Ok(EmbedOutcome::Failed(Violation::new(
                    "cofree language embeds into μPL",
                    format!("L({x}, {:?}) differs from {} on {:?}", members(u).collect::<Vec<_>>(), m.label(v), w),
                )));
            }
        }
    }
    Ok(EmbedOutcome::Embedded)
}
