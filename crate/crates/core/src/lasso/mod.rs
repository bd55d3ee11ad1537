//! Two-sorted lasso automata `(X₁, X₂, δ₁, δ₂, δ₃)` reading lassos `(u, v)`:
//! the spoke `u` runs through `δ₁`, the first loop letter crosses into `X₂`
//! through `δ₂`, and the rest of the loop runs through `δ₃`.

mod congruence;
mod mupl;
mod syntactic;

pub use congruence::{
    eq_set, lasso_counit, lasso_machine, lasso_transition, satisfies_coequations,
    satisfies_coequations_all_colorings, satisfies_equations, LassoCongruenceRep, Verdict,
};
pub use mupl::{lasso_mupl, lasso_nuc, lasso_powerset_lift, LassoMupl};
pub(crate) use congruence::behaviour_congruence;
pub use syntactic::{
    derivative_loop, derivative_spoke, derivative_word, myhill_nerode, syntactic_congruence, NerodeClasses,
};

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::dfa::{bisimilarity_partition, AcceptingDfa, Dfa};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::{words_between, words_upto, Alphabet, State, Symbol, Word};

/// A lasso `(u, v)` with nonempty loop, standing for `u v^ω`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lasso {
    spoke: Word,
    cycle: Word,
}

impl Lasso {
    pub fn new(spoke: Word, cycle: Word) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::Invalid("a lasso loop must be nonempty".into()));
        }
        Ok(Lasso { spoke, cycle })
    }

    pub fn spoke(&self) -> &Word {
        &self.spoke
    }

    pub fn cycle(&self) -> &Word {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.spoke.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(v^r, a·u^r)` for `(u, a·v)`: the reversal used by the lasso unit.
    pub fn reversal(&self) -> Lasso {
        let a = self.cycle.first().expect("nonempty loop");
        Lasso {
            spoke: self.cycle.tail().reversed(),
            cycle: self.spoke.reversed().prepend(a),
        }
    }

    /// Parses `SPOKE:LOOP`, e.g. `a:ba` or `:ab`.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Lasso> {
        let (u, v) = text
            .split_once(':')
            .ok_or_else(|| Error::Invalid(format!("lasso {text:?} must have the form SPOKE:LOOP")))?;
        Lasso::new(alphabet.parse_word(u)?, alphabet.parse_word(v)?)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!("({},{})", alphabet.render(&self.spoke), alphabet.render(&self.cycle))
    }
}

/// Total length first, then spoke, then loop (each shortlex).
impl Ord for Lasso {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.spoke.cmp(&other.spoke))
            .then_with(|| self.cycle.cmp(&other.cycle))
    }
}

impl PartialOrd for Lasso {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.spoke, self.cycle)
    }
}

/// Lassos with `|spoke| ≤ max_spoke` and `1 ≤ |loop| ≤ max_loop`, in lasso
/// order.
pub fn lassos_upto(k: usize, max_spoke: usize, max_loop: usize) -> Vec<Lasso> {
    let mut out: Vec<Lasso> = words_upto(k, max_spoke)
        .flat_map(|u| {
            words_between(k, 1, max_loop).map(move |v| Lasso {
                spoke: u.clone(),
                cycle: v,
            })
        })
        .collect();
    out.sort();
    out
}

/// A two-sorted lasso automaton with optional initial state in `X₁` and
/// optional accepting set in `X₂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LassoAutomaton {
    alphabet: Alphabet,
    n1: usize,
    n2: usize,
    /// `delta1[x * |Σ| + a] ∈ X₁`
    delta1: Vec<State>,
    /// `delta2[x * |Σ| + a] ∈ X₂`
    delta2: Vec<State>,
    /// `delta3[y * |Σ| + a] ∈ X₂`
    delta3: Vec<State>,
    initial: Option<State>,
    accepting: Option<Vec<bool>>,
}

impl LassoAutomaton {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alphabet: Alphabet,
        n1: usize,
        n2: usize,
        delta1: Vec<State>,
        delta2: Vec<State>,
        delta3: Vec<State>,
        initial: Option<State>,
        accepting: Option<Vec<bool>>,
    ) -> Result<Self> {
        let k = alphabet.len();
        if n1 == 0 || n2 == 0 {
            return Err(Error::Invalid("both sorts need at least one state".into()));
        }
        for (name, table, rows, bound) in [
            ("trans1", &delta1, n1, n1),
            ("trans2", &delta2, n1, n2),
            ("trans3", &delta3, n2, n2),
        ] {
            if table.len() != rows * k {
                return Err(Error::Invalid(format!("{name} has {} entries, expected {}", table.len(), rows * k)));
            }
            if let Some(bad) = table.iter().find(|&&t| t >= bound) {
                return Err(Error::Invalid(format!("{name} target {bad} out of range")));
            }
        }
        if initial.is_some_and(|i| i >= n1) {
            return Err(Error::Invalid("initial state out of range".into()));
        }
        if accepting.as_ref().is_some_and(|c| c.len() != n2) {
            return Err(Error::Invalid("accepting vector has the wrong length".into()));
        }
        Ok(LassoAutomaton {
            alphabet,
            n1,
            n2,
            delta1,
            delta2,
            delta3,
            initial,
            accepting,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// `|X₁|`.
    pub fn spoke_count(&self) -> usize {
        self.n1
    }

    /// `|X₂|`.
    pub fn loop_count(&self) -> usize {
        self.n2
    }

    pub fn step1(&self, x: State, a: Symbol) -> State {
        self.delta1[x * self.alphabet.len() + a]
    }

    pub fn step2(&self, x: State, a: Symbol) -> State {
        self.delta2[x * self.alphabet.len() + a]
    }

    pub fn step3(&self, y: State, a: Symbol) -> State {
        self.delta3[y * self.alphabet.len() + a]
    }

    pub fn tables(&self) -> (&[State], &[State], &[State]) {
        (&self.delta1, &self.delta2, &self.delta3)
    }

    pub fn initial(&self) -> Option<State> {
        self.initial
    }

    pub fn accepting(&self) -> Option<&[bool]> {
        self.accepting.as_deref()
    }

    pub fn is_accepting(&self, y: State) -> bool {
        self.accepting.as_ref().is_some_and(|c| c[y])
    }

    pub fn accepting_states(&self) -> Vec<State> {
        (0..self.n2).filter(|&y| self.is_accepting(y)).collect()
    }

    pub fn with_initial(&self, initial: Option<State>) -> Result<Self> {
        let mut out = self.clone();
        if initial.is_some_and(|i| i >= self.n1) {
            return Err(Error::Invalid("initial state out of range".into()));
        }
        out.initial = initial;
        Ok(out)
    }

    pub fn with_accepting(&self, accepting: Option<Vec<bool>>) -> Result<Self> {
        if accepting.as_ref().is_some_and(|c| c.len() != self.n2) {
            return Err(Error::Invalid("accepting vector has the wrong length".into()));
        }
        let mut out = self.clone();
        out.accepting = accepting;
        Ok(out)
    }

    pub(crate) fn require_initial(&self, what: &'static str) -> Result<State> {
        self.initial.ok_or(Error::MissingInitial(what))
    }

    pub(crate) fn require_accepting(&self, what: &'static str) -> Result<&[bool]> {
        self.accepting.as_deref().ok_or(Error::MissingAccepting(what))
    }

    /// `δ₁(x)(u)`.
    pub fn run_spoke(&self, x: State, u: &Word) -> State {
        u.letters().iter().fold(x, |x, &a| self.step1(x, a))
    }

    /// `δ₃(y)(w)`.
    pub fn run_loop_tail(&self, y: State, w: &Word) -> State {
        w.letters().iter().fold(y, |y, &a| self.step3(y, a))
    }

    /// `δ∘(x)(v)` for nonempty `v`: `δ₂` on the first letter, `δ₃` after.
    pub fn run_cycle(&self, x: State, v: &Word) -> State {
        let a = v.first().expect("nonempty loop");
        self.run_loop_tail(self.step2(x, a), &v.tail())
    }

    /// `δ(x, (u, v)) = δ∘(δ₁(x)(u), v)`.
    pub fn run_lasso(&self, x: State, l: &Lasso) -> State {
        self.run_cycle(self.run_spoke(x, &l.spoke), &l.cycle)
    }

    pub fn accepts_from(&self, x: State, l: &Lasso) -> bool {
        self.is_accepting(self.run_lasso(x, l))
    }

    pub fn accepts(&self, l: &Lasso) -> Result<bool> {
        let x = self.require_initial("accepts")?;
        self.require_accepting("accepts")?;
        Ok(self.accepts_from(x, l))
    }

    /// The one-sorted automaton `(X₁, δ₁)`.
    pub fn spoke_dfa(&self) -> Dfa {
        Dfa::new(self.alphabet.clone(), self.n1, self.delta1.clone()).expect("valid table")
    }

    /// The one-sorted automaton `(X₂, δ₃)` with the accepting set, if any.
    pub fn loop_dfa(&self) -> AcceptingDfa {
        let dfa = Dfa::new(self.alphabet.clone(), self.n2, self.delta3.clone()).expect("valid table");
        AcceptingDfa::new(dfa, self.accepting.clone().unwrap_or(vec![false; self.n2]), None).expect("valid sizes")
    }
}

/// Accepted lassos from `x` within the given bounds, in lasso order.
pub fn lasso_language_upto(la: &LassoAutomaton, x: State, max_spoke: usize, max_loop: usize) -> Result<Vec<Lasso>> {
    la.require_accepting("lasso_language_upto")?;
    Ok(lassos_upto(la.alphabet.len(), max_spoke, max_loop)
        .into_iter()
        .filter(|l| la.accepts_from(x, l))
        .collect())
}

/// Index maps produced by restricting a lasso automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortMaps {
    pub spoke: Vec<Option<State>>,
    pub cycle: Vec<Option<State>>,
}

/// The part reachable from the initial state: `X₁` by BFS through `δ₁`, then
/// `X₂` by BFS seeded with `δ₂` images (in `X₁` order, letters in alphabet
/// order) and closed under `δ₃`.
pub fn lasso_reachable_part(la: &LassoAutomaton) -> Result<(LassoAutomaton, SortMaps)> {
    let start = la.require_initial("lasso_reachable_part")?;
    let k = la.alphabet.len();
    let order1 = crate::dfa::bfs_order(&la.spoke_dfa(), start);
    let mut map1 = vec![None; la.n1];
    for (i, &x) in order1.iter().enumerate() {
        map1[x] = Some(i);
    }
    let mut map2 = vec![None; la.n2];
    let mut order2 = Vec::new();
    let mut visit = |y: State, order2: &mut Vec<State>| {
        if map2[y].is_none() {
            map2[y] = Some(order2.len());
            order2.push(y);
        }
    };
    for &x in &order1 {
        for a in 0..k {
            visit(la.step2(x, a), &mut order2);
        }
    }
    let mut i = 0;
    while i < order2.len() {
        let y = order2[i];
        for a in 0..k {
            visit(la.step3(y, a), &mut order2);
        }
        i += 1;
    }
    let rows = |order: &[State], f: &dyn Fn(State, Symbol) -> State, map: &[Option<State>]| -> Vec<State> {
        order
            .iter()
            .flat_map(|&s| (0..k).map(move |a| (s, a)))
            .map(|(s, a)| map[f(s, a)].expect("reachable"))
            .collect()
    };
    let delta1 = rows(&order1, &|x, a| la.step1(x, a), &map1);
    let delta2 = rows(&order1, &|x, a| la.step2(x, a), &map2);
    let delta3 = rows(&order2, &|y, a| la.step3(y, a), &map2);
    let accepting = la
        .accepting
        .as_ref()
        .map(|c| order2.iter().map(|&y| c[y]).collect());
    let out = LassoAutomaton::new(la.alphabet.clone(), order1.len(), order2.len(), delta1, delta2, delta3, Some(0), accepting)?;
    Ok((
        out,
        SortMaps {
            spoke: map1,
            cycle: map2,
        },
    ))
}

/// Whether every state of both sorts is reachable from the initial state.
pub fn is_lasso_reachable(la: &LassoAutomaton) -> bool {
    lasso_reachable_part(la).is_ok_and(|(r, _)| r.n1 == la.n1 && r.n2 == la.n2)
}

/// A two-sorted state map `(h₁, h₂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoMorphism {
    pub spoke: Vec<State>,
    pub cycle: Vec<State>,
}

/// Whether `h` preserves the initial state and commutes with `δ₁`, `δ₂`, `δ₃`.
pub fn is_lasso_morphism(src: &LassoAutomaton, dst: &LassoAutomaton, h: &LassoMorphism) -> bool {
    let k = src.alphabet.len();
    src.alphabet == dst.alphabet
        && h.spoke.len() == src.n1
        && h.cycle.len() == src.n2
        && match (src.initial, dst.initial) {
            (Some(i), Some(j)) => h.spoke[i] == j,
            (None, _) => true,
            (Some(_), None) => false,
        }
        && (0..src.n1).all(|x| {
            (0..k).all(|a| {
                h.spoke[src.step1(x, a)] == dst.step1(h.spoke[x], a)
                    && h.cycle[src.step2(x, a)] == dst.step2(h.spoke[x], a)
            })
        })
        && (0..src.n2).all(|y| (0..k).all(|a| h.cycle[src.step3(y, a)] == dst.step3(h.cycle[y], a)))
}

/// The morphism of pointed lasso automata `src → dst` when `src` is
/// reachable and a morphism exists.
pub fn unique_lasso_morphism(src: &LassoAutomaton, dst: &LassoAutomaton) -> Option<LassoMorphism> {
    if src.alphabet != dst.alphabet {
        return None;
    }
    let (i, j) = (src.initial?, dst.initial?);
    let k = src.alphabet.len();
    let mut h1: Vec<Option<State>> = vec![None; src.n1];
    let mut h2: Vec<Option<State>> = vec![None; src.n2];
    fn assign(slot: &mut Option<State>, v: State) -> Option<bool> {
        match *slot {
            None => {
                *slot = Some(v);
                Some(true)
            }
            Some(w) if w == v => Some(false),
            Some(_) => None,
        }
    }
    h1[i] = Some(j);
    let mut queue = VecDeque::from([i]);
    let mut queue2 = VecDeque::new();
    while let Some(x) = queue.pop_front() {
        let hx = h1[x]?;
        for a in 0..k {
            if assign(&mut h1[src.step1(x, a)], dst.step1(hx, a))? {
                queue.push_back(src.step1(x, a));
            }
            if assign(&mut h2[src.step2(x, a)], dst.step2(hx, a))? {
                queue2.push_back(src.step2(x, a));
            }
        }
    }
    while let Some(y) = queue2.pop_front() {
        let hy = h2[y]?;
        for a in 0..k {
            if assign(&mut h2[src.step3(y, a)], dst.step3(hy, a))? {
                queue2.push_back(src.step3(y, a));
            }
        }
    }
    Some(LassoMorphism {
        spoke: h1.into_iter().collect::<Option<_>>()?,
        cycle: h2.into_iter().collect::<Option<_>>()?,
    })
}

/// Isomorphism of reachable pointed lasso automata.
pub fn lasso_isomorphic(a: &LassoAutomaton, b: &LassoAutomaton) -> bool {
    a.n1 == b.n1 && a.n2 == b.n2 && unique_lasso_morphism(a, b).is_some() && unique_lasso_morphism(b, a).is_some()
}

/// Observational equivalence on both sorts: `X₂` states are identified iff
/// `δ₃` reads the same words into the accepting set; `X₁` states iff they
/// accept the same lassos.
pub fn lasso_bisimilarity(la: &LassoAutomaton) -> (Partition, Partition) {
    let k = la.alphabet.len();
    let p2 = bisimilarity_partition(&la.loop_dfa());
    let mut p1 = Partition::from_labels(
        &(0..la.n1)
            .map(|x| (0..k).map(|a| p2.class_of(la.step2(x, a))).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    loop {
        let sigs: Vec<Vec<usize>> = (0..la.n1)
            .map(|x| {
                let mut sig = vec![p1.class_of(x)];
                sig.extend((0..k).map(|a| p1.class_of(la.step1(x, a))));
                sig
            })
            .collect();
        let next = Partition::from_labels(&sigs);
        if next.class_count() == p1.class_count() {
            return (next, p2);
        }
        p1 = next;
    }
}

/// `⟨L⟩`: the reachable part quotiented by observational equivalence.
pub fn lasso_minimal(la: &LassoAutomaton) -> Result<LassoAutomaton> {
    la.require_accepting("lasso_minimal")?;
    let (r, _) = lasso_reachable_part(la)?;
    let (p1, p2) = lasso_bisimilarity(&r);
    let quotient = quotient(&r, &p1, &p2)?;
    Ok(lasso_reachable_part(&quotient)?.0)
}

fn quotient(la: &LassoAutomaton, p1: &Partition, p2: &Partition) -> Result<LassoAutomaton> {
    let k = la.alphabet.len();
    let c1 = p1.classes();
    let c2 = p2.classes();
    let rows = |cls: &[Vec<State>], part: &Partition, f: &dyn Fn(State, Symbol) -> State| -> Vec<State> {
        cls.iter()
            .flat_map(|c| (0..k).map(move |a| (c[0], a)))
            .map(|(s, a)| part.class_of(f(s, a)))
            .collect()
    };
    LassoAutomaton::new(
        la.alphabet.clone(),
        c1.len(),
        c2.len(),
        rows(&c1, p1, &|x, a| la.step1(x, a)),
        rows(&c1, p2, &|x, a| la.step2(x, a)),
        rows(&c2, p2, &|y, a| la.step3(y, a)),
        la.initial.map(|i| p1.class_of(i)),
        la.accepting.as_ref().map(|c| c2.iter().map(|cls| c[cls[0]]).collect()),
    )
}

/// The reachable two-sorted product with pointwise transitions. The empty
/// product has one state in each sort.
pub fn reachable_meet(alphabet: &Alphabet, las: &[LassoAutomaton]) -> Result<LassoAutomaton> {
    for la in las {
        alphabet.check_same(&la.alphabet)?;
    }
    let k = alphabet.len();
    let initial: Vec<State> = las
        .iter()
        .map(|la| la.require_initial("reachable_meet"))
        .collect::<Result<_>>()?;
    let mut idx1 = std::collections::HashMap::from([(initial.clone(), 0usize)]);
    let mut tuples1 = vec![initial];
    let mut idx2 = std::collections::HashMap::new();
    let mut tuples2: Vec<Vec<State>> = Vec::new();
    let intern = |t: Vec<State>, idx: &mut std::collections::HashMap<Vec<State>, usize>, list: &mut Vec<Vec<State>>| {
        *idx.entry(t.clone()).or_insert_with(|| {
            list.push(t);
            list.len() - 1
        })
    };
    let (mut d1, mut d2, mut d3) = (Vec::new(), Vec::new(), Vec::new());
    let mut i = 0;
    while i < tuples1.len() {
        for a in 0..k {
            let t = tuples1[i].clone();
            let n1: Vec<State> = t.iter().zip(las).map(|(&x, la)| la.step1(x, a)).collect();
            let n2: Vec<State> = t.iter().zip(las).map(|(&x, la)| la.step2(x, a)).collect();
            d1.push(intern(n1, &mut idx1, &mut tuples1));
            d2.push(intern(n2, &mut idx2, &mut tuples2));
        }
        i += 1;
    }
    let mut j = 0;
    while j < tuples2.len() {
        for a in 0..k {
            let t: Vec<State> = tuples2[j].iter().zip(las).map(|(&y, la)| la.step3(y, a)).collect();
            d3.push(intern(t, &mut idx2, &mut tuples2));
        }
        j += 1;
    }
    let out = LassoAutomaton::new(alphabet.clone(), tuples1.len(), tuples2.len(), d1, d2, d3, Some(0), None)?;
    Ok(lasso_reachable_part(&out)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::first_letter_lasso;

    fn ab() -> Alphabet {
        Alphabet::letters(2)
    }

    fn l(s: &str) -> Lasso {
        Lasso::parse(&ab(), s).unwrap()
    }

    #[test]
    fn runs() {
        let la = first_letter_lasso(Some(&[0]));
        assert_eq!(la.run_lasso(0, &l(":ab")), 0);
        assert_eq!(la.run_lasso(0, &l(":a")), la.step2(0, 0));
        assert_eq!(la.run_lasso(0, &l("bb:ba")), 1);
        assert!(Lasso::new(Word::empty(), Word::empty()).is_err());
    }

    #[test]
    fn languages() {
        let la = first_letter_lasso(Some(&[0]));
        let lang = lasso_language_upto(&la, 0, 2, 3).unwrap();
        assert!(!lang.is_empty());
        assert!(lang.iter().all(|l| l.cycle().first() == Some(0)));
        assert_eq!(lang.len(), lassos_upto(2, 2, 3).iter().filter(|l| l.cycle().first() == Some(0)).count());
        let none = first_letter_lasso(Some(&[]));
        assert!(lasso_language_upto(&none, 0, 2, 2).unwrap().is_empty());
        let all = first_letter_lasso(Some(&[0, 1]));
        assert_eq!(lasso_language_upto(&all, 0, 2, 2).unwrap().len(), lassos_upto(2, 2, 2).len());
    }

    #[test]
    fn lasso_order_is_total_length_first() {
        let all = lassos_upto(2, 1, 2);
        assert_eq!(all[0], l(":a"));
        assert_eq!(all[1], l(":b"));
        assert_eq!(all[2], l(":aa"));
        assert_eq!(all[6], l("a:a"));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn reversal() {
        assert_eq!(l("ab:abb").reversal(), l("bb:aba"));
        assert_eq!(l(":a").reversal(), l(":a"));
    }

    #[test]
    fn reachable_part_drops_unused_states() {
        let la = LassoAutomaton::new(ab(), 2, 3, vec![0, 0, 1, 1], vec![0, 0, 2, 2], vec![0, 0, 1, 1, 2, 2], Some(0), None)
            .unwrap();
        let (r, maps) = lasso_reachable_part(&la).unwrap();
        assert_eq!((r.spoke_count(), r.loop_count()), (1, 1));
        assert_eq!(maps.cycle, vec![Some(0), None, None]);
        assert!(is_lasso_reachable(&first_letter_lasso(None)));
    }

    #[test]
    fn morphisms_and_minimal() {
        let la = first_letter_lasso(Some(&[0]));
        let id = unique_lasso_morphism(&la, &la).unwrap();
        assert_eq!(id.spoke, vec![0]);
        assert_eq!(id.cycle, vec![0, 1]);
        let m = lasso_minimal(&la).unwrap();
        assert_eq!((m.spoke_count(), m.loop_count()), (1, 2));
        // duplicate X₂ state collapses
        let dup = LassoAutomaton::new(ab(), 1, 3, vec![0, 0], vec![0, 2], vec![0, 0, 1, 1, 2, 2], Some(0), Some(vec![true, false, true]))
            .unwrap();
        let m = lasso_minimal(&dup).unwrap();
        assert_eq!((m.spoke_count(), m.loop_count()), (1, 1));
    }

    #[test]
    fn meets() {
        let la = first_letter_lasso(None);
        let twice = reachable_meet(&ab(), &[la.clone(), la.clone()]).unwrap();
        assert!(lasso_isomorphic(&twice, &la));
        let empty = reachable_meet(&ab(), &[]).unwrap();
        assert_eq!((empty.spoke_count(), empty.loop_count()), (1, 1));
        let single = reachable_meet(&ab(), std::slice::from_ref(&la)).unwrap();
        assert!(lasso_isomorphic(&single, &la));
    }
}
