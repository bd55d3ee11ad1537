//! One-sorted deterministic automata: runs, languages, reachability,
//! morphisms, bisimilarity and products.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::{words_upto, Alphabet, State, Symbol, Word};

/// A deterministic automaton `(X, δ)` with a total transition table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    /// `delta[s * |Σ| + a]`
    delta: Vec<State>,
}

impl Dfa {
    pub fn new(alphabet: Alphabet, state_count: usize, delta: Vec<State>) -> Result<Self> {
        if state_count == 0 {
            return Err(Error::Invalid("an automaton needs at least one state".into()));
        }
        if delta.len() != state_count * alphabet.len() {
            return Err(Error::Invalid(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                state_count * alphabet.len()
            )));
        }
        if let Some(bad) = delta.iter().find(|&&t| t >= state_count) {
            return Err(Error::Invalid(format!("transition target {bad} out of range")));
        }
        Ok(Dfa {
            alphabet,
            state_count,
            delta,
        })
    }

    pub fn from_fn(alphabet: Alphabet, state_count: usize, f: impl Fn(State, Symbol) -> State) -> Result<Self> {
        let k = alphabet.len();
        let delta = (0..state_count * k).map(|i| f(i / k, i % k)).collect();
        Dfa::new(alphabet, state_count, delta)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn table(&self) -> &[State] {
        &self.delta
    }

    #[inline]
    pub fn step(&self, s: State, a: Symbol) -> State {
        self.delta[s * self.alphabet.len() + a]
    }

    /// `δ(s)(w)`, the fold of the transition function over `w`.
    pub fn run_word(&self, s: State, w: &Word) -> State {
        w.letters().iter().fold(s, |s, &a| self.step(s, a))
    }

    /// The state map `x ↦ δ(x)(w)`.
    pub fn action(&self, w: &Word) -> Vec<State> {
        (0..self.state_count).map(|s| self.run_word(s, w)).collect()
    }

    pub fn pointed(self, initial: State) -> Result<PointedDfa> {
        PointedDfa::new(self, initial)
    }
}

/// A deterministic automaton with an initial state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointedDfa {
    dfa: Dfa,
    initial: State,
}

impl PointedDfa {
    pub fn new(dfa: Dfa, initial: State) -> Result<Self> {
        if initial >= dfa.state_count {
            return Err(Error::Invalid(format!("initial state {initial} out of range")));
        }
        Ok(PointedDfa { dfa, initial })
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.dfa.state_count
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.dfa.alphabet
    }

    pub fn is_reachable(&self) -> bool {
        bfs_order(&self.dfa, self.initial).len() == self.dfa.state_count
    }

    pub fn with_accepting(self, accepting: Vec<bool>) -> Result<AcceptingDfa> {
        let initial = self.initial;
        AcceptingDfa::new(self.dfa, accepting, Some(initial))
    }
}

/// A deterministic automaton with an accepting set and optional initial state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcceptingDfa {
    dfa: Dfa,
    accepting: Vec<bool>,
    initial: Option<State>,
}

impl AcceptingDfa {
    pub fn new(dfa: Dfa, accepting: Vec<bool>, initial: Option<State>) -> Result<Self> {
        if accepting.len() != dfa.state_count {
            return Err(Error::Invalid("accepting vector has the wrong length".into()));
        }
        if let Some(i) = initial {
            if i >= dfa.state_count {
                return Err(Error::Invalid(format!("initial state {i} out of range")));
            }
        }
        Ok(AcceptingDfa {
            dfa,
            accepting,
            initial,
        })
    }

    /// Builds the accepting vector from a list of states.
    pub fn from_states(dfa: Dfa, accepting: &[State], initial: Option<State>) -> Result<Self> {
        let mut v = vec![false; dfa.state_count];
        for &s in accepting {
            *v.get_mut(s)
                .ok_or_else(|| Error::Invalid(format!("accepting state {s} out of range")))? = true;
        }
        AcceptingDfa::new(dfa, v, initial)
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.dfa.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.dfa.state_count
    }

    pub fn initial(&self) -> Option<State> {
        self.initial
    }

    pub fn accepting(&self) -> &[bool] {
        &self.accepting
    }

    pub fn is_accepting(&self, s: State) -> bool {
        self.accepting[s]
    }

    pub fn accepting_states(&self) -> Vec<State> {
        (0..self.state_count()).filter(|&s| self.accepting[s]).collect()
    }

    pub fn pointed(&self) -> Result<PointedDfa> {
        let initial = self.initial.ok_or(Error::MissingInitial("pointed view"))?;
        Ok(PointedDfa {
            dfa: self.dfa.clone(),
            initial,
        })
    }

    pub fn with_initial(&self, initial: Option<State>) -> Result<AcceptingDfa> {
        AcceptingDfa::new(self.dfa.clone(), self.accepting.clone(), initial)
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        let start = self.initial.ok_or(Error::MissingInitial("accepts"))?;
        Ok(self.accepts_from(start, w))
    }

    pub fn accepts_from(&self, start: State, w: &Word) -> bool {
        self.accepting[self.dfa.run_word(start, w)]
    }

    /// `{w : |w| ≤ max_len, δ(start)(w) ∈ c}`, shortlex.
    pub fn language_upto(&self, start: State, max_len: usize) -> Vec<Word> {
        words_upto(self.dfa.alphabet.len(), max_len)
            .filter(|w| self.accepts_from(start, w))
            .collect()
    }
}

/// States reachable from `start`, in BFS order with letters explored in
/// alphabet order.
pub(crate) fn bfs_order(dfa: &Dfa, start: State) -> Vec<State> {
    let mut seen = vec![false; dfa.state_count];
    let mut order = vec![start];
    seen[start] = true;
    let mut i = 0;
    while i < order.len() {
        let s = order[i];
        for a in 0..dfa.alphabet.len() {
            let t = dfa.step(s, a);
            if !seen[t] {
                seen[t] = true;
                order.push(t);
            }
        }
        i += 1;
    }
    order
}

/// The reachable part of a pointed automaton together with the map from old
/// to new indices (`None` for unreachable states). New indices follow BFS
/// order, so the initial state becomes 0.
pub fn reachable_part(p: &PointedDfa) -> (PointedDfa, Vec<Option<State>>) {
    let order = bfs_order(&p.dfa, p.initial);
    let mut map = vec![None; p.dfa.state_count];
    for (new, &old) in order.iter().enumerate() {
        map[old] = Some(new);
    }
    let k = p.dfa.alphabet.len();
    let delta = order
        .iter()
        .flat_map(|&old| (0..k).map(move |a| (old, a)))
        .map(|(old, a)| map[p.dfa.step(old, a)].expect("successor of a reachable state"))
        .collect();
    let dfa = Dfa {
        alphabet: p.dfa.alphabet.clone(),
        state_count: order.len(),
        delta,
    };
    (PointedDfa { dfa, initial: 0 }, map)
}

/// Restricts an accepting automaton to the states reachable from its initial
/// state.
pub fn reachable_accepting(a: &AcceptingDfa) -> Result<AcceptingDfa> {
    let (r, map) = reachable_part(&a.pointed()?);
    let mut accepting = vec![false; r.state_count()];
    for (old, new) in map.iter().enumerate() {
        if let Some(new) = new {
            accepting[*new] = a.accepting[old];
        }
    }
    r.with_accepting(accepting)
}

/// Whether `map` is a pointed-automaton morphism `src → dst`: it preserves the
/// initial state and commutes with every letter.
pub fn is_morphism(src: &PointedDfa, dst: &PointedDfa, map: &[State]) -> bool {
    map.len() == src.state_count()
        && src.alphabet() == dst.alphabet()
        && map[src.initial] == dst.initial
        && (0..src.state_count()).all(|s| {
            (0..src.alphabet().len()).all(|a| map[src.dfa.step(s, a)] == dst.dfa.step(map[s], a))
        })
}

/// The morphism `src → dst` of pointed automata, if one exists. Requires `src`
/// to be reachable, in which case the morphism is unique; returns `None` when
/// `src` is not reachable or no morphism exists.
pub fn unique_morphism(src: &PointedDfa, dst: &PointedDfa) -> Option<Vec<State>> {
    if src.alphabet() != dst.alphabet() {
        return None;
    }
    let k = src.alphabet().len();
    let mut map: Vec<Option<State>> = vec![None; src.state_count()];
    map[src.initial] = Some(dst.initial);
    let mut queue = VecDeque::from([src.initial]);
    while let Some(s) = queue.pop_front() {
        let image = map[s].expect("queued states are mapped");
        for a in 0..k {
            let (t, u) = (src.dfa.step(s, a), dst.dfa.step(image, a));
            match map[t] {
                None => {
                    map[t] = Some(u);
                    queue.push_back(t);
                }
                Some(existing) if existing != u => return None,
                Some(_) => {}
            }
        }
    }
    map.into_iter().collect()
}

/// Isomorphism of reachable pointed automata: morphisms both ways.
pub fn isomorphic(p: &PointedDfa, q: &PointedDfa) -> bool {
    p.state_count() == q.state_count()
        && unique_morphism(p, q).is_some()
        && unique_morphism(q, p).is_some()
}

/// The coarsest partition that respects acceptance and is closed under every
/// letter: two states share a class iff they accept the same language.
pub fn bisimilarity_partition(a: &AcceptingDfa) -> Partition {
    let k = a.alphabet().len();
    let n = a.state_count();
    let mut part = Partition::from_labels(&a.accepting);
    loop {
        let signatures: Vec<Vec<usize>> = (0..n)
            .map(|s| {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(part.class_of(s));
                sig.extend((0..k).map(|c| part.class_of(a.dfa.step(s, c))));
                sig
            })
            .collect();
        let next = Partition::from_labels(&signatures);
        if next.class_count() == part.class_count() {
            return next;
        }
        part = next;
    }
}

/// Whether state `s` of `a` and state `t` of `b` accept the same language,
/// decided exactly by a breadth-first search over the pair automaton.
pub fn equivalent_states(a: &AcceptingDfa, s: State, b: &AcceptingDfa, t: State) -> bool {
    first_difference(a, s, b, t).is_none()
}

/// A shortlex-least word separating the two states, if any.
pub fn first_difference(a: &AcceptingDfa, s: State, b: &AcceptingDfa, t: State) -> Option<Word> {
    if a.alphabet() != b.alphabet() {
        return Some(Word::empty());
    }
    let k = a.alphabet().len();
    let mut seen: HashSet<(State, State)> = HashSet::new();
    let mut queue = VecDeque::from([((s, t), Word::empty())]);
    seen.insert((s, t));
    while let Some(((x, y), w)) = queue.pop_front() {
        if a.accepting[x] != b.accepting[y] {
            return Some(w);
        }
        for c in 0..k {
            let next = (a.dfa.step(x, c), b.dfa.step(y, c));
            if seen.insert(next) {
                queue.push_back((next, w.append(c)));
            }
        }
    }
    None
}

/// The reachable part of the componentwise product. The empty product is the
/// one-state automaton over `alphabet`.
pub fn product_pointed(alphabet: &Alphabet, ps: &[PointedDfa]) -> Result<PointedDfa> {
    for p in ps {
        alphabet.check_same(p.alphabet())?;
    }
    let k = alphabet.len();
    let start: Vec<State> = ps.iter().map(|p| p.initial).collect();
    let mut index: HashMap<Vec<State>, State> = HashMap::from([(start.clone(), 0)]);
    let mut tuples = vec![start];
    let mut delta = Vec::new();
    let mut i = 0;
    while i < tuples.len() {
        for a in 0..k {
            let next: Vec<State> = tuples[i]
                .iter()
                .zip(ps)
                .map(|(&s, p)| p.dfa.step(s, a))
                .collect();
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = tuples.len();
                    index.insert(next.clone(), id);
                    tuples.push(next);
                    id
                }
            };
            delta.push(id);
        }
        i += 1;
    }
    let dfa = Dfa::new(alphabet.clone(), tuples.len(), delta)?;
    PointedDfa::new(dfa, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{two_state_dfa, two_state_powerset};

    fn w(s: &str) -> Word {
        Alphabet::letters(2).parse_word(s).unwrap()
    }

    #[test]
    fn run_word_on_the_two_state_example() {
        let d = two_state_dfa();
        let (x, y) = (0, 1);
        assert_eq!(d.run_word(x, &w("ab")), x);
        assert_eq!(d.run_word(y, &w("ba")), y);
        for s in 0..2 {
            assert_eq!(d.run_word(s, &Word::empty()), s);
        }
    }

    #[test]
    fn accepts_and_bounded_language() {
        let a = AcceptingDfa::from_states(two_state_dfa(), &[0], Some(0)).unwrap();
        assert!(a.accepts(&w("ab")).unwrap());
        assert!(!a.accepts(&w("a")).unwrap());
        assert_eq!(a.language_upto(0, 2), vec![w(""), w("b"), w("ab"), w("bb")]);

        let to_y = AcceptingDfa::from_states(two_state_dfa(), &[1], Some(0)).unwrap();
        assert_eq!(to_y.language_upto(0, 1), vec![w("a")]);

        let empty = AcceptingDfa::from_states(two_state_dfa(), &[], Some(0)).unwrap();
        assert!(empty.language_upto(0, 4).is_empty());
        assert_eq!(a.language_upto(0, 0), vec![Word::empty()]);
    }

    #[test]
    fn accepts_without_initial_is_an_error() {
        let a = AcceptingDfa::from_states(two_state_dfa(), &[0], None).unwrap();
        assert_eq!(a.accepts(&w("a")), Err(Error::MissingInitial("accepts")));
    }

    #[test]
    fn reachable_parts() {
        let p = two_state_dfa().pointed(0).unwrap();
        let (r, map) = reachable_part(&p);
        assert_eq!(r.state_count(), 2);
        assert!(isomorphic(&r, &p));
        assert_eq!(map, vec![Some(0), Some(1)]);

        // state 0 loops, state 1 unreachable
        let d = Dfa::new(Alphabet::letters(2), 2, vec![0, 0, 0, 1]).unwrap();
        let (r, map) = reachable_part(&d.pointed(0).unwrap());
        assert_eq!(r.state_count(), 1);
        assert_eq!(map, vec![Some(0), None]);

        // The full powerset of the example pointed at {x}: {y} has no incoming edge.
        let pw = two_state_powerset();
        let (r, _) = reachable_part(&pw.dfa().clone().pointed(0).unwrap());
        assert_eq!(r.state_count(), 3);
    }

    #[test]
    fn unique_morphisms() {
        let p = two_state_dfa().pointed(0).unwrap();
        assert_eq!(unique_morphism(&p, &p), Some(vec![0, 1]));
        let one = Dfa::new(Alphabet::letters(2), 1, vec![0, 0]).unwrap().pointed(0).unwrap();
        assert_eq!(unique_morphism(&p, &one), Some(vec![0, 0]));
        assert_eq!(unique_morphism(&one, &p), None);
    }

    #[test]
    fn bisimilarity() {
        let a = AcceptingDfa::from_states(two_state_dfa(), &[0], None).unwrap();
        assert!(bisimilarity_partition(&a).is_discrete());
        let none = AcceptingDfa::from_states(two_state_dfa(), &[], None).unwrap();
        assert_eq!(bisimilarity_partition(&none).class_count(), 1);
    }

    #[test]
    fn products() {
        let ab = Alphabet::letters(2);
        let px = two_state_dfa().pointed(0).unwrap();
        let py = two_state_dfa().pointed(1).unwrap();
        let single = product_pointed(&ab, std::slice::from_ref(&px)).unwrap();
        assert!(isomorphic(&single, &px));
        // (x,y) -a-> (y,y), (x,y) -b-> (x,x); the diagonal absorbs both.
        let pair = product_pointed(&ab, &[px.clone(), py]).unwrap();
        assert_eq!(pair.state_count(), 3);
        let empty = product_pointed(&ab, &[]).unwrap();
        assert_eq!(empty.state_count(), 1);
        let other = Alphabet::letters(3);
        assert!(product_pointed(&other, &[px]).is_err());
    }

    #[test]
    fn pair_search_finds_least_separating_word() {
        let a = AcceptingDfa::from_states(two_state_dfa(), &[0], None).unwrap();
        assert_eq!(first_difference(&a, 0, &a, 1), Some(Word::empty()));
        let b = AcceptingDfa::from_states(two_state_dfa(), &[0, 1], None).unwrap();
        assert_eq!(first_difference(&a, 0, &b, 0), Some(w("a")));
        assert!(equivalent_states(&b, 0, &b, 1));
    }
}
