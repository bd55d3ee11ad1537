//! Brute-force oracles. Each one evaluates by direct enumeration and shares
//! no code with the closure-based construction it cross-checks.

use std::collections::{BTreeMap, HashMap};

use crate::dfa::{AcceptingDfa, Dfa};
use crate::lasso::{Lasso, LassoAutomaton};
use crate::partition::{Partition, UnionFind};
use crate::word::{State, Symbol, Word};

/// Enumeration bounds for the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundConfig {
    pub max_word_len: usize,
    pub max_spoke: usize,
    /// At least 1: loops are nonempty.
    pub max_loop: usize,
    pub max_subset_classes: usize,
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig {
            max_word_len: 8,
            max_spoke: 4,
            max_loop: 4,
            max_subset_classes: 20,
        }
    }
}

/// Every word over `k` letters of length at most `max`, in shortlex order,
/// built by explicit counting.
pub fn enumerate_words(k: usize, max: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<Symbol>::new()];
    for _ in 0..max {
        let mut next = Vec::with_capacity(layer.len() * k);
        for w in &layer {
            for a in 0..k {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::from));
        layer = next;
    }
    out
}

/// Every lasso within the bounds, ordered by total length, spoke, loop.
pub fn enumerate_lassos(k: usize, max_spoke: usize, max_loop: usize) -> Vec<Lasso> {
    let spokes = enumerate_words(k, max_spoke);
    let loops: Vec<Word> = enumerate_words(k, max_loop).into_iter().filter(|w| !w.is_empty()).collect();
    let mut all: Vec<Lasso> = spokes
        .iter()
        .flat_map(|u| loops.iter().map(move |v| Lasso::new(u.clone(), v.clone()).expect("nonempty")))
        .collect();
    all.sort_by(|a, b| {
        (a.spoke().len() + a.cycle().len(), a.spoke(), a.cycle()).cmp(&(b.spoke().len() + b.cycle().len(), b.spoke(), b.cycle()))
    });
    all
}

fn state_function(d: &Dfa, w: &Word) -> Vec<State> {
    (0..d.state_count())
        .map(|x| {
            let mut s = x;
            for &a in w.letters() {
                s = d.table()[s * d.alphabet().len() + a];
            }
            s
        })
        .collect()
}

/// All pairs `(u, v)` of words of length at most `bound` inducing the same
/// state function, reflexive pairs included.
pub fn brute_congruence(d: &Dfa, bound: usize) -> Vec<(Word, Word)> {
    let words = enumerate_words(d.alphabet().len(), bound);
    let funcs: Vec<Vec<State>> = words.iter().map(|w| state_function(d, w)).collect();
    let mut pairs = Vec::new();
    for i in 0..words.len() {
        for j in 0..words.len() {
            if funcs[i] == funcs[j] {
                pairs.push((words[i].clone(), words[j].clone()));
            }
        }
    }
    pairs
}

/// The first `n` letters of `u v^ω`, built by concatenation.
pub fn unroll(l: &Lasso, n: usize) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = l.spoke().letters().to_vec();
    while out.len() < n {
        out.extend_from_slice(l.cycle().letters());
    }
    out.truncate(n);
    out
}

/// Naive γ-equivalence: compare unrollings of length `4 · (max spoke +
/// |v| · |v'|)`, which is far past the point where both words are periodic.
pub fn naive_gamma(l1: &Lasso, l2: &Lasso) -> bool {
    let n = 4 * (l1.spoke().len().max(l2.spoke().len()) + l1.cycle().len() * l2.cycle().len());
    unroll(l1, n) == unroll(l2, n)
}

/// Pairs `l < l'` of distinct γ-equivalent lassos within the bounds.
pub fn brute_gamma_pairs(k: usize, max_spoke: usize, max_loop: usize) -> Vec<(Lasso, Lasso)> {
    let all = enumerate_lassos(k, max_spoke, max_loop);
    let mut groups: BTreeMap<Vec<Symbol>, Vec<&Lasso>> = BTreeMap::new();
    let width = 4 * (max_spoke + max_loop * max_loop);
    for l in &all {
        groups.entry(unroll(l, width)).or_default().push(l);
    }
    let mut pairs = Vec::new();
    for g in groups.values() {
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                pairs.push((g[i].clone(), g[j].clone()));
            }
        }
    }
    pairs.sort();
    pairs
}

/// The least word of length at most `max_len` on which the two predicates
/// disagree.
pub fn languages_equal_upto(k: usize, max_len: usize, f: impl Fn(&Word) -> bool, g: impl Fn(&Word) -> bool) -> Option<Word> {
    enumerate_words(k, max_len).into_iter().find(|w| f(w) != g(w))
}

/// The least lasso within the bounds on which the two predicates disagree.
pub fn lasso_languages_equal_upto(
    k: usize,
    max_spoke: usize,
    max_loop: usize,
    f: impl Fn(&Lasso) -> bool,
    g: impl Fn(&Lasso) -> bool,
) -> Option<Lasso> {
    enumerate_lassos(k, max_spoke, max_loop).into_iter().find(|l| f(l) != g(l))
}

fn run_lasso_by_hand(la: &LassoAutomaton, x: State, l: &Lasso) -> State {
    let (d1, d2, d3) = la.tables();
    let k = la.alphabet().len();
    let mut s = x;
    for &a in l.spoke().letters() {
        s = d1[s * k + a];
    }
    let v = l.cycle().letters();
    let mut y = d2[s * k + v[0]];
    for &a in &v[1..] {
        y = d3[y * k + a];
    }
    y
}

/// The closure of `{(δ(x, l), δ(x, l')) | x ∈ X₁, l ∼γ l'}` over lassos
/// within the bounds, with γ-equivalence decided by long unrollings.
pub fn brute_gamma_closure(la: &LassoAutomaton, max_spoke: usize, max_loop: usize) -> Partition {
    let k = la.alphabet().len();
    let width = 4 * (max_spoke + max_loop * max_loop);
    let mut first: HashMap<Vec<Symbol>, Lasso> = HashMap::new();
    let mut uf = UnionFind::new(la.loop_count());
    for l in enumerate_lassos(k, max_spoke, max_loop) {
        let key = unroll(&l, width);
        match first.get(&key) {
            Some(r) => {
                for x in 0..la.spoke_count() {
                    uf.union(run_lasso_by_hand(la, x, r), run_lasso_by_hand(la, x, &l));
                }
            }
            None => {
                first.insert(key, l);
            }
        }
    }
    uf.into_partition()
}

/// Lassos within the bounds grouped by their behaviour `x ↦ δ(x, l)`; pairs
/// of lassos in one group are exactly the bounded equations of `la`.
pub fn brute_lasso_classes(la: &LassoAutomaton, max_spoke: usize, max_loop: usize) -> Vec<Vec<Lasso>> {
    let mut groups: BTreeMap<Vec<State>, Vec<Lasso>> = BTreeMap::new();
    for l in enumerate_lassos(la.alphabet().len(), max_spoke, max_loop) {
        let f = (0..la.spoke_count()).map(|x| run_lasso_by_hand(la, x, &l)).collect();
        groups.entry(f).or_default().push(l);
    }
    let mut out: Vec<Vec<Lasso>> = groups.into_values().collect();
    out.sort();
    out
}

/// Membership in the bounded language of an accepting DFA from `start`, by
/// stepping the table directly.
pub fn accepts_by_hand(a: &AcceptingDfa, start: State, w: &Word) -> bool {
    let d = a.dfa();
    let k = d.alphabet().len();
    let end = w.letters().iter().fold(start, |s, &b| d.table()[s * k + b]);
    a.accepting()[end]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::gamma_equivalent;
    use crate::samples::two_state_dfa;
    use crate::word::Alphabet;

    fn l(s: &str) -> Lasso {
        Lasso::parse(&Alphabet::letters(2), s).unwrap()
    }

    #[test]
    fn congruence_of_two_state_dfa() {
        let pairs = brute_congruence(&two_state_dfa(), 2);
        let has = |u: &[usize], v: &[usize]| pairs.contains(&(Word::from(u.to_vec()), Word::from(v.to_vec())));
        assert!(has(&[0], &[0, 0]));
        assert!(has(&[1], &[1, 1]));
        assert!(!has(&[], &[1]));
        assert_eq!(brute_congruence(&two_state_dfa(), 0), vec![(Word::empty(), Word::empty())]);
    }

    #[test]
    fn gamma_pairs() {
        let pairs = brute_gamma_pairs(2, 2, 2);
        assert!(pairs.contains(&(l(":a"), l(":aa"))));
        assert!(pairs.contains(&(l(":ab"), l("a:ba"))));
        assert!(!pairs.iter().any(|p| *p == (l(":ab"), l(":ba")) || *p == (l(":ba"), l(":ab"))));
        assert!(pairs.iter().all(|(x, y)| gamma_equivalent(x, y)));
    }

    #[test]
    fn language_witness() {
        // (a*b)* accepts ε and words ending in b; (b*a)* accepts ε and words ending in a
        let ends = |c: usize| move |w: &Word| w.letters().last().is_none_or(|&x| x == c);
        assert_eq!(languages_equal_upto(2, 1, ends(1), ends(0)), Some(Word::letter(0)));
        assert_eq!(languages_equal_upto(2, 4, ends(1), ends(1)), None);
        assert_eq!(languages_equal_upto(2, 4, |_| false, |_| false), None);
    }

    #[test]
    fn enumeration_order() {
        let all = enumerate_lassos(2, 1, 2);
        assert_eq!(all[0], l(":a"));
        assert_eq!(all.len(), 3 * 6);
        assert_eq!(all, crate::lasso::lassos_upto(2, 1, 2));
    }
}
