//! Seeded generators of small automata for randomized law checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dfa::{reachable_part, AcceptingDfa, Dfa, PointedDfa};
use crate::lasso::{lasso_reachable_part, LassoAutomaton};
use crate::word::Alphabet;

/// The generator behind every randomized check; equal seeds give equal
/// automata on every platform.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn table(rng: &mut impl Rng, rows: usize, k: usize, targets: usize) -> Vec<usize> {
    (0..rows * k).map(|_| rng.gen_range(0..targets)).collect()
}

/// A uniformly random complete DFA on `1..=max_states` states, pointed at 0
/// and cut down to its reachable part.
pub fn random_pointed(rng: &mut impl Rng, max_states: usize, k: usize) -> PointedDfa {
    let n = rng.gen_range(1..=max_states);
    let d = Dfa::new(Alphabet::letters(k), n, table(rng, n, k, n)).expect("in range");
    reachable_part(&d.pointed(0).expect("state 0 exists")).0
}

/// [`random_pointed`] with a uniformly random accepting set.
pub fn random_accepting(rng: &mut impl Rng, max_states: usize, k: usize) -> AcceptingDfa {
    let p = random_pointed(rng, max_states, k);
    let c = (0..p.state_count()).map(|_| rng.gen_bool(0.5)).collect();
    p.with_accepting(c).expect("right length")
}

/// A random reachable lasso automaton with sorts of size at most `max1` and
/// `max2` and a uniformly random accepting set.
pub fn random_lasso(rng: &mut impl Rng, max1: usize, max2: usize, k: usize) -> LassoAutomaton {
    let (n1, n2) = (rng.gen_range(1..=max1), rng.gen_range(1..=max2));
    let d1 = table(rng, n1, k, n1);
    let d2 = table(rng, n1, k, n2);
    let d3 = table(rng, n2, k, n2);
    let c = (0..n2).map(|_| rng.gen_bool(0.5)).collect();
    let la = LassoAutomaton::new(Alphabet::letters(k), n1, n2, d1, d2, d3, Some(0), Some(c)).expect("in range");
    lasso_reachable_part(&la).expect("pointed").0
}

/// Every DFA on exactly `n` states over `k` letters, in lexicographic order
/// of transition tables.
pub fn all_dfas(n: usize, k: usize) -> Vec<Dfa> {
    let cells = n * k;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let t = (0..cells)
                .map(|_| {
                    let s = code % n;
                    code /= n;
                    s
                })
                .collect();
            Dfa::new(Alphabet::letters(k), n, t).expect("in range")
        })
        .collect()
}

/// Every lasso automaton with one state in each sort over `k` letters, with
/// both accepting sets.
pub fn all_unit_lassos(k: usize) -> Vec<LassoAutomaton> {
    [false, true]
        .into_iter()
        .map(|c| {
            LassoAutomaton::new(Alphabet::letters(k), 1, 1, vec![0; k], vec![0; k], vec![0; k], Some(0), Some(vec![c]))
                .expect("in range")
        })
        .collect()
}
