//! Small reference automata used in documentation, tests and the CLI.

use crate::dfa::{AcceptingDfa, Dfa};
use crate::equations::{powerset_lift, PowersetDfa};
use crate::lasso::LassoAutomaton;
use crate::word::Alphabet;

/// The two-state automaton over `{a, b}` with `x = 0`, `y = 1`:
/// `x -a-> y`, `x -b-> x`, `y -a-> y`, `y -b-> x`.
pub fn two_state_dfa() -> Dfa {
    Dfa::new(Alphabet::letters(2), 2, vec![1, 0, 1, 0]).expect("valid table")
}

/// [`two_state_dfa`] pointed at `x` and accepting `{x}`.
pub fn two_state_accepting() -> AcceptingDfa {
    AcceptingDfa::from_states(two_state_dfa(), &[0], Some(0)).expect("valid automaton")
}

/// The lifted contravariant powerset of [`two_state_accepting`].
pub fn two_state_powerset() -> PowersetDfa {
    powerset_lift(&two_state_accepting(), 16).expect("two states")
}

/// A lasso automaton over `{a, b}` with one spoke state `p`, loop states
/// `r = 0`, `s = 1`, `δ₂(p, a) = r`, `δ₂(p, b) = s` and `δ₃` the identity.
/// Accepts the lassos whose loop starts with `a` when `c = {r}`.
pub fn first_letter_lasso(accepting: Option<&[usize]>) -> LassoAutomaton {
    LassoAutomaton::new(
        Alphabet::letters(2),
        1,
        2,
        vec![0, 0],
        vec![0, 1],
        vec![0, 0, 1, 1],
        Some(0),
        accepting.map(|c| {
            let mut v = vec![false; 2];
            for &s in c {
                v[s] = true;
            }
            v
        }),
    )
    .expect("valid lasso automaton")
}

/// A minimal lasso automaton whose spokes form [`two_state_dfa`]: `δ₂(x, ·) = r`,
/// `δ₂(y, ·) = s`, `δ₃` the identity and `c = {r}`. Its spoke sort has two
/// states while the spoke transition monoid has three classes.
pub fn spoke_parity_lasso() -> LassoAutomaton {
    LassoAutomaton::new(
        Alphabet::letters(2),
        2,
        2,
        two_state_dfa().table().to_vec(),
        vec![0, 0, 1, 1],
        vec![0, 0, 1, 1],
        Some(0),
        Some(vec![true, false]),
    )
    .expect("valid lasso automaton")
}

/// Two lasso automata whose admissibility partitions are both total while
/// that of their reachable meet is not, so `(ε, a)` and `(ε, b)` are
/// identified in each factor but separated in the meet.
pub fn meet_pair() -> [LassoAutomaton; 2] {
    let ab = Alphabet::letters(2);
    [
        LassoAutomaton::new(ab.clone(), 2, 2, vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![1, 0, 1, 1], Some(0), None),
        LassoAutomaton::new(ab, 1, 2, vec![0, 0], vec![0, 1], vec![1, 0, 0, 1], Some(0), None),
    ]
    .map(|la| la.expect("valid lasso automaton"))
}
