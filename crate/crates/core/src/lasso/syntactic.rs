//! Myhill–Nerode classes, syntactic congruences and final-coalgebra
//! derivatives of lasso languages.

use super::congruence::{lasso_transition, LassoCongruenceRep};
use super::{lasso_minimal, Lasso, LassoAutomaton};
use crate::dfa::AcceptingDfa;
use crate::error::Result;
use crate::word::{Symbol, Word};

/// The syntactic congruence of `L(la)`: the transition congruence of the
/// minimal automaton `⟨L⟩`, with accepted lasso classes.
pub fn syntactic_congruence(la: &LassoAutomaton) -> Result<LassoCongruenceRep> {
    lasso_transition(&lasso_minimal(la)?)
}

/// The Myhill–Nerode classes of a lasso language: `∼¹` on spokes and `∼²`
/// on lassos, one class per state of `⟨L⟩`, with least representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerodeClasses {
    pub minimal: LassoAutomaton,
    /// Least word reaching each `X₁` state of [`minimal`](Self::minimal).
    pub spoke_reps: Vec<Word>,
    /// Least lasso reaching each `X₂` state.
    pub lasso_reps: Vec<Lasso>,
}

pub fn myhill_nerode(la: &LassoAutomaton) -> Result<NerodeClasses> {
    let m = lasso_minimal(la)?;
    let k = m.alphabet().len();
    let x0 = m.require_initial("myhill_nerode")?;
    let order = crate::dfa::bfs_order(&m.spoke_dfa(), x0);
    let mut spoke_reps = vec![Word::empty(); m.spoke_count()];
    let mut seen = vec![false; m.spoke_count()];
    seen[x0] = true;
    for &x in &order {
        for a in 0..k {
            let t = m.step1(x, a);
            if !seen[t] {
                seen[t] = true;
                spoke_reps[t] = spoke_reps[x].append(a);
            }
        }
    }
    // for each spoke state, shortlex-least loops to every X₂ state; the least
    // lasso overall combines a least spoke with a least loop
    let mut lasso_reps: Vec<Option<Lasso>> = vec![None; m.loop_count()];
    for x in 0..m.spoke_count() {
        let mut loops: Vec<Option<Word>> = vec![None; m.loop_count()];
        let mut queue = std::collections::VecDeque::new();
        for a in 0..k {
            let y = m.step2(x, a);
            if loops[y].is_none() {
                loops[y] = Some(Word::letter(a));
                queue.push_back(y);
            }
        }
        while let Some(y) = queue.pop_front() {
            for a in 0..k {
                let t = m.step3(y, a);
                if loops[t].is_none() {
                    loops[t] = Some(loops[y].as_ref().expect("visited").append(a));
                    queue.push_back(t);
                }
            }
        }
        for (y, v) in loops.into_iter().enumerate() {
            if let Some(v) = v {
                let l = Lasso::new(spoke_reps[x].clone(), v)?;
                if lasso_reps[y].as_ref().is_none_or(|cur| l < *cur) {
                    lasso_reps[y] = Some(l);
                }
            }
        }
    }
    Ok(NerodeClasses {
        spoke_reps,
        lasso_reps: lasso_reps.into_iter().map(|l| l.expect("minimal automata are reachable")).collect(),
        minimal: m,
    })
}

/// `{(u, v) | (au, v) ∈ L}`: the same automaton started at `δ₁(x̄, a)`.
pub fn derivative_spoke(la: &LassoAutomaton, a: Symbol) -> Result<LassoAutomaton> {
    let x = la.require_initial("derivative_spoke")?;
    la.require_accepting("derivative_spoke")?;
    la.with_initial(Some(la.step1(x, a)))
}

/// `{v | (ε, av) ∈ L}`: the word automaton `(X₂, δ₃, c)` started at
/// `δ₂(x̄, a)`.
pub fn derivative_word(la: &LassoAutomaton, a: Symbol) -> Result<AcceptingDfa> {
    let x = la.require_initial("derivative_word")?;
    la.require_accepting("derivative_word")?;
    la.loop_dfa().with_initial(Some(la.step2(x, a)))
}

/// `{v | av ∈ K}` for a word language `K`.
pub fn derivative_loop(d: &AcceptingDfa, a: Symbol) -> Result<AcceptingDfa> {
    let p = d.pointed()?;
    d.with_initial(Some(p.dfa().step(p.initial(), a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lasso::lassos_upto;
    use crate::samples::first_letter_lasso;
    use crate::word::{words_upto, Alphabet};

    #[test]
    fn syntactic_of_first_letter_language() {
        let c = syntactic_congruence(&first_letter_lasso(Some(&[0]))).unwrap();
        assert_eq!(c.word_part().class_count(), 1);
        assert_eq!(c.lasso_count(), 2);
        for acc in [&[][..], &[0, 1][..]] {
            let c = syntactic_congruence(&first_letter_lasso(Some(acc))).unwrap();
            assert_eq!((c.word_part().class_count(), c.lasso_count()), (1, 1));
        }
    }

    #[test]
    fn nerode_of_first_letter_language() {
        let n = myhill_nerode(&first_letter_lasso(Some(&[0]))).unwrap();
        let ab = Alphabet::letters(2);
        assert_eq!(n.spoke_reps, vec![Word::empty()]);
        assert_eq!(n.lasso_reps, vec![Lasso::parse(&ab, ":a").unwrap(), Lasso::parse(&ab, ":b").unwrap()]);
    }

    #[test]
    fn derivatives_agree_with_enumeration() {
        let la = first_letter_lasso(Some(&[0]));
        for a in 0..2 {
            let d1 = derivative_spoke(&la, a).unwrap();
            for l in lassos_upto(2, 3, 3) {
                let al = Lasso::new(l.spoke().prepend(a), l.cycle().clone()).unwrap();
                assert_eq!(d1.accepts(&l).unwrap(), la.accepts(&al).unwrap());
            }
            let d2 = derivative_word(&la, a).unwrap();
            for v in words_upto(2, 6) {
                let l = Lasso::new(Word::empty(), v.prepend(a)).unwrap();
                assert_eq!(d2.accepts(&v).unwrap(), la.accepts(&l).unwrap());
                for b in 0..2 {
                    let d3 = derivative_loop(&d2, b).unwrap();
                    assert_eq!(d3.accepts(&v).unwrap(), d2.accepts(&v.prepend(b)).unwrap());
                }
            }
        }
        let empty = first_letter_lasso(Some(&[]));
        let d = derivative_spoke(&empty, 0).unwrap();
        assert!(lassos_upto(2, 2, 2).iter().all(|l| !d.accepts(l).unwrap()));
    }
}
