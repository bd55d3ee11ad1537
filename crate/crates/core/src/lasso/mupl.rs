//! `νC` and `μPL` for lasso automata.

use super::congruence::{lasso_machine, lasso_transition, LassoCongruenceRep};
use super::{Lasso, LassoAutomaton};
use crate::closure::orbit;
use crate::equations::subset_count;
use crate::error::{ensure, Error, Result, Violation};
use crate::word::{State, Word};

/// `νC = M T R` on lasso automata, with accepting lasso classes
/// `{[(u, v)] | δ(x̄, (u, v)) ∈ c}` when `c` is present.
pub fn lasso_nuc(la: &LassoAutomaton) -> Result<LassoAutomaton> {
    Ok(lasso_machine(&lasso_transition(la)?))
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

fn mask_where(n: usize, pred: impl Fn(usize) -> bool) -> u64 {
    (0..n).filter(|&i| pred(i)).fold(0, |m, i| m | 1 << i)
}

/// The sort-swapped inverse-image automaton of a lasso automaton with
/// accepting set `c`.
///
/// Sort 1 holds subsets of `X₂` generated from `c` by
/// `U ↦ {y | δ₃(y, a) ∈ U}`; sort 2 holds subsets of `X₁` entered by
/// `U ↦ {x | δ₂(x, a) ∈ U}` and closed under `V ↦ {x | δ₁(x, a) ∈ V}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoPowerset {
    pub automaton: LassoAutomaton,
    /// Subsets of `X₂` as bitmasks, indexed by sort-1 state.
    pub loop_subsets: Vec<u64>,
    /// Subsets of `X₁` as bitmasks, indexed by sort-2 state.
    pub spoke_subsets: Vec<u64>,
}

pub fn lasso_powerset_lift(la: &LassoAutomaton) -> Result<LassoPowerset> {
    let c = la.require_accepting("lasso_powerset_lift")?;
    let (n1, n2, k) = (la.spoke_count(), la.loop_count(), la.alphabet().len());
    if n1.max(n2) > 63 {
        return Err(Error::SizeGuard {
            what: "lasso subset automaton states",
            needed: n1.max(n2),
            limit: 63,
        });
    }
    let c_mask = mask_where(n2, |y| c[y]);
    let sort1 = orbit(k, vec![(c_mask, Word::empty())], |&u, a| {
        mask_where(n2, |y| u >> la.step3(y, a) & 1 == 1)
    });
    let entry = |u: u64, a: usize| mask_where(n1, |x| u >> la.step2(x, a) & 1 == 1);
    let seeds = sort1
        .items
        .iter()
        .flat_map(|&u| (0..k).map(move |a| (entry(u, a), Word::letter(a))))
        .collect();
    let sort2 = orbit(k, seeds, |&v, a| mask_where(n1, |x| v >> la.step1(x, a) & 1 == 1));
    let delta2 = sort1
        .items
        .iter()
        .flat_map(|&u| (0..k).map(move |a| (u, a)))
        .map(|(u, a)| sort2.get(&entry(u, a)).expect("entries are seeds"))
        .collect();
    let automaton = LassoAutomaton::new(
        la.alphabet().clone(),
        sort1.len(),
        sort2.len(),
        sort1.step.clone(),
        delta2,
        sort2.step.clone(),
        Some(0),
        None,
    )?;
    Ok(LassoPowerset {
        automaton,
        loop_subsets: sort1.items,
        spoke_subsets: sort2.items,
    })
}

/// `μPL` of a lasso automaton: sort 1 is every set of lasso classes, sort 2
/// every set of word classes, of the transition congruence of the lifted
/// powerset. A sort-1 state `P` accepts `(u, a·v)` iff `[(v^r, a·u^r)] ∈ P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoMupl {
    classes: LassoCongruenceRep,
    automaton: LassoAutomaton,
    eta1: Vec<State>,
    eta2: Vec<State>,
}

impl LassoMupl {
    pub fn classes(&self) -> &LassoCongruenceRep {
        &self.classes
    }

    pub fn automaton(&self) -> &LassoAutomaton {
        &self.automaton
    }

    /// `η₁: X₁ → P(lasso classes)`.
    pub fn eta1(&self) -> &[State] {
        &self.eta1
    }

    /// `η₂: X₂ → P(word classes)`.
    pub fn eta2(&self) -> &[State] {
        &self.eta2
    }

    /// Membership decided through the class table.
    pub fn in_language(&self, s: State, l: &Lasso) -> bool {
        s >> self.classes.class_of(&l.reversal()) & 1 == 1
    }

    pub fn lasso_label(&self, s: State) -> String {
        let ab = self.classes.word_part().alphabet();
        let parts: Vec<String> = bits(s as u64)
            .map(|p| format!("[{}]", self.classes.representative(p).render(ab)))
            .collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn word_label(&self, s: State) -> String {
        let w = self.classes.word_part();
        let parts: Vec<String> = bits(s as u64)
            .map(|q| format!("[{}]", w.alphabet().render(w.representative(q))))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

pub fn lasso_mupl(la: &LassoAutomaton, max_classes: usize) -> Result<LassoMupl> {
    let c = la.require_accepting("lasso_mupl")?;
    let lift = lasso_powerset_lift(la)?;
    let classes = lasso_transition(&lift.automaton)?;
    let w = classes.word_part();
    let (nw, nl, k) = (w.class_count(), classes.lasso_count(), la.alphabet().len());
    let s1 = subset_count(nl, max_classes)?;
    let s2 = subset_count(nw, max_classes)?;
    let pre = |n: usize, s: usize, f: &dyn Fn(usize) -> usize| mask_where(n, |i| s >> f(i) & 1 == 1) as State;
    let table = |count: usize, n: usize, f: &dyn Fn(usize, usize) -> usize| -> Vec<State> {
        (0..count * k).map(|i| pre(n, i / k, &|p| f(p, i % k))).collect()
    };
    let delta1 = table(s1, nl, &|p, a| classes.sigma3(p, a));
    let delta2 = table(s1, nw, &|q, a| classes.sigma2(q, a));
    let delta3 = table(s2, nw, &|q, a| w.right_step(q, a));
    let eps = w.eps_class();
    let accepting = (0..s2).map(|s| s >> eps & 1 == 1).collect();
    let eta1: Vec<State> = (0..la.spoke_count())
        .map(|x| mask_where(nl, |p| c[la.run_lasso(x, &classes.representative(p).reversal())]) as State)
        .collect();
    let eta2: Vec<State> = (0..la.loop_count())
        .map(|y| mask_where(nw, |q| c[la.run_loop_tail(y, &w.representative(q).reversed())]) as State)
        .collect();
    let automaton = LassoAutomaton::new(
        la.alphabet().clone(),
        s1,
        s2,
        delta1,
        delta2,
        delta3,
        la.initial().map(|x| eta1[x]),
        Some(accepting),
    )?;
    let m = LassoMupl {
        classes,
        automaton,
        eta1,
        eta2,
    };
    check_lasso_eta(la, &m)?;
    Ok(m)
}

/// `η` preserves acceptance and commutes with all three transition maps.
pub(crate) fn check_lasso_eta(la: &LassoAutomaton, m: &LassoMupl) -> Result<(), Violation> {
    let t = &m.automaton;
    for y in 0..la.loop_count() {
        ensure(la.is_accepting(y) == t.is_accepting(m.eta2[y]), "η preserves acceptance", || {
            format!("loop state {y}")
        })?;
    }
    for a in 0..la.alphabet().len() {
        for x in 0..la.spoke_count() {
            ensure(m.eta1[la.step1(x, a)] == t.step1(m.eta1[x], a), "η commutes with δ₁", || {
                format!("state {x}, letter {a}")
            })?;
            ensure(m.eta2[la.step2(x, a)] == t.step2(m.eta1[x], a), "η commutes with δ₂", || {
                format!("state {x}, letter {a}")
            })?;
        }
        for y in 0..la.loop_count() {
            ensure(m.eta2[la.step3(y, a)] == t.step3(m.eta2[y], a), "η commutes with δ₃", || {
                format!("loop state {y}, letter {a}")
            })?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lasso::{lasso_bisimilarity, lassos_upto, lasso_isomorphic};
    use crate::samples::first_letter_lasso;

    #[test]
    fn powerset_of_first_letter_automaton() {
        let la = first_letter_lasso(Some(&[0]));
        let p = lasso_powerset_lift(&la).unwrap();
        // {r} is fixed by δ₃⁻¹; entering it from p needs a, so τ₂({r}, a) = {p}, τ₂({r}, b) = ∅
        assert_eq!(p.loop_subsets, vec![0b01]);
        assert_eq!(p.spoke_subsets, vec![0b1, 0b0]);
        for c in [&[][..], &[0, 1][..]] {
            let p = lasso_powerset_lift(&first_letter_lasso(Some(c))).unwrap();
            assert_eq!((p.automaton.spoke_count(), p.automaton.loop_count()), (1, 1));
        }
    }

    #[test]
    fn mupl_of_first_letter_automaton() {
        let la = first_letter_lasso(Some(&[0]));
        let m = lasso_mupl(&la, 20).unwrap();
        let t = m.automaton();
        assert_eq!(t.spoke_count(), 4);
        let (p1, p2) = lasso_bisimilarity(t);
        assert!(p1.is_discrete() && p2.is_discrete());
        let all = lassos_upto(2, 3, 3);
        let mut seen: Vec<Vec<bool>> = (0..4)
            .map(|s| all.iter().map(|l| t.accepts_from(s, l)).collect())
            .collect();
        for s in 0..4 {
            for l in &all {
                assert_eq!(t.accepts_from(s, l), m.in_language(s, l));
            }
        }
        seen.sort();
        let starts = |c: usize| all.iter().map(|l| l.cycle().first() == Some(c)).collect::<Vec<bool>>();
        let mut expected = vec![vec![false; all.len()], starts(0), starts(1), vec![true; all.len()]];
        expected.sort();
        assert_eq!(seen, expected);
        let x = la.initial().unwrap();
        for l in &all {
            assert_eq!(t.accepts_from(m.eta1()[x], l), la.accepts_from(x, l));
        }
    }

    #[test]
    fn mupl_of_empty_coloring() {
        let m = lasso_mupl(&first_letter_lasso(Some(&[])), 20).unwrap();
        assert_eq!(m.automaton().spoke_count(), 2);
    }

    #[test]
    fn nuc_of_first_letter_automaton() {
        let la = first_letter_lasso(Some(&[0]));
        let n = lasso_nuc(&la).unwrap();
        assert!(lasso_isomorphic(&n, &la));
        assert_eq!(n.accepting_states(), vec![0]);
    }
}
