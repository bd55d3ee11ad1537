//! Congruences on `(Σ*, Σ^{*+})`: transition congruences of lasso automata,
//! their machines, and satisfaction of equations and coequations.

use std::collections::HashMap;

use super::{lasso_bisimilarity, lasso_reachable_part, is_lasso_morphism, Lasso, LassoAutomaton, LassoMorphism};
use crate::closure::{compose, orbit};
use crate::error::{ensure, Error, Result, Violation};
use crate::monoid::{transition_congruence, CongruenceRep};
use crate::word::{State, Symbol, Word};

/// A congruence on words and lassos: the word part `C₁`, lasso classes with
/// shortlex (total length, spoke, loop) representatives, and the actions
/// `[w] ↦ [(w, a)]`, `[(u, v)] ↦ [(u, va)]` and `[(u, v)] ↦ [(au, v)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LassoCongruenceRep {
    word: CongruenceRep,
    lasso_count: usize,
    /// `sigma2[q * |Σ| + a]`
    sigma2: Vec<usize>,
    /// `sigma3[p * |Σ| + a]`
    sigma3: Vec<usize>,
    /// `left_ext[p * |Σ| + a]`
    left_ext: Vec<usize>,
    reps: Vec<Lasso>,
    accepted: Option<Vec<bool>>,
}

impl LassoCongruenceRep {
    pub fn word_part(&self) -> &CongruenceRep {
        &self.word
    }

    pub fn lasso_count(&self) -> usize {
        self.lasso_count
    }

    fn k(&self) -> usize {
        self.word.alphabet().len()
    }

    pub fn sigma2(&self, q: usize, a: Symbol) -> usize {
        self.sigma2[q * self.k() + a]
    }

    pub fn sigma3(&self, p: usize, a: Symbol) -> usize {
        self.sigma3[p * self.k() + a]
    }

    pub fn left_ext(&self, a: Symbol, p: usize) -> usize {
        self.left_ext[p * self.k() + a]
    }

    pub fn representative(&self, p: usize) -> &Lasso {
        &self.reps[p]
    }

    pub fn representatives(&self) -> &[Lasso] {
        &self.reps
    }

    pub fn accepted_classes(&self) -> Option<&[bool]> {
        self.accepted.as_deref()
    }

    /// `[(u, v)]`.
    pub fn class_of(&self, l: &Lasso) -> usize {
        let q = self.word.class_of(l.spoke());
        let v = l.cycle();
        let p = self.sigma2(q, v.first().expect("nonempty loop"));
        v.tail().letters().iter().fold(p, |p, &a| self.sigma3(p, a))
    }

    pub fn with_accepted(mut self, accepted: Option<Vec<bool>>) -> Result<Self> {
        if accepted.as_ref().is_some_and(|c| c.len() != self.lasso_count) {
            return Err(Error::Invalid("accepted-class vector has the wrong length".into()));
        }
        self.accepted = accepted;
        Ok(self)
    }

    /// Representatives land in their classes and `left_ext` commutes with
    /// both lasso actions.
    pub fn check_invariants(&self) -> Result<(), Violation> {
        self.word.check_invariants()?;
        let k = self.k();
        for p in 0..self.lasso_count {
            ensure(self.class_of(&self.reps[p]) == p, "lasso representative", || {
                format!("{:?} is not in class {p}", self.reps[p])
            })?;
            for a in 0..k {
                for b in 0..k {
                    ensure(
                        self.left_ext(a, self.sigma3(p, b)) == self.sigma3(self.left_ext(a, p), b),
                        "left extension commutes with loop extension",
                        || format!("class {p}, letters {a}, {b}"),
                    )?;
                }
            }
        }
        for q in 0..self.word.class_count() {
            for a in 0..k {
                for b in 0..k {
                    ensure(
                        self.left_ext(a, self.sigma2(q, b)) == self.sigma2(self.word.left_step(a, q), b),
                        "left extension commutes with loop entry",
                        || format!("word class {q}, letters {a}, {b}"),
                    )?;
                }
            }
        }
        Ok(())
    }
}

/// The kernel of `δ♯` quantified over every `X₁` state: lasso classes are
/// the distinct maps `x ↦ δ(x, (u, v))`, i.e. `g_v ∘ f_u`.
pub(crate) fn behaviour_congruence(la: &LassoAutomaton) -> LassoCongruenceRep {
    let k = la.alphabet().len();
    let spoke = la.spoke_dfa();
    let word = transition_congruence(&spoke);
    let f: Vec<Vec<State>> = word.representatives().iter().map(|u| spoke.action(u)).collect();
    // loop behaviours g_v: X₁ → X₂, seeded by δ₂ and extended by δ₃
    let entry: Vec<Vec<State>> = (0..k)
        .map(|a| (0..la.spoke_count()).map(|x| la.step2(x, a)).collect())
        .collect();
    let seeds = entry.iter().cloned().zip((0..k).map(Word::letter)).collect();
    let loops = orbit(k, seeds, |g: &Vec<State>, a| g.iter().map(|&y| la.step3(y, a)).collect());

    // the least lasso of each behaviour is (rep of its spoke class, rep of its loop behaviour)
    let mut best: HashMap<Vec<State>, Lasso> = HashMap::new();
    for (fq, u) in f.iter().zip(word.representatives()) {
        for (g, v) in loops.items.iter().zip(&loops.reps) {
            let l = Lasso::new(u.clone(), v.clone()).expect("loops are nonempty");
            best.entry(compose(g, fq))
                .and_modify(|cur| {
                    if l < *cur {
                        *cur = l.clone();
                    }
                })
                .or_insert(l);
        }
    }
    let mut classes: Vec<(Lasso, Vec<State>)> = best.into_iter().map(|(h, l)| (l, h)).collect();
    classes.sort();
    let index: HashMap<&[State], usize> = classes.iter().enumerate().map(|(i, (_, h))| (h.as_slice(), i)).collect();
    let lookup = |h: Vec<State>| index[h.as_slice()];

    let letters1: Vec<Vec<State>> = (0..k).map(|a| spoke.action(&Word::letter(a))).collect();
    let sigma2 = f
        .iter()
        .flat_map(|fq| (0..k).map(move |a| (fq, a)))
        .map(|(fq, a)| lookup(compose(&entry[a], fq)))
        .collect();
    let sigma3 = classes
        .iter()
        .flat_map(|(_, h)| (0..k).map(move |a| (h, a)))
        .map(|(h, a)| lookup(h.iter().map(|&y| la.step3(y, a)).collect()))
        .collect();
    let left_ext = classes
        .iter()
        .flat_map(|(_, h)| letters1.iter().map(move |d| (h, d)))
        .map(|(h, d)| lookup(compose(h, d)))
        .collect();
    LassoCongruenceRep {
        word,
        lasso_count: classes.len(),
        sigma2,
        sigma3,
        left_ext,
        reps: classes.into_iter().map(|(l, _)| l).collect(),
        accepted: None,
    }
}

/// `T(x̄, δ₁, δ₂, δ₃) = (ker δ₁♯, ker δ♯)` of the reachable part, with
/// accepted classes `{[(u, v)] | δ(x̄, (u, v)) ∈ c}` when `c` is present.
pub fn lasso_transition(la: &LassoAutomaton) -> Result<LassoCongruenceRep> {
    let (r, _) = lasso_reachable_part(la)?;
    let c = behaviour_congruence(&r);
    let accepted = r
        .accepting()
        .map(|_| c.reps.iter().map(|l| r.accepts_from(0, l)).collect());
    c.with_accepted(accepted)
}

/// `Eq(X)`: the largest set of equations satisfied by `la`, quantified over
/// every `X₁` state.
pub fn eq_set(la: &LassoAutomaton) -> LassoCongruenceRep {
    behaviour_congruence(la)
}

/// `M(C₁, C₂)`: word classes, lasso classes, pointed at `[ε]`, accepting the
/// accepted lasso classes if present.
pub fn lasso_machine(c: &LassoCongruenceRep) -> LassoAutomaton {
    let w = &c.word;
    let right = (0..w.class_count())
        .flat_map(|q| (0..c.k()).map(move |a| w.right_step(q, a)))
        .collect();
    LassoAutomaton::new(
        w.alphabet().clone(),
        w.class_count(),
        c.lasso_count,
        right,
        c.sigma2.clone(),
        c.sigma3.clone(),
        Some(w.eps_class()),
        c.accepted.clone(),
    )
    .expect("class tables are total")
}

/// The counit `ε₁([u]) = δ₁(x̄, u)`, `ε₂([(u, v)]) = δ(x̄, (u, v))`, checked to
/// be a morphism `M T (la) → la`.
pub fn lasso_counit(la: &LassoAutomaton) -> Result<LassoMorphism> {
    let x = la.require_initial("lasso_counit")?;
    let c = behaviour_congruence(&lasso_reachable_part(la)?.0);
    let h = LassoMorphism {
        spoke: c.word.representatives().iter().map(|u| la.run_spoke(x, u)).collect(),
        cycle: c.reps.iter().map(|l| la.run_lasso(x, l)).collect(),
    };
    if !is_lasso_morphism(&lasso_machine(&c), &la.with_accepting(None)?, &h) {
        return Err(Violation::new("lasso counit is a morphism", format!("{h:?}")).into());
    }
    Ok(h)
}

/// Outcome of a satisfaction check, with a human-readable witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Whether `la` satisfies every equation of `e`, i.e. `e ⊆ Eq(la)` on both
/// sorts. The class map `e → Eq(la)` is well defined iff it commutes with
/// every generator, which is checked directly.
pub fn satisfies_equations(la: &LassoAutomaton, e: &LassoCongruenceRep) -> Result<Verdict> {
    la.alphabet().check_same(e.word.alphabet())?;
    let t = eq_set(la);
    let k = la.alphabet().len();
    let ab = la.alphabet();
    let word_img: Vec<usize> = e.word.representatives().iter().map(|u| t.word.class_of(u)).collect();
    let lasso_img: Vec<usize> = e.reps.iter().map(|l| t.class_of(l)).collect();
    for q in 0..e.word.class_count() {
        for a in 0..k {
            let r = e.word.right_step(q, a);
            if word_img[r] != t.word.right_step(word_img[q], a) {
                return Ok(Verdict::Fails(format!(
                    "{} = {} holds in the equations but not in the automaton",
                    ab.render(&e.word.representative(q).append(a)),
                    ab.render(e.word.representative(r))
                )));
            }
            let p = e.sigma2(q, a);
            if lasso_img[p] != t.sigma2(word_img[q], a) {
                let l = Lasso::new(e.word.representative(q).clone(), Word::letter(a))?;
                return Ok(Verdict::Fails(format!(
                    "{} = {} holds in the equations but not in the automaton",
                    l.render(ab),
                    e.reps[p].render(ab)
                )));
            }
        }
    }
    for p in 0..e.lasso_count {
        for a in 0..k {
            let s = e.sigma3(p, a);
            if lasso_img[s] != t.sigma3(lasso_img[p], a) {
                let rp = &e.reps[p];
                let l = Lasso::new(rp.spoke().clone(), rp.cycle().append(a))?;
                return Ok(Verdict::Fails(format!(
                    "{} = {} holds in the equations but not in the automaton",
                    l.render(ab),
                    e.reps[s].render(ab)
                )));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `la ⊎ lb`, with `lb`'s states shifted past `la`'s in both sorts.
fn disjoint_union(la: &LassoAutomaton, lb: &LassoAutomaton) -> Result<LassoAutomaton> {
    la.alphabet().check_same(lb.alphabet())?;
    let (n1, n2) = (la.spoke_count(), la.loop_count());
    let (a1, a2, a3) = la.tables();
    let (b1, b2, b3) = lb.tables();
    let shift = |t: &[State], by: usize| t.iter().map(|&s| s + by).collect::<Vec<_>>();
    let cat = |x: &[State], y: Vec<State>| x.iter().copied().chain(y).collect::<Vec<_>>();
    let acc = |l: &LassoAutomaton| l.accepting().map(<[bool]>::to_vec).unwrap_or(vec![false; l.loop_count()]);
    LassoAutomaton::new(
        la.alphabet().clone(),
        n1 + lb.spoke_count(),
        n2 + lb.loop_count(),
        cat(a1, shift(b1, n1)),
        cat(a2, shift(b2, n2)),
        cat(a3, shift(b3, n2)),
        None,
        Some(acc(la).into_iter().chain(acc(lb)).collect()),
    )
}

/// Whether every `X₁` state of `la` accepts a lasso language denoted by some
/// `X₁` state of `d`, decided exactly by two-sorted bisimilarity.
pub fn satisfies_coequations(la: &LassoAutomaton, d: &LassoAutomaton) -> Result<Verdict> {
    la.require_accepting("satisfies_coequations")?;
    d.require_accepting("satisfies_coequations")?;
    let u = disjoint_union(la, d)?;
    let (p1, _) = lasso_bisimilarity(&u);
    let n1 = la.spoke_count();
    for x in 0..n1 {
        if !(n1..u.spoke_count()).any(|y| p1.same(x, y)) {
            return Ok(Verdict::Fails(format!("state {x} accepts a language outside the coequations")));
        }
    }
    Ok(Verdict::Holds)
}

/// [`satisfies_coequations`] for every accepting set `c ⊆ X₂`.
pub fn satisfies_coequations_all_colorings(la: &LassoAutomaton, d: &LassoAutomaton, limit: usize) -> Result<Verdict> {
    let n2 = la.loop_count();
    if n2 > limit.min(30) {
        return Err(Error::SizeGuard {
            what: "accepting-set colorings",
            needed: n2,
            limit: limit.min(30),
        });
    }
    for c in 0..1usize << n2 {
        let colored = la.with_accepting(Some((0..n2).map(|y| c >> y & 1 == 1).collect()))?;
        if let Verdict::Fails(w) = satisfies_coequations(&colored, d)? {
            return Ok(Verdict::Fails(format!("coloring {:?}: {w}", colored.accepting_states())));
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lasso::{lasso_isomorphic, lasso_minimal};
    use crate::samples::first_letter_lasso;
    use crate::word::Alphabet;

    fn l(s: &str) -> Lasso {
        Lasso::parse(&Alphabet::letters(2), s).unwrap()
    }

    #[test]
    fn transition_of_first_letter_automaton() {
        let la = first_letter_lasso(Some(&[0]));
        let c = lasso_transition(&la).unwrap();
        assert_eq!(c.word_part().class_count(), 1);
        assert_eq!(c.lasso_count(), 2);
        assert_eq!(c.representatives(), &[l(":a"), l(":b")]);
        assert_eq!(c.accepted_classes(), Some(&[true, false][..]));
        c.check_invariants().unwrap();
        assert_eq!(c.class_of(&l("ab:ba")), 1);
    }

    #[test]
    fn one_state_per_sort() {
        let ab = Alphabet::letters(2);
        let la = LassoAutomaton::new(ab, 1, 1, vec![0, 0], vec![0, 0], vec![0, 0], Some(0), None).unwrap();
        let c = lasso_transition(&la).unwrap();
        assert_eq!((c.word_part().class_count(), c.lasso_count()), (1, 1));
        assert_eq!(c.representative(0), &l(":a"));
    }

    #[test]
    fn unit_and_counit() {
        let la = first_letter_lasso(Some(&[0]));
        let c = lasso_transition(&la).unwrap();
        let m = lasso_machine(&c);
        assert_eq!(lasso_transition(&m).unwrap(), c);
        let h = lasso_counit(&la).unwrap();
        assert_eq!(h.spoke, vec![0]);
        assert_eq!(h.cycle, vec![0, 1]);
        let hm = lasso_counit(&m).unwrap();
        assert_eq!(hm.spoke, vec![0]);
        assert_eq!(hm.cycle, vec![0, 1]);
    }

    #[test]
    fn eq_set_agrees_with_transition_on_reachable() {
        let la = first_letter_lasso(None);
        assert_eq!(eq_set(&la), lasso_transition(&la).unwrap());
    }

    #[test]
    fn eq_set_of_two_components() {
        // two disconnected spoke states: 0 enters the loop sort at r, 1 at s
        let ab = Alphabet::letters(2);
        let la = LassoAutomaton::new(ab, 2, 2, vec![0, 0, 1, 1], vec![0, 0, 1, 1], vec![0, 0, 1, 1], None, None).unwrap();
        let e = eq_set(&la);
        assert_eq!(e.word_part().class_count(), 1);
        assert_eq!(e.lasso_count(), 1);
    }

    #[test]
    fn equations_satisfaction() {
        let la = first_letter_lasso(None);
        let e = eq_set(&la);
        assert!(satisfies_equations(&la, &e).unwrap().holds());
        // a finer set of equations: the machine of a product with a spoke counter
        let ab = Alphabet::letters(2);
        let finer_aut = LassoAutomaton::new(ab.clone(), 2, 4, vec![1, 1, 0, 0], vec![0, 1, 2, 3], vec![0, 0, 1, 1, 2, 2, 3, 3], Some(0), None)
            .unwrap();
        let finer = eq_set(&finer_aut);
        assert!(satisfies_equations(&la, &finer).unwrap().holds());
        // a coarser set identifies (ε,a) with (ε,b)
        let coarse_aut = LassoAutomaton::new(ab, 1, 1, vec![0, 0], vec![0, 0], vec![0, 0], Some(0), None).unwrap();
        let verdict = satisfies_equations(&la, &eq_set(&coarse_aut)).unwrap();
        assert!(matches!(verdict, Verdict::Fails(ref w) if w.contains("(ε,b) = (ε,a)")), "{verdict:?}");
    }

    #[test]
    fn coequations() {
        let la = first_letter_lasso(Some(&[0]));
        let own = lasso_minimal(&la).unwrap();
        assert!(satisfies_coequations(&la, &own).unwrap().holds());
        let ab = Alphabet::letters(2);
        let only_empty =
            LassoAutomaton::new(ab, 1, 1, vec![0, 0], vec![0, 0], vec![0, 0], Some(0), Some(vec![false])).unwrap();
        assert!(!satisfies_coequations(&la, &only_empty).unwrap().holds());
        assert!(lasso_isomorphic(&own, &lasso_minimal(&own).unwrap()));
    }
}
