//! The invariant suite behind `aut laws`: every law is a function returning
//! a [`Violation`] on failure, and the suites gather them into reports.

use serde::Serialize;

use crate::dfa::{
    bisimilarity_partition, is_morphism, isomorphic, product_pointed, reachable_part, unique_morphism, AcceptingDfa,
    Dfa, PointedDfa,
};
use crate::equations::{embed_cofree_check, free, mupl, nuc, preformation_closure_check, EmbedOutcome};
use crate::error::{ensure, Error, Result, Violation};
use crate::lasso::{
    eq_set, lasso_bisimilarity, lasso_counit, lasso_isomorphic, lasso_machine, lasso_minimal, lasso_mupl, lasso_nuc,
    lasso_reachable_part, lasso_transition, unique_lasso_morphism, LassoAutomaton,
};
use crate::monoid::{congruence_leq, counit, m_with_acceptance, machine, t_with_acceptance, transition_monoid};
use crate::omega::{
    gamma_equivalent, pullback_preserves_admissible, saturation_partition, wilke_refines, wilke_transition,
};
use crate::oracle::{
    accepts_by_hand, brute_congruence, brute_gamma_closure, brute_lasso_classes, enumerate_lassos, languages_equal_upto,
    naive_gamma, BoundConfig,
};
use crate::partition::Partition;
use crate::word::{Alphabet, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not run, e.g. a size guard tripped.
    Skip,
}

/// One line of a law report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl LawReport {
    pub fn from_result(check: &str, r: Result<()>) -> Self {
        let (status, witness) = match r {
            Ok(()) => (Status::Pass, None),
            Err(Error::Law(v)) => (Status::Fail, Some(v.to_string())),
            Err(e @ Error::SizeGuard { .. }) => (Status::Skip, Some(e.to_string())),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        LawReport {
            check: check.to_string(),
            status,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

fn law(ok: bool, check: &str, witness: impl FnOnce() -> String) -> Result<()> {
    Ok(ensure(ok, check, witness)?)
}

// ---- deterministic automata ----

/// Largest class count for which a law rebuilds the transition monoid of a
/// machine; that monoid stores one state map per class, so memory grows
/// with the square of the class count.
pub const MAX_MACHINE_CLASSES: usize = 4096;

fn machine_guard(classes: usize) -> Result<()> {
    if classes > MAX_MACHINE_CLASSES {
        return Err(Error::SizeGuard {
            what: "machine monoid classes",
            needed: classes,
            limit: MAX_MACHINE_CLASSES,
        });
    }
    Ok(())
}

/// `T M T = T` on the class tables.
pub fn dfa_unit(p: &PointedDfa) -> Result<()> {
    let c = transition_monoid(p);
    machine_guard(c.class_count())?;
    let again = transition_monoid(&machine(&c));
    law(again == c, "unit: C = TMC", || format!("{} vs {} classes", c.class_count(), again.class_count()))
}

pub fn dfa_counit(p: &PointedDfa) -> Result<()> {
    counit(p).map(|_| ())
}

/// Classes agree with brute-force word comparison up to `bound`.
pub fn dfa_brute_classes(p: &PointedDfa, bound: usize) -> Result<()> {
    let c = transition_monoid(p);
    for (u, v) in brute_congruence(p.dfa(), bound) {
        law(c.class_of(&u) == c.class_of(&v), "classes agree with brute force", || {
            format!("{} and {}", p.alphabet().render(&u), p.alphabet().render(&v))
        })?;
    }
    Ok(())
}

/// `L(M̄ T̄ a) = L(a)` up to length `2 · |X|`.
pub fn dfa_language_preservation(a: &AcceptingDfa) -> Result<()> {
    let m = m_with_acceptance(&t_with_acceptance(a)?)?;
    let (x, y) = (a.initial().expect("pointed"), m.initial().expect("pointed"));
    let diff = languages_equal_upto(
        a.alphabet().len(),
        2 * a.state_count(),
        |w| accepts_by_hand(a, x, w),
        |w| accepts_by_hand(&m, y, w),
    );
    law(diff.is_none(), "language preservation", || {
        a.alphabet().render(diff.as_ref().expect("differs"))
    })
}

fn all_maps(n: usize, m: usize) -> impl Iterator<Item = Vec<State>> {
    (0..m.pow(n as u32)).map(move |mut code| {
        (0..n)
            .map(|_| {
                let s = code % m;
                code /= m;
                s
            })
            .collect()
    })
}

/// Every state map that is a morphism `src → dst` equals the computed one.
pub fn dfa_thinness(src: &PointedDfa, dst: &PointedDfa) -> Result<()> {
    let (n, m) = (src.state_count(), dst.state_count());
    if (m as f64).powi(n as i32) > 1e6 {
        return Err(Error::SizeGuard {
            what: "state maps",
            needed: m.pow(n.min(12) as u32),
            limit: 1_000_000,
        });
    }
    let found = unique_morphism(src, dst);
    for g in all_maps(n, m) {
        if is_morphism(src, dst, &g) {
            law(found.as_ref() == Some(&g), "thinness", || format!("{g:?} vs {found:?}"))?;
        }
    }
    if let Some(h) = &found {
        law(is_morphism(src, dst, h), "computed morphism is a morphism", || format!("{h:?}"))?;
    }
    Ok(())
}

/// `A → B` implies `T(A) ⊆ T(B)`.
pub fn dfa_monotonicity(src: &PointedDfa, dst: &PointedDfa) -> Result<()> {
    if unique_morphism(src, dst).is_none() {
        return Ok(());
    }
    law(
        congruence_leq(&transition_monoid(src), &transition_monoid(dst))?,
        "monotonicity of T",
        || "a morphism exists but the congruences do not refine".into(),
    )
}

/// The language quotient of a pointed accepting automaton.
pub fn language_quotient(a: &AcceptingDfa) -> Result<PointedDfa> {
    let p = bisimilarity_partition(a);
    let d = a.dfa();
    let k = d.alphabet().len();
    let mut reps = vec![0; p.class_count()];
    for s in (0..d.state_count()).rev() {
        reps[p.class_of(s)] = s;
    }
    let table = reps
        .iter()
        .flat_map(|&s| (0..k).map(move |c| (s, c)))
        .map(|(s, c)| p.class_of(d.step(s, c)))
        .collect();
    let q = Dfa::new(d.alphabet().clone(), p.class_count(), table)?;
    Ok(reachable_part(&q.pointed(p.class_of(a.initial().ok_or(Error::MissingInitial("language_quotient"))?))?).0)
}

/// `νC(νC(p)) ≅ νC(p)`.
pub fn nuc_idempotence(p: &PointedDfa) -> Result<()> {
    let n = nuc(p);
    machine_guard(n.state_count())?;
    let nn = nuc(&n);
    law(isomorphic(&n, &nn), "νC is idempotent", || format!("{} vs {} states", n.state_count(), nn.state_count()))
}

/// `free(X) ≅ Π νC(X, x)`.
pub fn free_is_product(d: &Dfa) -> Result<()> {
    let parts = (0..d.state_count())
        .map(|x| Ok(nuc(&d.clone().pointed(x)?)))
        .collect::<Result<Vec<_>>>()?;
    let prod = product_pointed(d.alphabet(), &parts)?;
    let f = free(d);
    law(isomorphic(&f, &prod), "free is the product of νC", || {
        format!("{} vs {} states", f.state_count(), prod.state_count())
    })
}

/// Bisimilarity on `μPL` is discrete, `η` is a morphism, the preformation
/// closure holds, and states accept exactly `{u | [u^r] ∈ U}`.
pub fn mupl_laws(a: &AcceptingDfa, cfg: &BoundConfig) -> Result<()> {
    let m = mupl(a, cfg.max_subset_classes)?;
    let acc = m.to_accepting();
    law(bisimilarity_partition(&acc).is_discrete(), "μPL is minimal", || {
        format!("{} states", acc.state_count())
    })?;
    preformation_closure_check(&m)?;
    let classes = m.classes();
    // languages of unions are unions of languages, so large tables are
    // sampled at the empty set, the singletons and the full set
    let n = classes.class_count();
    let probes: Vec<State> = if m.state_count() <= 256 {
        (0..m.state_count()).collect()
    } else {
        std::iter::once(0).chain((0..n).map(|q| 1 << q)).chain([(1 << n) - 1]).collect()
    };
    for u in probes {
        let diff = languages_equal_upto(
            a.alphabet().len(),
            cfg.max_word_len,
            |w| accepts_by_hand(&acc, u, w),
            |w| m.members(u).contains(&classes.class_of(&w.reversed())),
        );
        law(diff.is_none(), "μPL state languages", || {
            format!("{} at {}", m.label(u), a.alphabet().render(diff.as_ref().expect("differs")))
        })?;
    }
    if let Some(x) = a.initial() {
        let diff = languages_equal_upto(
            a.alphabet().len(),
            cfg.max_word_len,
            |w| accepts_by_hand(a, x, w),
            |w| accepts_by_hand(&acc, m.eta()[x], w),
        );
        law(diff.is_none(), "η preserves the language", || {
            a.alphabet().render(diff.as_ref().expect("differs"))
        })?;
    }
    Ok(())
}

pub fn embed_cofree(a: &AcceptingDfa, cfg: &BoundConfig) -> Result<()> {
    match embed_cofree_check(a, cfg.max_subset_classes, cfg.max_subset_classes)? {
        EmbedOutcome::Failed(v) => Err(v.into()),
        EmbedOutcome::HypothesisFailed | EmbedOutcome::Embedded => Ok(()),
    }
}

/// Every law applicable to a pointed accepting DFA.
pub fn dfa_suite(a: &AcceptingDfa, cfg: &BoundConfig) -> Vec<LawReport> {
    let p = match a.pointed() {
        Ok(p) => reachable_part(&p).0,
        Err(e) => return vec![LawReport::from_result("pointed", Err(e))],
    };
    let a = match crate::dfa::reachable_accepting(a) {
        Ok(r) => r,
        Err(e) => return vec![LawReport::from_result("reachable", Err(e))],
    };
    let quotient = language_quotient(&a);
    vec![
        LawReport::from_result("unit", dfa_unit(&p)),
        LawReport::from_result("counit", dfa_counit(&p)),
        LawReport::from_result("brute-force classes", dfa_brute_classes(&p, 4.min(cfg.max_word_len))),
        LawReport::from_result("language preservation", dfa_language_preservation(&a)),
        LawReport::from_result("thinness", quotient.clone().and_then(|q| dfa_thinness(&p, &q))),
        LawReport::from_result("self thinness", dfa_thinness(&p, &p)),
        LawReport::from_result("monotonicity", quotient.and_then(|q| dfa_monotonicity(&p, &q))),
        LawReport::from_result("νC idempotence", nuc_idempotence(&p)),
        LawReport::from_result("free product", free_is_product(p.dfa())),
        LawReport::from_result("μPL", mupl_laws(&a, cfg)),
        LawReport::from_result("embed cofree", embed_cofree(&a, cfg)),
    ]
}

// ---- lasso automata ----

/// `T M T = T` with accepted classes.
pub fn lasso_unit(la: &LassoAutomaton) -> Result<()> {
    let c = lasso_transition(la)?;
    let again = lasso_transition(&lasso_machine(&c))?;
    law(again == c, "lasso unit", || {
        format!("{} vs {} lasso classes", c.lasso_count(), again.lasso_count())
    })?;
    Ok(c.check_invariants()?)
}

pub fn lasso_counit_law(la: &LassoAutomaton) -> Result<()> {
    lasso_counit(la).map(|_| ())
}

/// `T(X, x̄) = Eq(X)` on the reachable part.
pub fn lasso_t_is_eq(la: &LassoAutomaton) -> Result<()> {
    let (r, _) = lasso_reachable_part(la)?;
    let t = lasso_transition(&r)?.with_accepted(None)?;
    law(t == eq_set(&r), "T = Eq", || "tables differ".into())
}

/// `νC(⟨L⟩) ≅ ⟨L⟩` for the minimal automaton `⟨L⟩`.
pub fn lasso_nuc_of_minimal(la: &LassoAutomaton) -> Result<()> {
    let m = lasso_minimal(la)?;
    let n = lasso_nuc(&m)?;
    law(lasso_isomorphic(&n, &m), "νC(⟨L⟩) ≅ ⟨L⟩", || {
        format!(
            "⟨L⟩ has {}+{} states, νC(⟨L⟩) has {}+{}",
            m.spoke_count(),
            m.loop_count(),
            n.spoke_count(),
            n.loop_count()
        )
    })
}

pub fn lasso_mupl_minimal(la: &LassoAutomaton, cfg: &BoundConfig) -> Result<()> {
    let m = lasso_mupl(la, cfg.max_subset_classes)?;
    let (p1, p2) = lasso_bisimilarity(m.automaton());
    law(p1.is_discrete() && p2.is_discrete(), "lasso μPL is minimal", || {
        format!("{} and {} classes", p1.class_count(), p2.class_count())
    })?;
    let t = m.automaton();
    for s in 0..t.spoke_count() {
        for l in enumerate_lassos(la.alphabet().len(), 2, 2) {
            law(t.accepts_from(s, &l) == m.in_language(s, &l), "lasso μPL state languages", || {
                format!("{} at {}", m.lasso_label(s), l.render(la.alphabet()))
            })?;
        }
    }
    Ok(())
}

/// Lasso classes agree with brute-force grouping of lassos within `bound`.
pub fn lasso_brute_classes(la: &LassoAutomaton, bound: usize) -> Result<()> {
    let (r, _) = lasso_reachable_part(la)?;
    let c = lasso_transition(&r)?;
    for group in brute_lasso_classes(&r, bound, bound) {
        let p = c.class_of(&group[0]);
        for l in &group {
            law(c.class_of(l) == p, "lasso classes agree with brute force", || {
                format!("{} and {}", group[0].render(la.alphabet()), l.render(la.alphabet()))
            })?;
        }
    }
    let groups = brute_lasso_classes(&r, bound, bound);
    let mut seen = vec![false; c.lasso_count()];
    for g in &groups {
        let p = c.class_of(&g[0]);
        law(!seen[p], "distinct brute classes stay distinct", || {
            g[0].render(la.alphabet())
        })?;
        seen[p] = true;
    }
    Ok(())
}

/// Laws on a lasso automaton with initial state and accepting set.
pub fn lasso_suite(la: &LassoAutomaton, cfg: &BoundConfig) -> Vec<LawReport> {
    vec![
        LawReport::from_result("lasso unit", lasso_unit(la)),
        LawReport::from_result("lasso counit", lasso_counit_law(la)),
        LawReport::from_result("T = Eq", lasso_t_is_eq(la)),
        LawReport::from_result("νC of the minimal automaton", lasso_nuc_of_minimal(la)),
        LawReport::from_result("lasso μPL", lasso_mupl_minimal(la, cfg)),
        LawReport::from_result("lasso brute-force classes", lasso_brute_classes(la, 3.min(cfg.max_spoke))),
    ]
}

// ---- Ω-automata ----

/// `gamma_equivalent` agrees with naive unrolling on all pairs within the
/// bound over `k` letters.
pub fn gamma_exactness(k: usize, bound: usize) -> Result<()> {
    let all = enumerate_lassos(k, bound, bound);
    for a in &all {
        for b in &all {
            law(gamma_equivalent(a, b) == naive_gamma(a, b), "γ-equivalence is exact", || {
                format!("{a:?} vs {b:?}")
            })?;
        }
    }
    Ok(())
}

/// `E` equals the closure of bounded γ-pairs, and every generating pair
/// carries a valid witness.
pub fn saturation_agrees(la: &LassoAutomaton, bound: usize) -> Result<()> {
    let (r, _) = lasso_reachable_part(la)?;
    let e = saturation_partition(&r);
    for p in &e.pairs {
        law(
            gamma_equivalent(&p.lasso, &p.other)
                && r.run_lasso(p.state, &p.lasso) == p.left
                && r.run_lasso(p.state, &p.other) == p.right,
            "constraint witnesses",
            || format!("{p:?}"),
        )?;
    }
    let brute: Partition = brute_gamma_closure(&r, bound, bound);
    law(brute == e.partition, "E agrees with bounded γ-closure", || {
        format!("{:?} vs {:?}", e.partition.class_ids(), brute.class_ids())
    })
}

pub fn wilke_laws(la: &LassoAutomaton) -> Result<()> {
    wilke_transition(la).map(|_| ())
}

/// Preimages of admissible sets along `la → ⟨L⟩` are admissible, and the
/// Wilke congruences refine along it.
pub fn wilke_monotonicity(la: &LassoAutomaton) -> Result<()> {
    let (r, _) = lasso_reachable_part(la)?;
    let m = lasso_minimal(&r)?;
    let h = unique_lasso_morphism(&r.with_accepting(None)?, &m.with_accepting(None)?)
        .ok_or_else(|| Violation::new("a morphism onto ⟨L⟩ exists", "none found"))?;
    law(pullback_preserves_admissible(&r, &m, &h), "preimages of admissible sets", || format!("{h:?}"))?;
    law(wilke_refines(&wilke_transition(&r)?, &wilke_transition(&m)?)?, "Wilke monotonicity", || {
        "the congruences do not refine".into()
    })
}

pub fn meet_preservation(alphabet: &Alphabet, las: &[LassoAutomaton]) -> Result<()> {
    match crate::omega::meet_preservation_check(alphabet, las)? {
        crate::lasso::Verdict::Holds => Ok(()),
        crate::lasso::Verdict::Fails(w) => Err(Violation::new("meet preservation", w).into()),
    }
}

/// Laws on a pointed lasso automaton read as an Ω-automaton.
pub fn omega_suite(la: &LassoAutomaton, cfg: &BoundConfig) -> Vec<LawReport> {
    vec![
        LawReport::from_result("admissibility", saturation_agrees(la, cfg.max_spoke.min(cfg.max_loop))),
        LawReport::from_result("Wilke laws", wilke_laws(la)),
        LawReport::from_result("Wilke monotonicity", wilke_monotonicity(la)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{first_letter_lasso, meet_pair, two_state_accepting, spoke_parity_lasso};

    #[test]
    fn two_state_automaton_passes() {
        let reports = dfa_suite(&two_state_accepting(), &BoundConfig::default());
        for r in &reports {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn first_letter_lasso_passes() {
        let la = first_letter_lasso(Some(&[0]));
        let cfg = BoundConfig::default();
        for r in lasso_suite(&la, &cfg).iter().chain(&omega_suite(&la, &cfg)) {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn known_failures_are_reported() {
        let r = LawReport::from_result("νC", lasso_nuc_of_minimal(&spoke_parity_lasso()));
        assert_eq!(r.status, Status::Fail);
        let [a, b] = meet_pair();
        let r = LawReport::from_result("meet", meet_preservation(&Alphabet::letters(2), &[a, b]));
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.unwrap().contains("(ε,a) and (ε,b)"));
    }

    #[test]
    fn report_json_shape() {
        let r = LawReport::from_result("x", Ok(()));
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"check":"x","status":"pass"}"#);
        let f = LawReport::from_result("y", Err(Violation::new("y", "w").into()));
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"check":"y","status":"fail","witness":"y: w"}"#);
    }

    #[test]
    fn gamma_exact_small() {
        gamma_exactness(2, 2).unwrap();
    }
}
