use proptest::prelude::*;

use aut_core::dfa::{bisimilarity_partition, first_difference, reachable_part};
use aut_core::format::{numbered, parse, write, write_dfa, write_lasso, AutomatonFile};
use aut_core::lasso::{lasso_reachable_part, lasso_transition};
use aut_core::monoid::{machine, transition_monoid, verify_congruence};
use aut_core::omega::{gamma_equivalent, saturation_partition, wilke_transition};
use aut_core::oracle::{accepts_by_hand, brute_gamma_closure, naive_gamma};
use aut_core::{AcceptingDfa, Alphabet, Dfa, Lasso, LassoAutomaton, Word};

fn dfa(max_states: usize, max_letters: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states, 1..=max_letters).prop_flat_map(|(n, k)| {
        prop::collection::vec(0..n, n * k).prop_map(move |t| Dfa::new(Alphabet::letters(k), n, t).unwrap())
    })
}

fn dfa_over(max_states: usize, k: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(move |n| {
        prop::collection::vec(0..n, n * k).prop_map(move |t| Dfa::new(Alphabet::letters(k), n, t).unwrap())
    })
}

fn accepting(max_states: usize, max_letters: usize) -> impl Strategy<Value = AcceptingDfa> {
    dfa(max_states, max_letters).prop_flat_map(|d| {
        let n = d.state_count();
        (prop::collection::vec(any::<bool>(), n), 0..n)
            .prop_map(move |(c, x)| AcceptingDfa::new(d.clone(), c, Some(x)).unwrap())
    })
}

fn lasso_automaton(max1: usize, max2: usize) -> impl Strategy<Value = LassoAutomaton> {
    (1..=max1, 1..=max2).prop_flat_map(|(n1, n2)| {
        (
            prop::collection::vec(0..n1, n1 * 2),
            prop::collection::vec(0..n2, n1 * 2),
            prop::collection::vec(0..n2, n2 * 2),
            prop::collection::vec(any::<bool>(), n2),
        )
            .prop_map(move |(d1, d2, d3, c)| {
                let la = LassoAutomaton::new(Alphabet::letters(2), n1, n2, d1, d2, d3, Some(0), Some(c)).unwrap();
                lasso_reachable_part(&la).unwrap().0
            })
    })
}

fn word(k: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k, 0..=max).prop_map(Word::from)
}

fn lasso(max_spoke: usize, max_loop: usize) -> impl Strategy<Value = Lasso> {
    (word(2, max_spoke), prop::collection::vec(0..2usize, 1..=max_loop))
        .prop_map(|(u, v)| Lasso::new(u, Word::from(v)).unwrap())
}

proptest! {
    #[test]
    fn dfa_files_round_trip(a in accepting(5, 3)) {
        let names = numbered("q", a.state_count());
        let text = write_dfa(a.dfa(), &names, a.initial(), Some(a.accepting()));
        let parsed = parse(&text).unwrap();
        prop_assert_eq!(write(&parsed), text.clone());
        match parse(&write(&parsed)).unwrap() {
            AutomatonFile::Dfa(f) => prop_assert_eq!(f.accepting_dfa().unwrap(), a),
            _ => prop_assert!(false, "wrong kind"),
        }
    }

    #[test]
    fn lasso_files_round_trip(la in lasso_automaton(3, 3)) {
        let text = write_lasso(&la, &numbered("p", la.spoke_count()), &numbered("r", la.loop_count()));
        match parse(&text).unwrap() {
            AutomatonFile::Lasso(f) => prop_assert_eq!(f.automaton, la),
            _ => prop_assert!(false, "wrong kind"),
        }
    }

    #[test]
    fn runs_compose(d in dfa(5, 3), u in word(3, 6), v in word(3, 6), s in 0usize..5) {
        let k = d.alphabet().len();
        let (u, v): (Word, Word) = (u.letters().iter().map(|&a| a % k).collect(), v.letters().iter().map(|&a| a % k).collect());
        let s = s % d.state_count();
        prop_assert_eq!(d.run_word(s, &u.concat(&v)), d.run_word(d.run_word(s, &u), &v));
    }

    #[test]
    fn reachable_part_is_idempotent(d in dfa(6, 2)) {
        let (r, _) = reachable_part(&d.pointed(0).unwrap());
        let (rr, map) = reachable_part(&r);
        prop_assert_eq!(&rr, &r);
        prop_assert!(map.iter().enumerate().all(|(i, m)| *m == Some(i)));
    }

    /// Two states are bisimilar iff they accept the same words of length
    /// below the state count.
    #[test]
    fn bisimilarity_matches_bounded_languages(a in accepting(5, 2)) {
        let p = bisimilarity_partition(&a);
        let n = a.state_count();
        let words: Vec<Word> = aut_core::oracle::enumerate_words(a.alphabet().len(), n);
        for s in 0..n {
            for t in 0..n {
                let same = words.iter().all(|w| accepts_by_hand(&a, s, w) == accepts_by_hand(&a, t, w));
                prop_assert_eq!(p.same(s, t), same);
                prop_assert_eq!(first_difference(&a, s, &a, t).is_none(), same);
            }
        }
    }

    #[test]
    fn transition_classes_are_a_congruence(d in dfa_over(4, 2), u in word(2, 5), v in word(2, 5)) {
        let (r, _) = reachable_part(&d.pointed(0).unwrap());
        let c = transition_monoid(&r);
        prop_assert_eq!(c.class_of(&u.concat(&v)), c.multiply(c.class_of(&u), c.class_of(&v)));
        prop_assert_eq!(r.dfa().action(&u) == r.dfa().action(&v), c.class_of(&u) == c.class_of(&v));
        prop_assert!(c.check_invariants().is_ok());
    }

    #[test]
    fn machine_round_trips_through_verification(d in dfa_over(4, 2)) {
        let c = transition_monoid(&d.pointed(0).unwrap());
        let m = machine(&c);
        prop_assert_eq!(transition_monoid(&m), c.clone());
        let raw = aut_core::monoid::RawCongruence {
            alphabet: c.alphabet().clone(),
            class_count: c.class_count(),
            eps_class: c.eps_class(),
            right_step: m.dfa().table().to_vec(),
            accepted: None,
        };
        prop_assert_eq!(verify_congruence(&raw).unwrap(), c);
    }

    #[test]
    fn gamma_matches_unrolling(l1 in lasso(4, 4), l2 in lasso(4, 4)) {
        prop_assert_eq!(gamma_equivalent(&l1, &l2), naive_gamma(&l1, &l2));
        prop_assert_eq!(gamma_equivalent(&l1, &l2), gamma_equivalent(&l2, &l1));
    }

    #[test]
    fn gamma_rules_hold(u in word(2, 3), v in prop::collection::vec(0..2usize, 1..=3), j in 1usize..4) {
        let v = Word::from(v);
        let l = Lasso::new(u.clone(), v.clone()).unwrap();
        prop_assert!(gamma_equivalent(&l, &Lasso::new(u.concat(&v), v.clone()).unwrap()));
        prop_assert!(gamma_equivalent(&l, &Lasso::new(u.clone(), v.repeat(j)).unwrap()));
        let a = v.letters()[0];
        let rotated = Lasso::new(u.append(a), v.tail().append(a)).unwrap();
        prop_assert!(gamma_equivalent(&l, &rotated));
    }

    #[test]
    fn lasso_classes_respect_runs(la in lasso_automaton(3, 3), l in lasso(3, 3)) {
        let c = lasso_transition(&la).unwrap();
        let rep = c.representative(c.class_of(&l));
        for x in 0..la.spoke_count() {
            prop_assert_eq!(la.run_lasso(x, rep), la.run_lasso(x, &l));
        }
    }

    #[test]
    fn admissibility_matches_bounded_closure(la in lasso_automaton(2, 3)) {
        prop_assert_eq!(saturation_partition(&la).partition, brute_gamma_closure(&la, 3, 3));
    }

    #[test]
    fn wilke_product_matches_concatenation(la in lasso_automaton(3, 3), u in prop::collection::vec(0..2usize, 1..=4), v in prop::collection::vec(0..2usize, 1..=4)) {
        let w = wilke_transition(&la).unwrap();
        let (u, v) = (Word::from(u), Word::from(v));
        let (p, q) = (w.plus_class_of(&u).unwrap(), w.plus_class_of(&v).unwrap());
        prop_assert_eq!(w.plus_class_of(&u.concat(&v)).unwrap(), w.multiply(p, q));
        let uv = Lasso::new(u.clone(), v.clone()).unwrap();
        prop_assert_eq!(w.up_class_of(&uv), w.mixed(p, w.omega(q)));
    }
}
