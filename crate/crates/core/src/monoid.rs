//! Transition monoids, right-Cayley machines and the Galois connection
//! between reachable pointed automata and monoid congruences on Σ*.
//!
//! A congruence on the (infinite) free monoid is presented by its finite
//! right-Cayley machine together with a left-action table certifying that the
//! right congruence it induces is two-sided. Classes are numbered by their
//! shortlex-least representative, so the class of ε is always 0 for values
//! built here.

use std::collections::VecDeque;

use crate::closure::{compose, orbit};
use crate::dfa::{is_morphism, reachable_part, AcceptingDfa, Dfa, PointedDfa};
use crate::error::{Error, Result, Violation};
use crate::word::{Alphabet, State, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruenceRep {
    alphabet: Alphabet,
    class_count: usize,
    eps_class: usize,
    /// `right[q * |Σ| + a] = [wa]` for `q = [w]`
    right: Vec<usize>,
    /// `left[q * |Σ| + a] = [aw]` for `q = [w]`
    left: Vec<usize>,
    reps: Vec<Word>,
    accepted: Option<Vec<bool>>,
}

impl CongruenceRep {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn eps_class(&self) -> usize {
        self.eps_class
    }

    pub fn right_step(&self, q: usize, a: Symbol) -> usize {
        self.right[q * self.alphabet.len() + a]
    }

    pub fn left_step(&self, a: Symbol, q: usize) -> usize {
        self.left[q * self.alphabet.len() + a]
    }

    pub fn representative(&self, q: usize) -> &Word {
        &self.reps[q]
    }

    pub fn representatives(&self) -> &[Word] {
        &self.reps
    }

    pub fn accepted_classes(&self) -> Option<&[bool]> {
        self.accepted.as_deref()
    }

    /// `[w]`, computed by running the right-Cayley machine.
    pub fn class_of(&self, w: &Word) -> usize {
        w.letters()
            .iter()
            .fold(self.eps_class, |q, &a| self.right_step(q, a))
    }

    /// The class of `uv` from the classes of `u` and `v`.
    pub fn multiply(&self, p: usize, q: usize) -> usize {
        self.class_of_from(p, &self.reps[q])
    }

    fn class_of_from(&self, start: usize, w: &Word) -> usize {
        w.letters().iter().fold(start, |q, &a| self.right_step(q, a))
    }

    pub fn with_accepted(mut self, accepted: Option<Vec<bool>>) -> Result<Self> {
        if let Some(acc) = &accepted {
            if acc.len() != self.class_count {
                return Err(Error::Invalid("accepted-class vector has the wrong length".into()));
            }
        }
        self.accepted = accepted;
        Ok(self)
    }

    /// The congruence without its accepted classes.
    pub fn bare(&self) -> CongruenceRep {
        CongruenceRep {
            accepted: None,
            ..self.clone()
        }
    }

    /// Checks the structural invariants: right-Cayley reachability from ε,
    /// commuting left and right actions, and shortlex representatives.
    pub fn check_invariants(&self) -> Result<(), Violation> {
        let k = self.alphabet.len();
        for q in 0..self.class_count {
            if self.class_of(&self.reps[q]) != q {
                return Err(Violation::new(
                    "representative",
                    format!("representative {:?} does not lie in class {q}", self.reps[q]),
                ));
            }
            for a in 0..k {
                let t = self.right_step(q, a);
                if self.reps[t] > self.reps[q].append(a) {
                    return Err(Violation::new(
                        "representative",
                        format!("class {t} has a representative longer than {:?}", self.reps[q].append(a)),
                    ));
                }
                for b in 0..k {
                    if self.left_step(a, self.right_step(q, b)) != self.right_step(self.left_step(a, q), b) {
                        return Err(Violation::new(
                            "left/right commute",
                            format!("a={a}, b={b}, q={q}"),
                        ));
                    }
                }
            }
        }
        for a in 0..k {
            if self.left_step(a, self.eps_class) != self.right_step(self.eps_class, a) {
                return Err(Violation::new("left/right commute", format!("a={a} on ε")));
            }
        }
        Ok(())
    }
}

/// The kernel of `δ♯` quantified over every state of `d`: classes are the
/// distinct maps `x ↦ δ(x)(u)`, found by closing the letter actions under
/// composition.
pub(crate) fn transition_congruence(d: &Dfa) -> CongruenceRep {
    let k = d.alphabet().len();
    let identity: Vec<State> = (0..d.state_count()).collect();
    let orb = orbit(k, vec![(identity, Word::empty())], |f: &Vec<State>, a| {
        f.iter().map(|&x| d.step(x, a)).collect()
    });
    let letters: Vec<Vec<State>> = (0..k).map(|a| d.action(&Word::letter(a))).collect();
    let left = orb
        .items
        .iter()
        .flat_map(|f| letters.iter().map(move |g| compose(f, g)))
        .map(|h| orb.get(&h).expect("the transition monoid is closed under composition"))
        .collect();
    CongruenceRep {
        alphabet: d.alphabet().clone(),
        class_count: orb.len(),
        eps_class: 0,
        right: orb.step,
        left,
        reps: orb.reps,
        accepted: None,
    }
}

/// The transition monoid `T(x̄, δ) = ker δ♯` of the reachable part of `p`.
pub fn transition_monoid(p: &PointedDfa) -> CongruenceRep {
    transition_congruence(reachable_part(p).0.dfa())
}

/// The right-Cayley machine `M(C)`: states are classes, `[w] -a-> [wa]`,
/// initial state `[ε]`.
pub fn machine(c: &CongruenceRep) -> PointedDfa {
    let dfa = Dfa::new(c.alphabet.clone(), c.class_count, c.right.clone()).expect("valid class table");
    PointedDfa::new(dfa, c.eps_class).expect("ε class in range")
}

/// Whether `c ⊆ d`, i.e. `[w]_c ↦ [w]_d` is well defined. Decided by a
/// breadth-first search over pairs of classes reachable from `([ε], [ε])`.
pub fn congruence_leq(c: &CongruenceRep, d: &CongruenceRep) -> Result<bool> {
    c.alphabet.check_same(&d.alphabet)?;
    let k = c.alphabet.len();
    let mut image: Vec<Option<usize>> = vec![None; c.class_count];
    image[c.eps_class] = Some(d.eps_class);
    let mut queue = VecDeque::from([c.eps_class]);
    while let Some(q) = queue.pop_front() {
        let qd = image[q].expect("queued classes have an image");
        for a in 0..k {
            let (t, td) = (c.right_step(q, a), d.right_step(qd, a));
            match image[t] {
                None => {
                    image[t] = Some(td);
                    queue.push_back(t);
                }
                Some(existing) if existing != td => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

/// Equality of congruences as relations (mutual inclusion).
pub fn congruence_eq(c: &CongruenceRep, d: &CongruenceRep) -> Result<bool> {
    Ok(congruence_leq(c, d)? && congruence_leq(d, c)?)
}

/// An unverified right-Cayley machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCongruence {
    pub alphabet: Alphabet,
    pub class_count: usize,
    pub eps_class: usize,
    /// `right_step[q * |Σ| + a]`
    pub right_step: Vec<usize>,
    pub accepted: Option<Vec<bool>>,
}

/// Checks that a right-Cayley machine presents a two-sided congruence and
/// completes it with its left action and shortlex representatives. Classes are
/// renumbered into canonical (shortlex representative) order.
///
/// The left action is propagated along the machine from `[a] = a·[ε]`; a
/// conflict means some `w ≡ w'` has `aw ≢ aw'`, and the error carries both
/// words and the letter.
pub fn verify_congruence(raw: &RawCongruence) -> Result<CongruenceRep> {
    let k = raw.alphabet.len();
    let n = raw.class_count;
    if n == 0 || raw.eps_class >= n {
        return Err(Error::Invalid("class count or ε class out of range".into()));
    }
    if raw.right_step.len() != n * k || raw.right_step.iter().any(|&t| t >= n) {
        return Err(Error::Invalid("right-step table is not total".into()));
    }
    if let Some(acc) = &raw.accepted {
        if acc.len() != n {
            return Err(Error::Invalid("accepted-class vector has the wrong length".into()));
        }
    }
    let step = |q: usize, a: usize| raw.right_step[q * k + a];

    // canonical order and shortlex representatives
    let mut order = vec![raw.eps_class];
    let mut reps_old: Vec<Option<Word>> = vec![None; n];
    reps_old[raw.eps_class] = Some(Word::empty());
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        for a in 0..k {
            let t = step(q, a);
            if reps_old[t].is_none() {
                reps_old[t] = Some(reps_old[q].as_ref().expect("visited").append(a));
                order.push(t);
            }
        }
        i += 1;
    }
    if order.len() != n {
        return Err(Error::Invalid(format!(
            "{} classes are not reachable from the ε class",
            n - order.len()
        )));
    }
    let reps_old: Vec<Word> = reps_old.into_iter().map(|w| w.expect("all reachable")).collect();

    // left action: left[a][q] = [a·rep(q)] along the representative tree, then
    // every machine edge must agree
    let mut left_old = vec![vec![usize::MAX; n]; k];
    for a in 0..k {
        for &q in &order {
            left_old[a][q] = raw
                .right_step_word(step(raw.eps_class, a), &reps_old[q], k);
        }
        for q in 0..n {
            for b in 0..k {
                let via_edge = step(left_old[a][q], b);
                let target = left_old[a][step(q, b)];
                if via_edge != target {
                    return Err(Error::NotCongruence {
                        first: reps_old[q].append(b).into_inner(),
                        second: reps_old[step(q, b)].clone().into_inner(),
                        letter: a,
                    });
                }
            }
        }
    }

    let mut new_of = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        new_of[old] = new;
    }
    let right = order
        .iter()
        .flat_map(|&old| (0..k).map(move |a| (old, a)))
        .map(|(old, a)| new_of[step(old, a)])
        .collect();
    let left = order
        .iter()
        .flat_map(|&old| (0..k).map(move |a| (old, a)))
        .map(|(old, a)| new_of[left_old[a][old]])
        .collect();
    Ok(CongruenceRep {
        alphabet: raw.alphabet.clone(),
        class_count: n,
        eps_class: 0,
        right,
        left,
        reps: order.iter().map(|&old| reps_old[old].clone()).collect(),
        accepted: raw
            .accepted
            .as_ref()
            .map(|acc| order.iter().map(|&old| acc[old]).collect()),
    })
}

impl RawCongruence {
    fn right_step_word(&self, start: usize, w: &Word, k: usize) -> usize {
        w.letters()
            .iter()
            .fold(start, |q, &a| self.right_step[q * k + a])
    }

    /// The right-Cayley machine of an existing congruence.
    pub fn from_rep(c: &CongruenceRep) -> Self {
        RawCongruence {
            alphabet: c.alphabet.clone(),
            class_count: c.class_count,
            eps_class: c.eps_class,
            right_step: c.right.clone(),
            accepted: c.accepted.clone(),
        }
    }
}

/// The counit `ε: M(T(p)) → p`, `[u] ↦ δ(x̄)(u)`, checked to be a morphism.
pub fn counit(p: &PointedDfa) -> Result<Vec<State>> {
    let c = transition_monoid(p);
    let map: Vec<State> = c
        .reps
        .iter()
        .map(|u| p.dfa().run_word(p.initial(), u))
        .collect();
    if !is_morphism(&machine(&c), p, &map) {
        return Err(Violation::new("counit is a morphism", format!("{map:?}")).into());
    }
    Ok(map)
}

/// `T̄`: the transition monoid with accepted classes
/// `{[u] | δ(x̄)(u) ∈ c}`.
pub fn t_with_acceptance(a: &AcceptingDfa) -> Result<CongruenceRep> {
    let p = a.pointed()?;
    let c = transition_monoid(&p);
    let accepted = c
        .reps
        .iter()
        .map(|u| a.is_accepting(p.dfa().run_word(p.initial(), u)))
        .collect();
    c.with_accepted(Some(accepted))
}

/// `M̄`: the machine accepting the accepted classes.
pub fn m_with_acceptance(c: &CongruenceRep) -> Result<AcceptingDfa> {
    let accepted = c
        .accepted
        .clone()
        .ok_or(Error::MissingAccepting("m_with_acceptance"))?;
    machine(c).with_accepting(accepted)
}
