//! The transition Wilke algebra of a reachable lasso automaton.

use std::collections::HashMap;

use super::saturation_partition;
use crate::closure::{compose, orbit};
use crate::error::{ensure, Error, Result, Violation};
use crate::lasso::{behaviour_congruence, lasso_reachable_part, reachable_meet, Lasso, LassoAutomaton, Verdict};
use crate::partition::Partition;
use crate::word::{Alphabet, State, Symbol, Word};

/// `(f: X₁ → X₁, g: X₁ → X₂, h: X₂ → X₂)`: the action of a nonempty word on
/// spokes, on entering the loop sort, and inside the loop sort.
type Triple = (Vec<State>, Vec<State>, Vec<State>);

fn triple_product(s: &Triple, t: &Triple) -> Triple {
    (compose(&t.0, &s.0), compose(&t.2, &s.1), compose(&t.2, &s.2))
}

/// A congruence on `(Σ⁺, Σ^up)`: plus classes are the distinct triples of
/// nonempty words, up classes the lasso behaviours `x ↦ δ(x, (u, v))` up to
/// the admissibility partition `E`, pointwise.
#[derive(Debug, Clone)]
pub struct WilkeCongruenceRep {
    alphabet: Alphabet,
    triples: Vec<Triple>,
    plus_reps: Vec<Word>,
    /// `plus_step[s * |Σ| + a] = [rep_s · a]`
    plus_step: Vec<usize>,
    letter: Vec<usize>,
    /// `mult[s * plus + t]`, from triple composition
    mult: Vec<usize>,
    up_reps: Vec<Lasso>,
    omega: Vec<usize>,
    /// `mixed[s * up + e]`
    mixed: Vec<usize>,
    automaton: LassoAutomaton,
    admissibility: Partition,
    up_index: HashMap<Vec<usize>, usize>,
}

impl WilkeCongruenceRep {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn plus_count(&self) -> usize {
        self.plus_reps.len()
    }

    pub fn up_count(&self) -> usize {
        self.up_reps.len()
    }

    pub fn plus_representative(&self, s: usize) -> &Word {
        &self.plus_reps[s]
    }

    pub fn plus_representatives(&self) -> &[Word] {
        &self.plus_reps
    }

    pub fn up_representative(&self, e: usize) -> &Lasso {
        &self.up_reps[e]
    }

    pub fn up_representatives(&self) -> &[Lasso] {
        &self.up_reps
    }

    /// The plus class of a letter.
    pub fn letter_class(&self, a: Symbol) -> usize {
        self.letter[a]
    }

    pub fn plus_step(&self, s: usize, a: Symbol) -> usize {
        self.plus_step[s * self.alphabet.len() + a]
    }

    pub fn multiply(&self, s: usize, t: usize) -> usize {
        self.mult[s * self.plus_count() + t]
    }

    /// `s ↦ [s^ω]`.
    pub fn omega(&self, s: usize) -> usize {
        self.omega[s]
    }

    /// `(s, e) ↦ [s · e]`.
    pub fn mixed(&self, s: usize, e: usize) -> usize {
        self.mixed[s * self.up_count() + e]
    }

    /// The admissibility partition the up classes are taken modulo.
    pub fn admissibility(&self) -> &Partition {
        &self.admissibility
    }

    /// `[w]` for a nonempty word.
    pub fn plus_class_of(&self, w: &Word) -> Option<usize> {
        let (&a, rest) = w.letters().split_first()?;
        Some(rest.iter().fold(self.letter[a], |s, &b| self.plus_step(s, b)))
    }

    fn up_key(&self, l: &Lasso) -> Vec<usize> {
        let la = &self.automaton;
        (0..la.spoke_count())
            .map(|x| self.admissibility.class_of(la.run_lasso(x, l)))
            .collect()
    }

    /// `[u v^ω]`.
    pub fn up_class_of(&self, l: &Lasso) -> usize {
        self.up_index[&self.up_key(l)]
    }

    fn power(&self, s: usize, n: usize) -> usize {
        (1..n).fold(s, |p, _| self.multiply(p, s))
    }

    /// The Wilke laws on the finite tables: associativity, the product agrees
    /// with concatenation of representatives, the ω-power and mixed product
    /// are well defined, and pumping and rotation hold.
    pub fn check_laws(&self) -> Result<(), Violation> {
        let (n, m, k) = (self.plus_count(), self.up_count(), self.alphabet.len());
        let ab = &self.alphabet;
        for s in 0..n {
            for t in 0..n {
                let st = self.multiply(s, t);
                let by_reps = self.plus_class_of(&self.plus_reps[s].concat(&self.plus_reps[t]));
                ensure(by_reps == Some(st), "product is well defined", || {
                    format!("{} · {}", ab.render(&self.plus_reps[s]), ab.render(&self.plus_reps[t]))
                })?;
                for r in 0..n {
                    ensure(
                        self.multiply(st, r) == self.multiply(s, self.multiply(t, r)),
                        "product is associative",
                        || format!("classes {s}, {t}, {r}"),
                    )?;
                }
                // rotation: s (t s)^ω = (s t)^ω
                let ts = self.multiply(t, s);
                ensure(self.mixed(s, self.omega(ts)) == self.omega(st), "rotation", || {
                    format!("s = {}, t = {}", ab.render(&self.plus_reps[s]), ab.render(&self.plus_reps[t]))
                })?;
                for e in 0..m {
                    ensure(
                        self.mixed(st, e) == self.mixed(s, self.mixed(t, e)),
                        "mixed product is associative",
                        || format!("classes {s}, {t}, up class {e}"),
                    )?;
                }
            }
            for a in 0..k {
                ensure(self.plus_step(s, a) == self.multiply(s, self.letter[a]), "letter step is the product", || {
                    format!("class {s}, letter {a}")
                })?;
            }
            let v = &self.plus_reps[s];
            let from_rep = self.up_class_of(&Lasso::new(Word::empty(), v.clone()).expect("nonempty"));
            ensure(from_rep == self.omega(s), "ω-power is well defined", || ab.render(v))?;
            for j in 1..=n {
                ensure(self.omega(self.power(s, j)) == self.omega(s), "pumping", || {
                    format!("({})^{j}", ab.render(v))
                })?;
            }
            for e in 0..m {
                let l = &self.up_reps[e];
                let sl = Lasso::new(v.concat(l.spoke()), l.cycle().clone()).expect("nonempty");
                ensure(self.up_class_of(&sl) == self.mixed(s, e), "mixed product is well defined", || {
                    format!("{} · {}", ab.render(v), l.render(ab))
                })?;
            }
        }
        // every lasso behaviour in an up class multiplies into the same class
        let lassos = behaviour_congruence(&self.automaton);
        for l in lassos.representatives() {
            let e = self.up_class_of(l);
            for s in 0..n {
                let sl = Lasso::new(self.plus_reps[s].concat(l.spoke()), l.cycle().clone()).expect("nonempty");
                ensure(self.up_class_of(&sl) == self.mixed(s, e), "mixed product respects up classes", || {
                    format!("{} · {}", ab.render(&self.plus_reps[s]), l.render(ab))
                })?;
            }
        }
        Ok(())
    }
}

/// The transition Wilke congruence of the reachable part of `la` (of all of
/// `la` when it has no initial state), with every law verified.
pub fn wilke_transition(la: &LassoAutomaton) -> Result<WilkeCongruenceRep> {
    let la = match la.initial() {
        Some(_) => lasso_reachable_part(la)?.0,
        None => la.clone(),
    };
    let k = la.alphabet().len();
    let (n1, n2) = (la.spoke_count(), la.loop_count());
    let letter_triple = |a: Symbol| -> Triple {
        (
            (0..n1).map(|x| la.step1(x, a)).collect(),
            (0..n1).map(|x| la.step2(x, a)).collect(),
            (0..n2).map(|y| la.step3(y, a)).collect(),
        )
    };
    let letters: Vec<Triple> = (0..k).map(letter_triple).collect();
    let seeds = letters.iter().cloned().zip((0..k).map(Word::letter)).collect();
    let plus = orbit(k, seeds, |t: &Triple, a| triple_product(t, &letters[a]));
    let letter: Vec<usize> = letters.iter().map(|t| plus.get(t).expect("seeded")).collect();
    let n = plus.len();
    let mult = (0..n * n)
        .map(|i| {
            let p = triple_product(&plus.items[i / n], &plus.items[i % n]);
            plus.get(&p).ok_or_else(|| Violation::new("plus classes are closed under product", format!("classes {}, {}", i / n, i % n)))
        })
        .collect::<Result<Vec<usize>, Violation>>()?;

    let admissibility = saturation_partition(&la).partition;
    let key = |l: &Lasso| -> Vec<usize> { (0..n1).map(|x| admissibility.class_of(la.run_lasso(x, l))).collect() };
    // behaviour classes come sorted by least lasso, so first sight is least
    let mut up_index = HashMap::new();
    let mut up_reps = Vec::new();
    for l in behaviour_congruence(&la).representatives() {
        up_index.entry(key(l)).or_insert_with(|| {
            up_reps.push(l.clone());
            up_reps.len() - 1
        });
    }
    let up_of = |l: &Lasso| -> Result<usize> {
        up_index
            .get(&key(l))
            .copied()
            .ok_or_else(|| Error::Invalid(format!("lasso {l:?} has no up class")))
    };
    let omega = plus
        .reps
        .iter()
        .map(|v| up_of(&Lasso::new(Word::empty(), v.clone())?))
        .collect::<Result<Vec<_>>>()?;
    let mixed = plus
        .reps
        .iter()
        .flat_map(|v| up_reps.iter().map(move |l| (v, l)))
        .map(|(v, l)| up_of(&Lasso::new(v.concat(l.spoke()), l.cycle().clone())?))
        .collect::<Result<Vec<_>>>()?;
    let rep = WilkeCongruenceRep {
        alphabet: la.alphabet().clone(),
        triples: plus.items,
        plus_reps: plus.reps,
        plus_step: plus.step,
        letter,
        mult,
        up_reps,
        omega,
        mixed,
        automaton: la,
        admissibility,
        up_index,
    };
    rep.check_laws()?;
    Ok(rep)
}

/// Whether `fine` refines `coarse`: the class map sending each representative
/// of `fine` to its class in `coarse` is well defined on both sorts.
pub fn wilke_refines(fine: &WilkeCongruenceRep, coarse: &WilkeCongruenceRep) -> Result<bool> {
    fine.alphabet.check_same(&coarse.alphabet)?;
    let k = fine.alphabet.len();
    let plus: Vec<usize> = fine
        .plus_reps
        .iter()
        .map(|w| coarse.plus_class_of(w).expect("nonempty"))
        .collect();
    let plus_ok = (0..fine.plus_count())
        .all(|s| (0..k).all(|a| plus[fine.plus_step(s, a)] == coarse.plus_step(plus[s], a)));
    let up: Vec<usize> = fine.up_reps.iter().map(|l| coarse.up_class_of(l)).collect();
    let up_ok = behaviour_congruence(&fine.automaton)
        .representatives()
        .iter()
        .all(|l| up[fine.up_class_of(l)] == coarse.up_class_of(l));
    Ok(plus_ok && up_ok)
}

/// Whether the Wilke congruence of the reachable meet equals the
/// intersection of the individual Wilke congruences.
///
/// Every word and lasso has its class in the meet determined by its classes
/// in the parts, since each part is the projection of the meet; so equality
/// amounts to the tuple of part classes separating the meet's classes.
pub fn meet_preservation_check(alphabet: &Alphabet, las: &[LassoAutomaton]) -> Result<Verdict> {
    let meet = wilke_transition(&reachable_meet(alphabet, las)?)?;
    let parts = las.iter().map(wilke_transition).collect::<Result<Vec<_>>>()?;
    let mut plus_seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for (s, w) in meet.plus_reps.iter().enumerate() {
        let tuple: Vec<usize> = parts.iter().map(|p| p.plus_class_of(w).expect("nonempty")).collect();
        if let Some(&t) = plus_seen.get(&tuple) {
            return Ok(Verdict::Fails(format!(
                "words {} and {} agree in every part but not in the meet",
                alphabet.render(&meet.plus_reps[t]),
                alphabet.render(&meet.plus_reps[s])
            )));
        }
        plus_seen.insert(tuple, s);
    }
    let mut up_seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for (e, l) in meet.up_reps.iter().enumerate() {
        let tuple: Vec<usize> = parts.iter().map(|p| p.up_class_of(l)).collect();
        if let Some(&f) = up_seen.get(&tuple) {
            return Ok(Verdict::Fails(format!(
                "lassos {} and {} agree in every part but not in the meet",
                meet.up_reps[f].render(alphabet),
                l.render(alphabet)
            )));
        }
        up_seen.insert(tuple, e);
    }
    // the meet refines each part
    for p in &parts {
        if !wilke_refines(&meet, p)? {
            return Ok(Verdict::Fails("the meet does not refine a part".into()));
        }
    }
    Ok(Verdict::Holds)
}

impl PartialEq for WilkeCongruenceRep {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.plus_reps == other.plus_reps
            && self.plus_step == other.plus_step
            && self.up_reps == other.up_reps
            && self.omega == other.omega
            && self.mixed == other.mixed
    }
}

impl WilkeCongruenceRep {
    /// The triple `(f, g, h)` of a plus class.
    pub fn triple(&self, s: usize) -> (&[State], &[State], &[State]) {
        let t = &self.triples[s];
        (&t.0, &t.1, &t.2)
    }
}
