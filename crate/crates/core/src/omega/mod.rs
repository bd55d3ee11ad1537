//! Ω-automata: γ-equivalence of lassos, admissible accepting sets, and the
//! transition Wilke algebra of a reachable lasso automaton.

mod wilke;

pub use wilke::{meet_preservation_check, wilke_refines, wilke_transition, WilkeCongruenceRep};
pub use crate::lasso::reachable_meet;

use crate::closure::orbit;
use crate::error::{Error, Result};
use crate::lasso::{Lasso, LassoAutomaton, LassoMorphism};
use crate::partition::{Partition, UnionFind};
use crate::word::{State, Symbol, Word};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The `i`-th letter of `u v^ω`.
pub(crate) fn letter_at(l: &Lasso, i: usize) -> Symbol {
    let (u, v) = (l.spoke().letters(), l.cycle().letters());
    if i < u.len() {
        u[i]
    } else {
        v[(i - u.len()) % v.len()]
    }
}

/// `u v^ω = u' v'^ω`, decided on the first `max(|u|, |u'|) + lcm(|v|, |v'|)`
/// letters: past that prefix both words repeat with a common period.
pub fn gamma_equivalent(l1: &Lasso, l2: &Lasso) -> bool {
    let (p, q) = (l1.cycle().len(), l2.cycle().len());
    let bound = l1.spoke().len().max(l2.spoke().len()) + p / gcd(p, q) * q;
    (0..bound).all(|i| letter_at(l1, i) == letter_at(l2, i))
}

/// The rule of `∼γ` a constraint pair instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `(u, v) ∼ (uv, v)`
    Unfold,
    /// `(u, v) ∼ (u, v^k)`
    Pump,
    /// `(u, av) ∼ (ua, va)`
    Rotate,
}

/// Two `X₂` states forced into one admissibility class: `δ(state, lasso) =
/// left` and `δ(state, other) = right` for γ-equivalent `lasso`, `other`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintPair {
    pub left: State,
    pub right: State,
    pub rule: Rule,
    pub state: State,
    pub lasso: Lasso,
    pub other: Lasso,
}

/// The partition `E` of `X₂` whose unions are exactly the admissible sets,
/// with the constraint pairs that merged classes (a spanning forest of `E`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityPartition {
    pub partition: Partition,
    pub pairs: Vec<ConstraintPair>,
}

/// `(g_v, h_v)` as state maps.
pub(crate) type Behaviour = (Vec<State>, Vec<State>);

/// Loop behaviours `(g_v: X₁ → X₂, h_v: X₂ → X₂)` of every nonempty word,
/// with shortlex representatives.
pub(crate) fn loop_behaviours(la: &LassoAutomaton) -> (Vec<Behaviour>, Vec<Word>) {
    let k = la.alphabet().len();
    let seeds = (0..k)
        .map(|a| {
            let g = (0..la.spoke_count()).map(|x| la.step2(x, a)).collect();
            let h = (0..la.loop_count()).map(|y| la.step3(y, a)).collect();
            ((g, h), Word::letter(a))
        })
        .collect();
    let orb = orbit(k, seeds, |(g, h): &Behaviour, a| {
        (
            g.iter().map(|&y| la.step3(y, a)).collect(),
            h.iter().map(|&y| la.step3(y, a)).collect(),
        )
    });
    (orb.items, orb.reps)
}

/// Generates `E` from the three rules of `∼γ`, instantiated at every `X₁`
/// state and every loop behaviour. For a reachable pointed automaton the
/// quantification over all `X₁` states is the same as saturation from the
/// initial state.
///
/// Pumping uses every power `v^k` with `k ≤ |X₂| + 1`, which covers every
/// point of the orbit of `h_v`.
pub fn saturation_partition(la: &LassoAutomaton) -> AdmissibilityPartition {
    let k = la.alphabet().len();
    let (n1, n2) = (la.spoke_count(), la.loop_count());
    let (behaviours, reps) = loop_behaviours(la);
    let mut uf = UnionFind::new(n2);
    let mut pairs = Vec::new();
    let mut add = |pair: ConstraintPair, uf: &mut UnionFind| {
        if uf.union(pair.left, pair.right) {
            pairs.push(pair);
        }
    };
    let lasso = |u: Word, v: Word| Lasso::new(u, v).expect("nonempty loop");
    for ((g, h), v) in behaviours.iter().zip(&reps) {
        for y in 0..n1 {
            // unfold: (ε, v) ∼ (v, v)
            let fv = la.run_spoke(y, v);
            add(
                ConstraintPair {
                    left: g[y],
                    right: g[fv],
                    rule: Rule::Unfold,
                    state: y,
                    lasso: lasso(Word::empty(), v.clone()),
                    other: lasso(v.clone(), v.clone()),
                },
                &mut uf,
            );
            // pump: (ε, v) ∼ (ε, v^j) for j ≤ |X₂| + 1
            let mut z = g[y];
            for j in 2..=n2 + 1 {
                z = h[z];
                add(
                    ConstraintPair {
                        left: g[y],
                        right: z,
                        rule: Rule::Pump,
                        state: y,
                        lasso: lasso(Word::empty(), v.clone()),
                        other: lasso(Word::empty(), v.repeat(j)),
                    },
                    &mut uf,
                );
            }
            // rotate: (ε, a·v) ∼ (a, v·a)
            for a in 0..k {
                let left = h[la.step2(y, a)];
                let right = la.step3(g[la.step1(y, a)], a);
                add(
                    ConstraintPair {
                        left,
                        right,
                        rule: Rule::Rotate,
                        state: y,
                        lasso: lasso(Word::empty(), v.prepend(a)),
                        other: lasso(Word::letter(a), v.append(a)),
                    },
                    &mut uf,
                );
            }
        }
    }
    // rotate with empty remainder: (ε, a) ∼ (a, a)
    for y in 0..n1 {
        for a in 0..k {
            add(
                ConstraintPair {
                    left: la.step2(y, a),
                    right: la.step2(la.step1(y, a), a),
                    rule: Rule::Rotate,
                    state: y,
                    lasso: lasso(Word::empty(), Word::letter(a)),
                    other: lasso(Word::letter(a), Word::letter(a)),
                },
                &mut uf,
            );
        }
    }
    AdmissibilityPartition {
        partition: uf.into_partition(),
        pairs,
    }
}

/// Every admissible accepting set, as unions of `E`-classes in
/// binary-counter order over class ids.
pub fn admissible_sets(la: &LassoAutomaton, max_classes: usize) -> Result<Vec<Vec<State>>> {
    let e = saturation_partition(la).partition;
    let limit = max_classes.min(30);
    if e.class_count() > limit {
        return Err(Error::SizeGuard {
            what: "admissibility classes",
            needed: e.class_count(),
            limit,
        });
    }
    let classes = e.classes();
    Ok((0..1usize << e.class_count())
        .map(|m| {
            let mut set: Vec<State> = (0..classes.len())
                .filter(|&i| m >> i & 1 == 1)
                .flat_map(|i| classes[i].iter().copied())
                .collect();
            set.sort_unstable();
            set
        })
        .collect())
}

/// Whether `c ⊆ X₂` is admissible.
pub fn is_admissible(la: &LassoAutomaton, c: &[bool]) -> bool {
    saturation_partition(la).partition.saturates(c)
}

/// Whether the accepting set respects γ-equivalence; on failure returns a
/// γ-equivalent pair accepted on one side only.
pub fn is_saturated(la: &LassoAutomaton) -> Result<Option<ConstraintPair>> {
    let c = la
        .accepting()
        .ok_or(Error::MissingAccepting("is_saturated"))?
        .to_vec();
    let e = saturation_partition(la);
    if e.partition.saturates(&c) {
        return Ok(None);
    }
    // some forest edge inside a mixed class crosses the accepting boundary
    Ok(e.pairs.into_iter().find(|p| c[p.left] != c[p.right]))
}

/// `u v^ω ∼ u' v'^ω`: every admissible set treats the two lassos alike from
/// every `X₁` state.
pub fn up_equivalent(la: &LassoAutomaton, l1: &Lasso, l2: &Lasso) -> bool {
    let e = saturation_partition(la).partition;
    (0..la.spoke_count()).all(|x| e.same(la.run_lasso(x, l1), la.run_lasso(x, l2)))
}

/// Preimages of admissible sets under `h` are admissible: `h₂` maps each
/// `E`-class of `src` into a single `E`-class of `dst`.
pub fn pullback_preserves_admissible(src: &LassoAutomaton, dst: &LassoAutomaton, h: &LassoMorphism) -> bool {
    let es = saturation_partition(src).partition;
    let ed = saturation_partition(dst).partition;
    let mut image = vec![None; es.class_count()];
    (0..src.loop_count()).all(|y| *image[es.class_of(y)].get_or_insert(ed.class_of(h.cycle[y])) == ed.class_of(h.cycle[y]))
}
