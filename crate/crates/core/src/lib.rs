//! Desk-scale automata algebra.
//!
//! The crate computes transition monoids and right-Cayley machines of
//! deterministic automata, the comonad/monad pair obtained from them
//! (`nuc` and `mupl`), free and cofree constructions, and the two-sorted
//! analogues for lasso automata together with admissible sets and transition
//! Wilke algebras for Ω-automata. Every construction comes with executable law
//! checks (see [`laws`]) and independent brute-force oracles (see [`oracle`]).
//!
//! States are dense `usize` indices; names only exist in the [`format`] layer.
//! Canonical orderings are shortlex in alphabet order throughout, so every
//! output is deterministic.

pub mod dfa;
pub mod dot;
pub mod equations;
pub mod error;
pub mod format;
pub mod lasso;
pub mod laws;
pub mod monoid;
pub mod omega;
pub mod oracle;
pub mod partition;
pub mod random;
pub mod samples;
pub mod word;

mod closure;

pub use dfa::{AcceptingDfa, Dfa, PointedDfa};
pub use error::{Error, Result, Violation};
pub use lasso::{Lasso, LassoAutomaton};
pub use monoid::CongruenceRep;
pub use partition::{Partition, UnionFind};
pub use word::{Alphabet, State, Symbol, Word};

/// Default bound on the number of congruence classes whose powerset is
/// materialized.
pub const DEFAULT_MAX_CLASSES: usize = 20;
