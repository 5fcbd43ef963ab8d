//! Exact computation of the sets of cross numbers of zero-sum free and minimal
//! zero-sum sequences over small finite abelian groups.
//!
//! * [`group`]: groups given by invariant factors, element arithmetic, subgroups.
//! * [`sequence`]: multiset sequences, cross numbers, subset sums, zero-sum predicates.
//! * [`search`]: the memoized exhaustive engine for `w(G)`, `W(G)`, `d(G)`, `η(G)`.
//! * [`constructions`]: explicit witness sequences with claimed classification.
//! * [`formulas`]: closed forms, predicted set shapes, and the verification harness.

pub mod arith;
pub mod group;

pub use group::{DirectSum, FiniteAbelianGroup, GroupElement, GroupError, GroupStats, Homomorphism};
pub mod sequence;

pub use sequence::{concat, CrossSet, CrossValue, Sequence, SequenceError, SumSet};
pub mod search;

pub use search::{
    enumerate, enumerate_subgroup_profiles, eta, membership, Budget, PartialResult, SearchError,
    SearchResult, SequenceKind, ENGINE_VERSION,
};
pub mod constructions;

pub use constructions::{C22Variant, ConstructionError, GapShape, Witness};
pub mod formulas;

pub use formulas::{big_k_star, k_star, verify, FormulaError, Prediction, Relation, Report, Target, Theorem};
