//! Solution sets, closures, quasi-identities and the equivalence deciders.
//!
//! All semantics are exhaustive over the (finite) affine space
//! `Hom((XKF(Y), F(Y)), (V, G))`, enumerated in the canonical order of
//! [`Assignment::from_index`](crate::term::Assignment::from_index).

mod decide;
mod search;
mod separation;
mod solve;

use serde::Serialize;

pub use decide::{
    at_equivalent, geo_equivalent_groups, geo_equivalent_reps, AtCertificate, GeoCertificate, GeoRefutation,
    GroupGeoCertificate,
};
pub use search::{find_at_witness, find_separating_qid, AtWitness, QidSeparation, Side};
pub use separation::{
    separate_group_points, separate_rep_points, verify_group_certificate, verify_rep_certificate, Inseparable,
    Separation, SeparationCertificate,
};
pub use solve::{closure_counterexample, fulfills_qid, in_at_closure, in_closure, solution_set, QidCheck, SolutionSet};

/// Bounds for the refutation searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub max_xvars: usize,
    pub max_yvars: usize,
    /// Equations per action-type system.
    pub max_system: usize,
    /// Terms per module element.
    pub max_terms: usize,
    pub max_word_len: u64,
    pub max_premises: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self { max_xvars: 1, max_yvars: 1, max_system: 1, max_terms: 2, max_word_len: 2, max_premises: 2 }
    }
}

/// Outcome of an equivalence decider.
#[derive(Debug, Clone)]
pub enum Verdict<C, W> {
    Equivalent(C),
    NotEquivalent(W),
    Unknown(SearchBounds),
}

impl<C, W> Verdict<C, W> {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent(_))
    }

    pub fn is_not_equivalent(&self) -> bool {
        matches!(self, Verdict::NotEquivalent(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Equivalent(_) => "equivalent",
            Verdict::NotEquivalent(_) => "not-equivalent",
            Verdict::Unknown(_) => "unknown",
        }
    }
}
