//! Arithmetic elimination of cross-characteristic composition factors.
//!
//! For a target `L` and a candidate `S` with `t(S) = t(L)`, [`eliminate`] searches for a
//! contradiction among coclique numbers, ζ values, torus congruences and partner primes.

mod arith;
mod class;
mod csp;
mod data;
mod error;
mod ktable;
mod pair;
mod pipeline;
mod report;
mod scan;

pub use arith::{
    congruence_obstruction, exceeds_two_thirds, is_partner, partners, rsnotprs_witnesses,
};
pub use class::{class_from_values, class_label, classify, ClassLabel, SCOPE_T};
pub use csp::{Problem, Role, Solution, Var};
pub use data::GroupData;
pub use error::{EliminatorError, Result};
pub use ktable::k_candidates;
pub use pair::CandidatePair;
pub use pipeline::{eliminate, two_thirds_gap_holds};
pub use report::{ContradictionReport, Fact, NarrativeEntry, Outcome, Pattern, Rule, Stalled};
pub use scan::{candidates, scan, ScanOptions};
