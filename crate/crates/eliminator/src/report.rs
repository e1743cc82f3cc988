use std::collections::BTreeMap;
use std::fmt;

use group_model::GroupDescriptor;
use serde::{Deserialize, Serialize};
use zsig_arith::{prime_index, SignedBase};

use crate::arith::{congruence_obstruction, exceeds_two_thirds, is_partner};
use crate::class::{class_label, ClassLabel};
use crate::csp::{Problem, Solution};
use crate::data::GroupData;
use crate::error::Result;
use crate::ktable::k_candidates;
use crate::pair::CandidatePair;

/// The elimination pattern that closes a pair. Serialized names follow the report schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// `L` has injective ζ.
    #[serde(rename = "LnotinX")]
    InjectiveTarget,
    /// `S` is linear or unitary while `L` is not.
    #[serde(rename = "SisnotX1")]
    LinearCandidate,
    /// `t(p, L) = 3`.
    #[serde(rename = "tpLneq3")]
    CharCliqueThree,
    /// `t(p, L) = 2`.
    #[serde(rename = "tplneq2")]
    CharCliqueTwo,
    /// `t(p, L) = 4`.
    #[serde(rename = "tplneq4")]
    CharCliqueFour,
    /// `S` misses a top value of T that `L` has.
    #[serde(rename = "class-mismatch")]
    ClassMismatch,
    /// `t(S) ≠ t(L)`.
    #[serde(rename = "t-mismatch")]
    TMismatch,
}

impl Pattern {
    pub const ALL: [Pattern; 7] = [
        Pattern::InjectiveTarget,
        Pattern::LinearCandidate,
        Pattern::CharCliqueThree,
        Pattern::CharCliqueTwo,
        Pattern::CharCliqueFour,
        Pattern::ClassMismatch,
        Pattern::TMismatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::InjectiveTarget => "LnotinX",
            Pattern::LinearCandidate => "SisnotX1",
            Pattern::CharCliqueThree => "tpLneq3",
            Pattern::CharCliqueTwo => "tplneq2",
            Pattern::CharCliqueFour => "tplneq4",
            Pattern::ClassMismatch => "class-mismatch",
            Pattern::TMismatch => "t-mismatch",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a narrative fact comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Exact coclique search in the index graph.
    CocliqueSearch,
    /// The congruence classes of ζ behaviour.
    ClassTable,
    /// Anchored coclique numbers above `n/3` agree in `L` and `S`.
    Transfer,
    /// Admissible `e(p, u)` for a given `t(p, L)`.
    CharacteristicTable,
    /// `p r s ∈ ω(S)` when the index of `p` divides that of `s` in the torus sense.
    TorusCongruence,
    /// Large partners with `r s ∈ ω(L)`, `p r s ∉ ω(L)`.
    PartnerPrimes,
    /// Exhaustive assignment search.
    Pigeonhole,
    /// Exact rational inequality.
    Arithmetic,
    /// Multiplicative order.
    PrimeIndex,
    /// Structural input taken as given.
    Granted,
}

/// A single checkable statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Fact {
    CocliqueNumber {
        group: GroupDescriptor,
        t: usize,
    },
    CharClique {
        group: GroupDescriptor,
        size: usize,
    },
    Class {
        group: GroupDescriptor,
        label: ClassLabel,
    },
    TValue {
        group: GroupDescriptor,
        value: usize,
        present: bool,
    },
    Zeta {
        group: GroupDescriptor,
        index: u64,
        value: usize,
    },
    Fibre {
        group: GroupDescriptor,
        value: usize,
        indices: Vec<u64>,
    },
    AboveTwoThirds {
        t: usize,
        offset: usize,
    },
    KCandidates {
        l: usize,
        group: GroupDescriptor,
        ks: Vec<u64>,
    },
    PrimeIndex {
        prime: u64,
        base: u64,
        index: u64,
    },
    Congruence {
        group: GroupDescriptor,
        j: u64,
        k: u64,
        holds: bool,
    },
    Partner {
        group: GroupDescriptor,
        small: u64,
        large: u64,
    },
    Unassignable {
        target: GroupDescriptor,
        candidate: GroupDescriptor,
        k: u64,
        small: Vec<u64>,
        large: Vec<u64>,
    },
    Granted {
        statement: String,
    },
}

impl Fact {
    /// Recomputes the statement from the owning module.
    pub fn verify(&self) -> Result<bool> {
        Ok(match self {
            Fact::CocliqueNumber { group, t } => GroupData::of(group)?.t() == *t,
            Fact::CharClique { group, size } => GroupData::of(group)?.char_clique == *size,
            Fact::Class { group, label } => class_label(group) == *label,
            Fact::TValue {
                group,
                value,
                present,
            } => GroupData::of(group)?.zeta.t_values.contains(value) == *present,
            Fact::Zeta {
                group,
                index,
                value,
            } => GroupData::of(group)?.zeta.zeta(*index) == Some(*value),
            Fact::Fibre {
                group,
                value,
                indices,
            } => {
                let got: Vec<u64> = GroupData::of(group)?.fibre(*value).into_iter().collect();
                got == *indices
            }
            Fact::AboveTwoThirds { t, offset } => exceeds_two_thirds(*t, *offset),
            Fact::KCandidates { l, group, ks } => {
                k_candidates(*l, group).into_iter().collect::<Vec<_>>() == *ks
            }
            Fact::PrimeIndex { prime, base, index } => {
                prime_index(*prime, SignedBase::plus(*base)?)? == *index
            }
            Fact::Congruence { group, j, k, holds } => {
                congruence_obstruction(*j, *k, group) == *holds
            }
            Fact::Partner {
                group,
                small,
                large,
            } => is_partner(&GroupData::of(group)?, *small, *large)?,
            Fact::Unassignable {
                target,
                candidate,
                k,
                small,
                large,
            } => {
                let l = GroupData::of(target)?;
                let s = GroupData::of(candidate)?;
                let linked = large
                    .iter()
                    .map(|&a| {
                        for &b in small {
                            if is_partner(&l, b, a)? {
                                return Ok(true);
                            }
                        }
                        Ok(false)
                    })
                    .collect::<Result<Vec<bool>>>()?;
                let small_ok = small
                    .iter()
                    .all(|b| l.zeta.m.contains(b) && l.zeta.n.contains(b));
                let problem = Problem::build(&l, &s, *k, small, large)?;
                small_ok
                    && linked.into_iter().all(|x| x)
                    && matches!(problem.solve(), Solution::Unsatisfiable { .. })
            }
            Fact::Granted { .. } => true,
        })
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::CocliqueNumber { group, t } => write!(f, "t({}) = {t}", group.short_name()),
            Fact::CharClique { group, size } => {
                write!(f, "t(p, {}) = {size}", group.short_name())
            }
            Fact::Class { group, label } => write!(f, "{} is in class {label}", group.short_name()),
            Fact::TValue {
                group,
                value,
                present,
            } => {
                let rel = if *present { "∈" } else { "∉" };
                write!(f, "{value} {rel} T({})", group.short_name())
            }
            Fact::Zeta {
                group,
                index,
                value,
            } => write!(f, "ζ({index}) = {value} in {}", group.short_name()),
            Fact::Fibre {
                group,
                value,
                indices,
            } => write!(
                f,
                "indices j ∈ N({}) with ζ(j) = {value}: {indices:?}",
                group.short_name()
            ),
            Fact::AboveTwoThirds { t, offset } => {
                write!(f, "{t} − {offset} > (2·{t} + 2)/3")
            }
            Fact::KCandidates { l, group, ks } => {
                write!(
                    f,
                    "e(p, u) ∈ {ks:?} for t(p, L) = {l} and S = {}",
                    group.short_name()
                )
            }
            Fact::PrimeIndex { prime, base, index } => write!(f, "e({prime}, {base}) = {index}"),
            Fact::Congruence { group, j, k, holds } => {
                let rel = if *holds { "forces" } else { "allows" };
                write!(
                    f,
                    "index {j} {rel} a torus with k = {k} in {}",
                    group.short_name()
                )
            }
            Fact::Partner {
                group,
                small,
                large,
            } => write!(
                f,
                "{large} is large, adjacent to {small}, and p·r_{large}·r_{small} ∉ ω({})",
                group.short_name()
            ),
            Fact::Unassignable {
                candidate,
                k,
                small,
                large,
                ..
            } => write!(
                f,
                "no assignment of {small:?} ∪ {large:?} into {} with k = {k}",
                candidate.short_name()
            ),
            Fact::Granted { statement } => f.write_str(statement),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NarrativeEntry {
    pub fact: Fact,
    #[serde(rename = "source-lemma")]
    pub source: Rule,
}

/// A completed elimination of a candidate pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContradictionReport {
    pub pair: CandidatePair,
    pub pattern: Pattern,
    pub witnesses: BTreeMap<String, u64>,
    pub narrative: Vec<NarrativeEntry>,
    pub verified: bool,
    pub in_scope: bool,
}

impl ContradictionReport {
    /// Re-checks every fact of the narrative.
    pub fn reverify(&self) -> Result<bool> {
        for entry in &self.narrative {
            if !entry.fact.verify()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The first fact that fails to re-verify, if any.
    pub fn first_failure(&self) -> Result<Option<&Fact>> {
        for entry in &self.narrative {
            if !entry.fact.verify()? {
                return Ok(Some(&entry.fact));
            }
        }
        Ok(None)
    }
}

/// A pair the pipeline could not close.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stalled {
    pub pair: CandidatePair,
    pub pattern: Pattern,
    pub open_k: Vec<u64>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Outcome {
    Eliminated(ContradictionReport),
    NotEliminated(Stalled),
}

impl Outcome {
    pub fn pair(&self) -> &CandidatePair {
        match self {
            Outcome::Eliminated(r) => &r.pair,
            Outcome::NotEliminated(s) => &s.pair,
        }
    }

    pub fn report(&self) -> Option<&ContradictionReport> {
        match self {
            Outcome::Eliminated(r) => Some(r),
            Outcome::NotEliminated(_) => None,
        }
    }

    pub fn pattern(&self) -> Pattern {
        match self {
            Outcome::Eliminated(r) => r.pattern,
            Outcome::NotEliminated(s) => s.pattern,
        }
    }
}
