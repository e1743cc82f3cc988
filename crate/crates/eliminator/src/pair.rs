use std::fmt;

use group_model::GroupDescriptor;
use serde::{Deserialize, Serialize};

use crate::class::SCOPE_T;
use crate::data::GroupData;
use crate::error::{EliminatorError, Result};

/// A target group `L` and a cross-characteristic candidate composition factor `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CandidatePair {
    #[serde(rename = "L")]
    pub target: GroupDescriptor,
    #[serde(rename = "S")]
    pub candidate: GroupDescriptor,
}

impl CandidatePair {
    pub fn new(target: GroupDescriptor, candidate: GroupDescriptor) -> Result<CandidatePair> {
        if target.p() == candidate.p() {
            return Err(EliminatorError::Domain(format!(
                "{} and {} share the characteristic {}",
                target.short_name(),
                candidate.short_name(),
                target.p()
            )));
        }
        Ok(CandidatePair { target, candidate })
    }

    /// Whether `t(L)` reaches the range the elimination steps are stated for.
    pub fn in_scope(&self) -> Result<bool> {
        Ok(GroupData::of(&self.target)?.t() >= SCOPE_T)
    }
}

impl fmt::Display for CandidatePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} / {}",
            self.target.short_name(),
            self.candidate.short_name()
        )
    }
}
