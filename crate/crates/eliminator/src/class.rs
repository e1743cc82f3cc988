use std::fmt;

use group_model::{Family, GroupDescriptor, Sign};
use serde::{Deserialize, Serialize};

use crate::data::GroupData;
use crate::error::{EliminatorError, Result};

/// Smallest coclique number handled by the elimination steps.
pub const SCOPE_T: usize = 23;

/// Behaviour class of ζ: injective (`X1`, `X2`) or missing `t − i` from T (`Yi`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    X1,
    X2,
    Y1,
    Y2,
    Y3,
}

impl ClassLabel {
    pub fn is_injective(self) -> bool {
        matches!(self, ClassLabel::X1 | ClassLabel::X2)
    }

    /// The offset `i` with `t − i ∉ T` for `Yi`.
    pub fn missing_offset(self) -> Option<usize> {
        match self {
            ClassLabel::Y1 => Some(1),
            ClassLabel::Y2 => Some(2),
            ClassLabel::Y3 => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The class given by the family and `n` modulo 4, without a scope check.
pub fn class_label(group: &GroupDescriptor) -> ClassLabel {
    let r = group.n() % 4;
    match (group.family(), group.sign()) {
        (Family::LinearUnitary, _) => ClassLabel::X1,
        (Family::EvenOrthogonal, _) if r % 2 == 1 => ClassLabel::X2,
        (Family::Symplectic | Family::OddOrthogonal, _) => match r {
            0 | 3 => ClassLabel::Y1,
            2 => ClassLabel::Y2,
            _ => ClassLabel::Y3,
        },
        (Family::EvenOrthogonal, Sign::Plus) => {
            if r == 0 {
                ClassLabel::Y2
            } else {
                ClassLabel::Y3
            }
        }
        (Family::EvenOrthogonal, Sign::Minus) => {
            if r == 2 {
                ClassLabel::Y1
            } else {
                ClassLabel::Y3
            }
        }
    }
}

/// The class of a group with `t(L) ≥ 23`.
pub fn classify(group: &GroupDescriptor) -> Result<ClassLabel> {
    let t = GroupData::of(group)?.t();
    if t < SCOPE_T {
        return Err(EliminatorError::Range(format!(
            "{} has t = {t} < {SCOPE_T}",
            group.short_name()
        )));
    }
    Ok(class_label(group))
}

/// The class read off the top of T: `Yi` iff `t − i ∉ T`.
pub fn class_from_values(data: &GroupData) -> Option<ClassLabel> {
    let offsets = data.zeta.offsets(3);
    let missing: Vec<usize> = (1..=3).filter(|i| !offsets.contains(i)).collect();
    match missing.as_slice() {
        [] => Some(if data.group().family() == Family::LinearUnitary {
            ClassLabel::X1
        } else {
            ClassLabel::X2
        }),
        [1] => Some(ClassLabel::Y1),
        [2] => Some(ClassLabel::Y2),
        [3] => Some(ClassLabel::Y3),
        _ => None,
    }
}
