use group_model::{Family, GroupDescriptor, Sign};
use prime_graph::TABLE_FLOOR;
use rayon::prelude::*;

use crate::data::GroupData;
use crate::error::Result;
use crate::pair::CandidatePair;
use crate::pipeline::eliminate;
use crate::report::Outcome;

/// Which candidates to enumerate for a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    /// Characteristics of the candidate fields.
    pub primes: Vec<u64>,
    /// Largest candidate field size; `None` means `q²`.
    pub max_u: Option<u64>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            primes: vec![2, 3, 5, 7],
            max_u: None,
        }
    }
}

fn rank_window(family: Family, t: u32) -> std::ops::RangeInclusive<u32> {
    let (lo, hi) = match family {
        Family::LinearUnitary => (2 * t - 3, 2 * t + 2),
        _ => ((4 * t / 3).saturating_sub(3), 4 * t / 3 + 3),
    };
    lo.max(TABLE_FLOOR)..=hi
}

/// Cross-characteristic classical candidates `S` with `t(S) = t(L)`, in descriptor order.
pub fn candidates(target: &GroupDescriptor, opts: &ScanOptions) -> Result<Vec<CandidatePair>> {
    let t = GroupData::of(target)?.t();
    let max_u = opts.max_u.unwrap_or(target.q() * target.q());
    let kinds = [
        (Family::LinearUnitary, Sign::Plus),
        (Family::LinearUnitary, Sign::Minus),
        (Family::Symplectic, Sign::Plus),
        (Family::OddOrthogonal, Sign::Plus),
        (Family::EvenOrthogonal, Sign::Plus),
        (Family::EvenOrthogonal, Sign::Minus),
    ];
    let mut out = Vec::new();
    for &v in &opts.primes {
        if v == target.p() {
            continue;
        }
        let mut u = v;
        while u <= max_u {
            for &(family, sign) in &kinds {
                for m in rank_window(family, t as u32) {
                    let Ok(s) = GroupDescriptor::new(family, sign, m, u) else {
                        continue;
                    };
                    if GroupData::of(&s)?.t() == t {
                        out.push(CandidatePair::new(*target, s)?);
                    }
                }
            }
            u *= v;
        }
    }
    out.sort();
    Ok(out)
}

/// Eliminates every candidate of `target` in parallel; results follow candidate order.
pub fn scan(target: &GroupDescriptor, opts: &ScanOptions) -> Result<Vec<Outcome>> {
    candidates(target, opts)?
        .par_iter()
        .map(eliminate)
        .collect()
}
