use std::collections::BTreeSet;

use group_model::{is_valid_index, Family, GroupDescriptor, Sign};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use zsig_arith::{eta, nu_eps, valuation};

use crate::error::{Result, SpectraError};

/// Cyclic torus factor: `(εq)^N − 1` or `q^N − 1` (`Minus`), `q^N + 1` (`Plus`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartKind {
    Minus,
    Plus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverPart {
    pub kind: PartKind,
    pub size: u64,
    pub members: BTreeSet<u64>,
}

impl CoverPart {
    /// The index whose primitive primes define this factor.
    pub fn representative(&self, group: &GroupDescriptor) -> u64 {
        match (group.family(), self.kind) {
            (Family::LinearUnitary, _) => nu_eps(self.size, group.sign()),
            (_, PartKind::Minus) => self.size,
            (_, PartKind::Plus) => 2 * self.size,
        }
    }
}

/// Whether the budget is for a semisimple element or for one multiplied by `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverMode {
    Semisimple,
    WithCharacteristic,
}

/// How far a cover is backed by the pairwise criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverGrade {
    Pairwise,
    Model,
}

/// Torus factors whose product carries `k_i(q)` for every requested index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexCover {
    pub group: GroupDescriptor,
    pub parts: Vec<CoverPart>,
    pub budget_used: u64,
    pub budget_limit: u64,
    pub mode: CoverMode,
    pub grade: CoverGrade,
}

/// Whether a part of the given kind and size carries `k_i(q)`.
pub fn part_covers(kind: PartKind, size: u64, i: u64, group: &GroupDescriptor) -> bool {
    match (group.family(), kind) {
        (Family::LinearUnitary, PartKind::Minus) => size % nu_eps(i, group.sign()) == 0,
        (Family::LinearUnitary, PartKind::Plus) => false,
        (_, PartKind::Minus) => size % i == 0,
        (_, PartKind::Plus) => i % 2 == 0 && size % eta(i) == 0 && (size / eta(i)) % 2 == 1,
    }
}

fn block_options(block: &[u64], group: &GroupDescriptor, limit: u64) -> Vec<CoverPart> {
    let members: BTreeSet<u64> = block.iter().copied().collect();
    let mut out = Vec::with_capacity(2);
    let lcm_of = |f: &dyn Fn(u64) -> u64| block.iter().fold(1u64, |acc, &i| acc.lcm(&f(i)));
    let minus = match group.family() {
        Family::LinearUnitary => lcm_of(&|i| nu_eps(i, group.sign())),
        _ => lcm_of(&|i| i),
    };
    if minus <= limit {
        out.push(CoverPart {
            kind: PartKind::Minus,
            size: minus,
            members: members.clone(),
        });
    }
    if group.family() != Family::LinearUnitary && block.iter().all(|i| i % 2 == 0) {
        let v = valuation(eta(block[0]), 2);
        if block.iter().all(|&i| valuation(eta(i), 2) == v) {
            let plus = lcm_of(&|i| eta(i));
            if plus <= limit {
                out.push(CoverPart {
                    kind: PartKind::Plus,
                    size: plus,
                    members,
                });
            }
        }
    }
    out
}

struct Search<'a> {
    group: &'a GroupDescriptor,
    limit: u64,
    sign_rule: bool,
    best: Option<(u64, Vec<CoverPart>)>,
}

impl Search<'_> {
    fn feasible(&self, parts: &[CoverPart]) -> Option<u64> {
        let total: u64 = parts.iter().map(|p| p.size).sum();
        if total > self.limit {
            return None;
        }
        if self.sign_rule && total == self.group.n() as u64 {
            let plus = parts.iter().filter(|p| p.kind == PartKind::Plus).count();
            let want_odd = self.group.sign() == Sign::Minus;
            if (plus % 2 == 1) != want_odd {
                return None;
            }
        }
        Some(total)
    }

    fn choose(&mut self, blocks: &[Vec<u64>], k: usize, chosen: &mut Vec<CoverPart>) {
        if k == blocks.len() {
            if let Some(total) = self.feasible(chosen) {
                let better = match &self.best {
                    None => true,
                    Some((b, parts)) => (total, chosen.len()) < (*b, parts.len()),
                };
                if better {
                    self.best = Some((total, chosen.clone()));
                }
            }
            return;
        }
        let used: u64 = chosen.iter().map(|p| p.size).sum();
        for part in block_options(&blocks[k], self.group, self.limit) {
            if used + part.size > self.limit {
                continue;
            }
            chosen.push(part);
            self.choose(blocks, k + 1, chosen);
            chosen.pop();
        }
    }

    fn partition(&mut self, items: &[u64], k: usize, blocks: &mut Vec<Vec<u64>>) {
        if k == items.len() {
            let mut chosen = Vec::new();
            self.choose(blocks, 0, &mut chosen);
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[k]);
            self.partition(items, k + 1, blocks);
            blocks[b].pop();
        }
        blocks.push(vec![items[k]]);
        self.partition(items, k + 1, blocks);
        blocks.pop();
    }
}

fn budget(group: &GroupDescriptor, mode: CoverMode) -> (u64, bool) {
    let n = group.n() as u64;
    match (mode, group.family()) {
        (CoverMode::Semisimple, f) => (n, f == Family::EvenOrthogonal),
        (CoverMode::WithCharacteristic, Family::Symplectic | Family::OddOrthogonal) => {
            (n.saturating_sub(1), false)
        }
        (CoverMode::WithCharacteristic, _) => (n.saturating_sub(2), false),
    }
}

/// Cheapest cover of an arbitrary set of valid indices (1 and 2 allowed).
pub fn find_cover(
    indices: &[u64],
    group: &GroupDescriptor,
    mode: CoverMode,
) -> Result<Option<IndexCover>> {
    let items: BTreeSet<u64> = indices.iter().copied().collect();
    for &i in &items {
        if !is_valid_index(i, group) {
            return Err(SpectraError::Domain(format!(
                "{i} is not a valid index of {}",
                group.short_name()
            )));
        }
    }
    let items: Vec<u64> = items.into_iter().collect();
    let (limit, sign_rule) = budget(group, mode);
    let mut search = Search {
        group,
        limit,
        sign_rule,
        best: None,
    };
    search.partition(&items, 0, &mut Vec::new());
    let pairwise =
        mode == CoverMode::Semisimple && items.len() <= 2 && items.iter().all(|&i| i > 2);
    Ok(search.best.map(|(budget_used, parts)| IndexCover {
        group: *group,
        parts,
        budget_used,
        budget_limit: limit,
        mode,
        grade: if pairwise {
            CoverGrade::Pairwise
        } else {
            CoverGrade::Model
        },
    }))
}

/// A cover witnessing `k_{i_1}(q)⋯k_{i_l}(q) ∈ ω(L)` for distinct indices above 2.
pub fn semisimple_member(indices: &[u64], group: &GroupDescriptor) -> Result<Option<IndexCover>> {
    let distinct: BTreeSet<u64> = indices.iter().copied().collect();
    if distinct.len() != indices.len() {
        return Err(SpectraError::Domain("indices must be distinct".into()));
    }
    if let Some(i) = indices.iter().find(|&&i| i <= 2) {
        return Err(SpectraError::Domain(format!("index {i} is not above 2")));
    }
    find_cover(indices, group, CoverMode::Semisimple)
}

/// A cover witnessing `p·k_{i_1}(q)⋯k_{i_l}(q) ∈ ω(L)`.
pub fn mixed_member(indices: &[u64], group: &GroupDescriptor) -> Result<Option<IndexCover>> {
    find_cover(indices, group, CoverMode::WithCharacteristic)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_merge() {
        let s = GroupDescriptor::symplectic(28, 3).unwrap();
        let c = semisimple_member(&[54, 18], &s).unwrap().unwrap();
        assert_eq!(c.parts.len(), 1);
        assert_eq!(c.parts[0].representative(&s), 54);
        assert_eq!(c.budget_used, 27);
        assert_eq!(c.grade, CoverGrade::Pairwise);
    }

    #[test]
    fn linear_absent() {
        let l = GroupDescriptor::linear(45, 3).unwrap();
        assert!(semisimple_member(&[45, 23], &l).unwrap().is_none());
        assert!(semisimple_member(&[45], &l).unwrap().is_some());
    }

    #[test]
    fn orthogonal_plus_half_and_full() {
        let o = GroupDescriptor::even_orthogonal(Sign::Plus, 18, 3).unwrap();
        let c = semisimple_member(&[9, 18], &o).unwrap().unwrap();
        assert_eq!(c.parts.len(), 1);
        assert_eq!(c.parts[0].kind, PartKind::Minus);
        assert_eq!(c.parts[0].size, 18);
        let m = GroupDescriptor::even_orthogonal(Sign::Minus, 18, 3).unwrap();
        assert!(semisimple_member(&[7, 11], &m).unwrap().is_none());
        assert!(semisimple_member(&[7, 11], &o).unwrap().is_some());
    }

    #[test]
    fn characteristic_budget() {
        let l = GroupDescriptor::linear(45, 3).unwrap();
        assert!(mixed_member(&[43], &l).unwrap().is_some());
        assert!(mixed_member(&[44], &l).unwrap().is_none());
        let s = GroupDescriptor::symplectic(28, 3).unwrap();
        assert!(mixed_member(&[54], &s).unwrap().is_some());
        assert!(mixed_member(&[56], &s).unwrap().is_none());
    }

    #[test]
    fn rejects_bad_input() {
        let s = GroupDescriptor::symplectic(10, 3).unwrap();
        assert!(semisimple_member(&[7, 7], &s).is_err());
        assert!(semisimple_member(&[2, 7], &s).is_err());
        assert!(semisimple_member(&[7, 11], &s).is_err());
        assert!(find_cover(&[1, 2, 7], &s, CoverMode::Semisimple)
            .unwrap()
            .is_some());
    }
}
