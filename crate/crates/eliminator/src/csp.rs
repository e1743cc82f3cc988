use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use torus_spectra::{find_cover, mixed_member, CoverMode};

use crate::arith::congruence_obstruction;
use crate::data::GroupData;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Small,
    Large,
}

/// A prime class of `L` whose index over the field of `S` is unknown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Var {
    pub index: u64,
    pub role: Role,
    pub domain: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unsatisfiable { nodes: u64 },
    Assignment(Vec<u64>),
}

/// Assignment problem `e(r_i(q), q) ↦ e(r_i(q), u)` under the spectrum constraints.
///
/// Small classes map into the ζ-fibre of their value in `S`, large classes into the large
/// indices of `S`. Adjacency must be preserved both ways, and whenever `p r ∉ ω(L)` or
/// `p r s ∉ ω(L)` the images must not share a torus of `S` with the index `k = e(p, u)`.
#[derive(Debug, Clone)]
pub struct Problem {
    pub vars: Vec<Var>,
    allowed: Vec<Vec<Option<Vec<Vec<bool>>>>>,
}

struct Covers<'a> {
    s: &'a GroupData,
    k: u64,
    memo: HashMap<Vec<u64>, bool>,
}

impl Covers<'_> {
    /// Whether `p` (index `k`) and the given indices lie in one torus of `S`.
    fn with_char(&mut self, xs: &[u64]) -> Result<bool> {
        let mut key: Vec<u64> = xs.to_vec();
        key.push(self.k);
        key.sort_unstable();
        key.dedup();
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let v = find_cover(&key, self.s.group(), CoverMode::Semisimple)?.is_some();
        self.memo.insert(key, v);
        Ok(v)
    }
}

impl Problem {
    pub fn build(
        l: &GroupData,
        s: &GroupData,
        k: u64,
        small: &[u64],
        large: &[u64],
    ) -> Result<Problem> {
        let mut covers = Covers {
            s,
            k,
            memo: HashMap::new(),
        };
        let lg = l.group();
        let mut vars = Vec::new();
        for &b in small {
            let value = l.zeta.zeta(b).unwrap_or(0);
            let p_free = mixed_member(&[b], lg)?.is_none();
            let mut domain = Vec::new();
            for j in s.fibre(value) {
                if congruence_obstruction(j, k, s.group()) {
                    continue;
                }
                if p_free && covers.with_char(&[j])? {
                    continue;
                }
                domain.push(j);
            }
            vars.push(Var {
                index: b,
                role: Role::Small,
                domain,
            });
        }
        for &a in large {
            let p_free = mixed_member(&[a], lg)?.is_none();
            let mut domain = Vec::new();
            for &x in &s.large {
                if p_free && covers.with_char(&[x])? {
                    continue;
                }
                domain.push(x);
            }
            vars.push(Var {
                index: a,
                role: Role::Large,
                domain,
            });
        }
        let count = vars.len();
        let mut allowed = vec![vec![None; count]; count];
        for u in 0..count {
            for w in u + 1..count {
                let (iu, iw) = (vars[u].index, vars[w].index);
                let adj_l = l.adjacent(iu, iw)?;
                let p_free = adj_l && mixed_member(&[iu, iw], lg)?.is_none();
                let mut table = vec![vec![false; vars[w].domain.len()]; vars[u].domain.len()];
                for (x_pos, &x) in vars[u].domain.iter().enumerate() {
                    for (y_pos, &y) in vars[w].domain.iter().enumerate() {
                        let adj_s = x == y || s.adjacent(x, y)?;
                        let ok = adj_s == adj_l && !(p_free && covers.with_char(&[x, y])?);
                        table[x_pos][y_pos] = ok;
                    }
                }
                let transposed = (0..vars[w].domain.len())
                    .map(|y| (0..vars[u].domain.len()).map(|x| table[x][y]).collect())
                    .collect();
                allowed[u][w] = Some(table);
                allowed[w][u] = Some(transposed);
            }
        }
        Ok(Problem { vars, allowed })
    }

    fn ok(&self, u: usize, x: usize, w: usize, y: usize) -> bool {
        self.allowed[u][w].as_ref().map_or(true, |t| t[x][y])
    }

    /// Backtracking search with forward checking over domain positions.
    pub fn solve(&self) -> Solution {
        let live: Vec<Vec<usize>> = self
            .vars
            .iter()
            .map(|v| (0..v.domain.len()).collect())
            .collect();
        let mut nodes = 0;
        let mut chosen = vec![usize::MAX; self.vars.len()];
        if self.search(live, &mut chosen, &mut nodes) {
            Solution::Assignment(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(v, &x)| self.vars[v].domain[x])
                    .collect(),
            )
        } else {
            Solution::Unsatisfiable { nodes }
        }
    }

    fn search(&self, live: Vec<Vec<usize>>, chosen: &mut [usize], nodes: &mut u64) -> bool {
        *nodes += 1;
        let next = (0..self.vars.len())
            .filter(|&v| chosen[v] == usize::MAX)
            .min_by_key(|&v| live[v].len());
        let Some(u) = next else {
            return true;
        };
        for &x in &live[u] {
            let mut narrowed = live.clone();
            narrowed[u] = vec![x];
            let mut wiped = false;
            for (w, dom) in narrowed.iter_mut().enumerate() {
                if w == u || chosen[w] != usize::MAX {
                    continue;
                }
                dom.retain(|&y| self.ok(u, x, w, y));
                if dom.is_empty() {
                    wiped = true;
                    break;
                }
            }
            if wiped {
                continue;
            }
            chosen[u] = x;
            if self.search(narrowed, chosen, nodes) {
                return true;
            }
            chosen[u] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_model::{GroupDescriptor, Sign};

    #[test]
    fn same_type_symplectic_is_unsatisfiable() {
        let l = GroupData::of(&GroupDescriptor::symplectic(30, 3).unwrap()).unwrap();
        let s = GroupData::of(&GroupDescriptor::symplectic(30, 4).unwrap()).unwrap();
        let small = [13, 26];
        let large = [17, 34];
        for k in [1, 2] {
            let p = Problem::build(&l, &s, k, &small, &large).unwrap();
            assert!(
                matches!(p.solve(), Solution::Unsatisfiable { .. }),
                "k = {k}"
            );
        }
    }

    #[test]
    fn identity_map_survives_without_characteristic_constraints() {
        let g = GroupDescriptor::even_orthogonal(Sign::Minus, 30, 3).unwrap();
        let l = GroupData::of(&g).unwrap();
        let s = GroupData::of(&g.with_q(7).unwrap()).unwrap();
        let p = Problem::build(&l, &s, 5, &[11, 22], &[38, 19]).unwrap();
        assert!(matches!(p.solve(), Solution::Assignment(_)));
    }
}
