use std::collections::{BTreeMap, BTreeSet};

use group_model::{phi_of_index, Family, GroupDescriptor, Sign};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use zsig_arith::{eta, nu_eps};

use crate::error::Result;
use crate::graph::{IndexGraph, Vertex};

/// M(L), N(L), T(L) and ζ_L, computed from exact anchored searches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaTable {
    pub group: GroupDescriptor,
    pub t: usize,
    pub m: BTreeSet<u64>,
    pub n: BTreeSet<u64>,
    pub t_values: BTreeSet<usize>,
    pub zeta: BTreeMap<u64, usize>,
}

impl ZetaTable {
    pub fn zeta(&self, i: u64) -> Option<usize> {
        self.zeta.get(&i).copied()
    }

    /// Indices in M(L) ∩ N(L) with the given ζ value.
    pub fn preimage(&self, value: usize) -> BTreeSet<u64> {
        self.m
            .intersection(&self.n)
            .filter(|i| self.zeta[i] == value)
            .copied()
            .collect()
    }

    /// Offsets `t − x` of the values of T(L) within `1..=depth`.
    pub fn offsets(&self, depth: usize) -> BTreeSet<usize> {
        self.t_values
            .iter()
            .filter(|&&x| x < self.t && self.t - x <= depth)
            .map(|&x| self.t - x)
            .collect()
    }
}

pub fn zeta_table(graph: &IndexGraph) -> Result<ZetaTable> {
    let group = *graph.group();
    let t = graph.t();
    let n3 = Ratio::new(group.n() as u64, 3);
    let two_t3 = Ratio::new(2 * t, 3);
    let mut zeta = BTreeMap::new();
    let mut m = BTreeSet::new();
    let mut nset = BTreeSet::new();
    for i in graph.indices() {
        let z = graph.anchored_size(Vertex::Index(i))?;
        let in_m = Ratio::from_integer(phi_of_index(i, &group)) > n3 && z < t;
        let in_n = two_t3 < Ratio::from_integer(z) && z < t;
        if in_m {
            m.insert(i);
        }
        if in_n {
            nset.insert(i);
        }
        if in_m || in_n {
            zeta.insert(i, z);
        }
    }
    let t_values = m.intersection(&nset).map(|i| zeta[i]).collect();
    Ok(ZetaTable {
        group,
        t,
        m,
        n: nset,
        t_values,
        zeta,
    })
}

/// The smallest `n` at which the closed forms for ζ are claimed.
pub fn zeta_floor(group: &GroupDescriptor) -> u32 {
    match group.family() {
        Family::LinearUnitary => 45,
        Family::Symplectic | Family::OddOrthogonal => 29,
        Family::EvenOrthogonal => 30,
    }
}

/// ζ_L(i) for `i ∈ M(L)`, by closed form.
pub fn zeta_closed_form(group: &GroupDescriptor, i: u64) -> u64 {
    let n = group.n() as u64;
    let h = eta(i);
    match group.family() {
        Family::LinearUnitary => nu_eps(i, group.sign()),
        Family::Symplectic | Family::OddOrthogonal if n % 2 == 0 => (3 * h + 2) / 2,
        Family::Symplectic | Family::OddOrthogonal => (3 * h + 3) / 2,
        Family::EvenOrthogonal => match (group.sign(), n % 2 == 0) {
            (Sign::Plus, true) => (3 * h + 1) / 2,
            (Sign::Plus, false) if i % 2 == 0 => (3 * h + 2) / 2,
            (Sign::Plus, false) => (3 * h + 3) / 2,
            (Sign::Minus, true) => (3 * h + 4) / 2,
            (Sign::Minus, false) if h % 2 == 0 => (3 * h + 2) / 2,
            (Sign::Minus, false) if i % 2 == 1 => (3 * h + 1) / 2,
            (Sign::Minus, false) => (3 * h + 3) / 2,
        },
    }
}

/// ζ_L(i) for `O⁻` read literally from the lemma statement, whose first case is headed
/// "n is odd"; `None` where the statement gives no formula.
pub fn zeta_as_stated_minus(group: &GroupDescriptor, i: u64) -> Option<u64> {
    let h = eta(i);
    (group.n() % 2 == 1).then_some((3 * h + 4) / 2)
}

/// A closed-form value that disagrees with the exact search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaDiscrepancy {
    pub index: u64,
    pub exact: usize,
    pub formula: Option<u64>,
}

pub fn closed_form_discrepancies(table: &ZetaTable) -> Vec<ZetaDiscrepancy> {
    table
        .m
        .iter()
        .filter(|&&i| zeta_closed_form(&table.group, i) != table.zeta[&i] as u64)
        .map(|&i| ZetaDiscrepancy {
            index: i,
            exact: table.zeta[&i],
            formula: Some(zeta_closed_form(&table.group, i)),
        })
        .collect()
}

/// Disagreements of the literal `O⁻` statement with the exact search; empty for other families.
pub fn statement_discrepancies(table: &ZetaTable) -> Vec<ZetaDiscrepancy> {
    let g = &table.group;
    if !(g.is_even_orthogonal() && g.sign() == Sign::Minus) {
        return Vec::new();
    }
    table
        .m
        .iter()
        .filter_map(|&i| {
            let stated = zeta_as_stated_minus(g, i);
            let exact = table.zeta[&i];
            (stated != Some(exact as u64)).then_some(ZetaDiscrepancy {
                index: i,
                exact,
                formula: stated,
            })
        })
        .collect()
}

/// Expected N(L) \ M(L).
pub fn expected_n_minus_m(group: &GroupDescriptor) -> BTreeSet<u64> {
    let n = group.n() as u64;
    if !group.is_even_orthogonal() {
        return BTreeSet::new();
    }
    match (group.sign(), n % 12) {
        (_, 9) => BTreeSet::from([2 * n / 3, n / 3]),
        (_, 6) => BTreeSet::from([2 * n / 3]),
        (Sign::Minus, 0) => BTreeSet::from([2 * n / 3]),
        _ => BTreeSet::new(),
    }
}

/// Expected M(L) \ N(L).
pub fn expected_m_minus_n(group: &GroupDescriptor) -> BTreeSet<u64> {
    let n = group.n() as u64;
    if group.is_linear_unitary() && n % 6 == 5 {
        BTreeSet::from([nu_eps((n + 1) / 3, group.sign())])
    } else {
        BTreeSet::new()
    }
}

/// The value ζ_L takes on N(L) \ M(L), as `(2t + c)/3`; returns `c`.
pub fn exceptional_offset(group: &GroupDescriptor) -> Option<usize> {
    if !group.is_even_orthogonal() {
        return None;
    }
    match (group.sign(), group.n() % 12) {
        (Sign::Plus, 6 | 9) => Some(1),
        (Sign::Minus, 0 | 9) => Some(1),
        (Sign::Minus, 6) => Some(2),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_minus_thirty() {
        let g = GroupDescriptor::even_orthogonal(Sign::Minus, 30, 3).unwrap();
        let table = zeta_table(&IndexGraph::new(&g).unwrap()).unwrap();
        let t = table.t;
        let expect: BTreeSet<usize> = [t - 2, t - 3, t - 5].into();
        assert_eq!(table.t_values, expect);
        assert!(closed_form_discrepancies(&table).is_empty());
        assert_eq!(&table.n - &table.m, expected_n_minus_m(&g));
    }

    #[test]
    fn linear_offsets() {
        let g = GroupDescriptor::linear(45, 3).unwrap();
        let table = zeta_table(&IndexGraph::new(&g).unwrap()).unwrap();
        assert_eq!(table.offsets(7), (1..=7).collect());
        for (&i, &z) in &table.zeta {
            assert_eq!(z as u64, nu_eps(i, Sign::Plus));
        }
    }

    #[test]
    fn statement_reading_disagrees_for_even_rank() {
        let g = GroupDescriptor::even_orthogonal(Sign::Minus, 32, 3).unwrap();
        let table = zeta_table(&IndexGraph::new(&g).unwrap()).unwrap();
        assert!(!statement_discrepancies(&table).is_empty());
        assert!(closed_form_discrepancies(&table).is_empty());
    }
}
