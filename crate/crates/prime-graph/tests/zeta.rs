use std::collections::BTreeSet;

use group_model::{phi_of_index, Family, GroupDescriptor, Sign};
use prime_graph::{
    closed_form_discrepancies, exceptional_offset, expected_m_minus_n, expected_n_minus_m,
    zeta_floor, zeta_table, IndexGraph, ZetaTable,
};
use rayon::prelude::*;

fn grid() -> Vec<GroupDescriptor> {
    let mut out = Vec::new();
    for (family, sign) in [
        (Family::LinearUnitary, Sign::Plus),
        (Family::LinearUnitary, Sign::Minus),
        (Family::Symplectic, Sign::Plus),
        (Family::OddOrthogonal, Sign::Plus),
        (Family::EvenOrthogonal, Sign::Plus),
        (Family::EvenOrthogonal, Sign::Minus),
    ] {
        for q in [2u64, 3] {
            let floor = zeta_floor(&GroupDescriptor::new(family, sign, 13, q).unwrap());
            for n in floor..=64 {
                out.push(GroupDescriptor::new(family, sign, n, q).unwrap());
            }
        }
    }
    out
}

fn table(g: &GroupDescriptor) -> ZetaTable {
    zeta_table(&IndexGraph::new(g).unwrap()).unwrap()
}

fn set(xs: &[usize]) -> BTreeSet<usize> {
    xs.iter().copied().collect()
}

#[test]
fn closed_forms_match_exact_search() {
    let bad: Vec<String> = grid()
        .par_iter()
        .filter_map(|g| {
            let d = closed_form_discrepancies(&table(g));
            (!d.is_empty()).then(|| format!("{}: {d:?}", g.short_name()))
        })
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn m_and_n_differ_only_at_exceptions() {
    for g in grid() {
        let z = table(&g);
        let n_minus_m: BTreeSet<u64> = z.n.difference(&z.m).copied().collect();
        let m_minus_n: BTreeSet<u64> = z.m.difference(&z.n).copied().collect();
        assert_eq!(n_minus_m, expected_n_minus_m(&g), "{}", g.short_name());
        assert_eq!(m_minus_n, expected_m_minus_n(&g), "{}", g.short_name());
        if let Some(c) = exceptional_offset(&g) {
            for i in &n_minus_m {
                assert_eq!(3 * z.zeta[i], 2 * z.t + c, "{} i={i}", g.short_name());
            }
        }
    }
}

#[test]
fn value_windows() {
    for g in grid() {
        let z = table(&g);
        let n = g.n();
        let name = g.short_name();
        match (g.family(), g.sign()) {
            (Family::LinearUnitary, _) => {
                assert!(
                    set(&[1, 2, 3, 4, 5, 6, 7]).is_subset(&z.offsets(7)),
                    "{name}"
                );
                let mn: Vec<u64> = z.m.intersection(&z.n).copied().collect();
                let values: BTreeSet<usize> = mn.iter().map(|i| z.zeta[i]).collect();
                assert_eq!(values.len(), mn.len(), "{name}");
            }
            (Family::Symplectic | Family::OddOrthogonal, _) => {
                let expect = match n % 4 {
                    0 | 3 => set(&[2, 3, 5, 6]),
                    2 => set(&[1, 3, 4, 6]),
                    _ => set(&[1, 2, 4, 5]),
                };
                assert_eq!(z.offsets(6), expect, "{name}");
            }
            (Family::EvenOrthogonal, sign) if n % 2 == 1 => {
                assert_eq!(z.offsets(6), set(&[1, 2, 3, 4, 5, 6]), "{name}");
                let mn: Vec<u64> = z.m.intersection(&z.n).copied().collect();
                let values: BTreeSet<usize> = mn.iter().map(|i| z.zeta[i]).collect();
                assert_eq!(values.len(), mn.len(), "{name} {sign:?}");
                assert!(
                    (1..=6).any(|j| z.preimage(z.t - j).iter().any(|i| i % 8 == 4)),
                    "{name}"
                );
            }
            (Family::EvenOrthogonal, Sign::Plus) => {
                let expect = if n % 4 == 0 {
                    set(&[1, 3, 4, 6])
                } else {
                    set(&[1, 2, 4, 5])
                };
                assert_eq!(z.offsets(6), expect, "{name}");
            }
            (Family::EvenOrthogonal, Sign::Minus) => {
                if n % 4 == 0 {
                    assert_eq!(z.offsets(7), set(&[1, 2, 4, 5, 7]), "{name}");
                } else if n >= 38 {
                    assert_eq!(z.offsets(8), set(&[2, 3, 5, 6, 8]), "{name}");
                } else {
                    let all: BTreeSet<usize> = z.t_values.iter().map(|&x| z.t - x).collect();
                    let expect = if n == 34 {
                        set(&[2, 3, 5, 6])
                    } else {
                        set(&[2, 3, 5])
                    };
                    assert_eq!(all, expect, "{name}");
                }
            }
        }
    }
}

#[test]
fn m_is_above_a_third() {
    for g in grid() {
        let z = table(&g);
        for i in &z.m {
            assert!(3 * phi_of_index(*i, &g) > g.n() as u64);
            assert!(*i > 2 && *i != 6);
        }
    }
}
