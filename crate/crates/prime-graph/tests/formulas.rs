use std::collections::BTreeSet;

use group_model::{Family, GroupDescriptor, Sign};
use prime_graph::{
    anchored_lookup, anchored_rows, char_coclique_formulas, coclique_formulas, IndexGraph, Vertex,
    TABLE_FLOOR,
};
use rayon::prelude::*;
use zsig_arith::nu_eps;

const FIELDS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

fn kinds() -> Vec<(Family, Sign)> {
    vec![
        (Family::LinearUnitary, Sign::Plus),
        (Family::LinearUnitary, Sign::Minus),
        (Family::Symplectic, Sign::Plus),
        (Family::OddOrthogonal, Sign::Plus),
        (Family::EvenOrthogonal, Sign::Plus),
        (Family::EvenOrthogonal, Sign::Minus),
    ]
}

fn grid(lo: u32) -> Vec<GroupDescriptor> {
    let mut out = Vec::new();
    for (family, sign) in kinds() {
        for n in lo.max(family.min_rank())..=64 {
            for q in FIELDS {
                if let Ok(g) = GroupDescriptor::new(family, sign, n, q) {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn indices(vs: BTreeSet<Vertex>) -> BTreeSet<u64> {
    vs.into_iter()
        .filter_map(|v| match v {
            Vertex::Index(i) => Some(i),
            Vertex::Characteristic => None,
        })
        .collect()
}

#[test]
fn largest_cocliques_match_formulas() {
    let failures: Vec<String> = grid(TABLE_FLOOR)
        .par_iter()
        .filter_map(|g| {
            let graph = IndexGraph::new(g).unwrap();
            let a = graph.analysis();
            let row = coclique_formulas(g).unwrap();
            let union: BTreeSet<u64> = row.e_set.union(&row.j_minus_e).copied().collect();
            let ok = a.t == row.t && a.e_set == row.e_set && a.j_set == union;
            (!ok).then(|| {
                format!(
                    "{}: exact t={} E={:?} J={:?}; formula {row:?}",
                    g.short_name(),
                    a.t,
                    a.e_set,
                    a.j_set
                )
            })
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn characteristic_never_in_largest_coclique() {
    for g in grid(TABLE_FLOOR) {
        let graph = IndexGraph::new(&g).unwrap();
        assert!(graph.anchored_size(Vertex::Characteristic).unwrap() < graph.t());
    }
}

#[test]
fn characteristic_cocliques_match_formulas() {
    let failures: Vec<String> = grid(4)
        .par_iter()
        .filter_map(|g| {
            let row = char_coclique_formulas(g).ok()?;
            let graph = IndexGraph::new(g).unwrap();
            let size = graph.anchored_size(Vertex::Characteristic).unwrap();
            let union = indices(graph.anchored_union(Vertex::Characteristic).unwrap());
            let common = indices(graph.anchored_intersection(Vertex::Characteristic).unwrap());
            let ok = size == row.t && union == row.j && common == row.j;
            (!ok).then(|| {
                format!(
                    "{}: exact {size} {union:?}; formula {row:?}",
                    g.short_name()
                )
            })
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn small_cocliques_match_formulas() {
    let failures: Vec<String> = grid(TABLE_FLOOR)
        .par_iter()
        .flat_map_iter(|g| {
            let graph = IndexGraph::new(g).unwrap();
            let candidates: Vec<u64> = match g.family() {
                Family::LinearUnitary => vec![nu_eps(3, g.sign()), nu_eps(4, g.sign())],
                _ => vec![3, 4, 6],
            };
            let mut bad = Vec::new();
            for e in candidates {
                let v = Vertex::Index(e);
                if !graph.contains_index(e) {
                    continue;
                }
                let size = graph.anchored_size(v).unwrap();
                match anchored_lookup(g, e, None).unwrap() {
                    Some(row) => {
                        let union = indices(graph.anchored_union(v).unwrap());
                        if size != row.t || union != row.j {
                            bad.push(format!("{} e={e}: exact {size} {union:?}", g.short_name()));
                        }
                    }
                    None if size <= 4 => {
                        bad.push(format!("{} e={e}: exact {size} has no row", g.short_name()))
                    }
                    None => {}
                }
            }
            bad
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn prime_level_rows_are_consistent() {
    for g in grid(TABLE_FLOOR) {
        let graph = IndexGraph::new(&g).unwrap();
        let large = &graph.analysis().j_set;
        for row in anchored_rows(&g).unwrap() {
            assert_eq!(row.j.len() + 1, row.t, "{} e={}", g.short_name(), row.e);
            let vs: Vec<Vertex> = row.j.iter().map(|&i| Vertex::Index(i)).collect();
            assert!(
                graph.is_coclique(&vs).unwrap(),
                "{} e={}",
                g.short_name(),
                row.e
            );
            assert!(row.j.is_subset(large), "{} e={}", g.short_name(), row.e);
        }
    }
}

#[test]
fn formula_examples() {
    let s = GroupDescriptor::symplectic(14, 3).unwrap();
    let row = anchored_lookup(&s, 4, None).unwrap().unwrap();
    assert_eq!((row.t, row.j), (3, BTreeSet::from([13, 26])));
    let om = GroupDescriptor::even_orthogonal(Sign::Minus, 18, 3).unwrap();
    let row = coclique_formulas(&om).unwrap();
    assert_eq!(row.t, 14);
    assert_eq!(row.j_minus_e, BTreeSet::from([9, 16, 18]));
    let op = GroupDescriptor::even_orthogonal(Sign::Plus, 17, 3).unwrap();
    let row = char_coclique_formulas(&op).unwrap();
    assert_eq!((row.t, row.j), (3, BTreeSet::from([17, 32])));
}
