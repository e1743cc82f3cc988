use std::collections::BTreeSet;

use eliminator::{
    class_from_values, class_label, classify, rsnotprs_witnesses, two_thirds_gap_holds, GroupData,
    SCOPE_T,
};
use group_model::{Family, GroupDescriptor, Sign};
use prime_graph::exceptional_offset;

const KINDS: [(Family, Sign); 5] = [
    (Family::LinearUnitary, Sign::Plus),
    (Family::LinearUnitary, Sign::Minus),
    (Family::Symplectic, Sign::Plus),
    (Family::EvenOrthogonal, Sign::Plus),
    (Family::EvenOrthogonal, Sign::Minus),
];

fn in_scope_groups(q: u64, max_n: u32) -> Vec<GroupData> {
    let mut out = Vec::new();
    for &(f, s) in &KINDS {
        for n in 20..=max_n {
            let d = GroupData::of(&GroupDescriptor::new(f, s, n, q).unwrap()).unwrap();
            if d.t() >= SCOPE_T {
                out.push(d);
            }
        }
    }
    out
}

#[test]
fn gap_above_two_thirds() {
    assert!(two_thirds_gap_holds(200));
}

#[test]
fn class_labels_match_top_of_t() {
    for q in [2, 3] {
        for d in in_scope_groups(q, 64) {
            let g = d.group();
            assert_eq!(
                class_from_values(&d),
                Some(class_label(g)),
                "{}",
                g.short_name()
            );
            assert_eq!(classify(g).unwrap(), class_label(g));
        }
    }
}

#[test]
fn values_outside_m_are_the_exceptional_value() {
    for q in [2, 3] {
        for d in in_scope_groups(q, 70) {
            let g = d.group();
            let t = d.t();
            let got: BTreeSet<usize> = d
                .zeta
                .n
                .difference(&d.zeta.m)
                .map(|i| d.zeta.zeta[i])
                .collect();
            let want: BTreeSet<usize> = exceptional_offset(g)
                .map(|o| (2 * t + o) / 3)
                .into_iter()
                .collect();
            assert_eq!(got, want, "{}", g.short_name());
            for x in &want {
                assert!(3 * x <= 2 * t + 2, "{}", g.short_name());
            }
        }
    }
}

#[test]
fn partner_formulas_hold_on_m_cap_n() {
    for q in [2, 3] {
        for d in in_scope_groups(q, 64) {
            let g = *d.group();
            for &j in d.zeta.m.intersection(&d.zeta.n) {
                let (i, second) = rsnotprs_witnesses(j, &g)
                    .unwrap_or_else(|e| panic!("{} j = {j}: {e}", g.short_name()));
                assert_ne!(Some(i), second);
            }
        }
    }
}

#[test]
fn odd_orthogonal_matches_symplectic() {
    for n in 29..=40 {
        let s = GroupDescriptor::symplectic(n, 5).unwrap();
        let o = GroupDescriptor::odd_orthogonal(n, 5).unwrap();
        assert_eq!(class_label(&s), class_label(&o));
        let (ds, dd) = (GroupData::of(&s).unwrap(), GroupData::of(&o).unwrap());
        assert_eq!(ds.zeta.zeta, dd.zeta.zeta);
    }
}
