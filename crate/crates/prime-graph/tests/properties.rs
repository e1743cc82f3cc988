use group_model::{phi_of_index, Family, GroupDescriptor, Sign};
use prime_graph::{
    classify_large, is_vertex_index, max_coclique_exact, nonadjacent, IndexGraph, Vertex,
};
use proptest::prelude::*;
use zsig_arith::nu_eps;

fn descriptor(lo: u32) -> impl Strategy<Value = GroupDescriptor> {
    (
        prop::sample::select(Family::ALL.to_vec()),
        any::<bool>(),
        lo..=64u32,
        prop::sample::select(vec![2u64, 3, 4, 5, 7, 9]),
    )
        .prop_filter_map("valid descriptor", |(family, minus, n, q)| {
            let sign = if minus && family.is_signed() {
                Sign::Minus
            } else {
                Sign::Plus
            };
            GroupDescriptor::new(family, sign, n, q).ok()
        })
}

fn index_pair() -> impl Strategy<Value = (GroupDescriptor, u64, u64)> {
    descriptor(4).prop_flat_map(|g| {
        let idx: Vec<u64> = (3..=4 * g.n() as u64 + 4)
            .filter(|&i| is_vertex_index(i, &g))
            .collect();
        let pick = prop::sample::select(idx);
        (Just(g), pick.clone(), pick)
    })
}

proptest! {
    #[test]
    fn nonadjacency_is_symmetric((g, a, b) in index_pair()) {
        prop_assume!(a != b);
        prop_assert_eq!(nonadjacent(a, b, &g).unwrap(), nonadjacent(b, a, &g).unwrap());
    }

    #[test]
    fn phi_halves_decide_adjacency((g, a, b) in index_pair()) {
        prop_assume!(a != b);
        let n = g.n() as u64;
        let (pa, pb) = (phi_of_index(a, &g), phi_of_index(b, &g));
        if 2 * pa <= n && 2 * pb <= n {
            prop_assert!(!nonadjacent(a, b, &g).unwrap());
        }
        if 2 * pa > n && 2 * pb > n {
            prop_assert!(nonadjacent(a, b, &g).unwrap());
        }
    }

    #[test]
    fn largest_coclique_is_certified(g in descriptor(4)) {
        let graph = IndexGraph::new(&g).unwrap();
        let r = max_coclique_exact(&graph, None).unwrap();
        prop_assert_eq!(r.size, graph.t());
        let mut vs: Vec<Vertex> = r.indices.iter().map(|&i| Vertex::Index(i)).collect();
        if r.includes_char {
            vs.push(Vertex::Characteristic);
        }
        prop_assert!(graph.is_coclique(&vs).unwrap());
    }

    #[test]
    fn largeness_bounds_hold(g in descriptor(13)) {
        let graph = IndexGraph::new(&g).unwrap();
        for i in graph.indices().collect::<Vec<_>>() {
            prop_assert!(classify_large(&graph, i).is_ok());
        }
    }

    #[test]
    fn nu_is_an_involution(k in 1u64..10_000, minus in any::<bool>()) {
        let s = if minus { Sign::Minus } else { Sign::Plus };
        prop_assert_eq!(nu_eps(nu_eps(k, s), s), k);
    }
}
