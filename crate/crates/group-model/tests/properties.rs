use group_model::{
    index_of_phi, p_exponent, phi_of_index, valid_indices, Family, GroupDescriptor, IndexClass,
    IndexParity, Sign,
};
use proptest::prelude::*;

fn descriptor() -> impl Strategy<Value = GroupDescriptor> {
    (
        prop::sample::select(Family::ALL.to_vec()),
        any::<bool>(),
        4u32..80,
        prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27]),
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

proptest! {
    #[test]
    fn phi_round_trips_on_valid_indices(g in descriptor()) {
        for i in valid_indices(&g) {
            let phi = phi_of_index(i, &g);
            prop_assert_eq!(index_of_phi(phi, IndexParity::of(i), &g).unwrap(), IndexClass { i, phi });
        }
    }

    #[test]
    fn phi_bounded_by_rank(g in descriptor()) {
        for i in valid_indices(&g) {
            prop_assert!(phi_of_index(i, &g) <= g.n() as u64);
        }
    }

    #[test]
    fn p_exponent_is_least_power_above_height(g in descriptor()) {
        let e = p_exponent(&g);
        let h = match g.family() {
            Family::LinearUnitary => g.n() as u64 - 1,
            Family::EvenOrthogonal => 2 * g.n() as u64 - 3,
            _ => 2 * g.n() as u64 - 1,
        };
        prop_assert!(e > h);
        prop_assert!(e / g.p() <= h);
        let mut x = e;
        while x % g.p() == 0 { x /= g.p(); }
        prop_assert_eq!(x, 1);
    }

    #[test]
    fn descriptor_json_round_trip(g in descriptor()) {
        let text = serde_json::to_string(&g).unwrap();
        let back: GroupDescriptor = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, g);
    }
}
