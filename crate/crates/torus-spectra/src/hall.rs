use group_model::{phi_of_index, GroupDescriptor};

/// Whether L has a cyclic Hall subgroup of order `k_i(q)`: `n/2 < φ ≤ n`.
pub fn has_cyclic_hall(i: u64, group: &GroupDescriptor) -> bool {
    let phi = phi_of_index(i, group);
    let n = group.n() as u64;
    2 * phi > n && phi <= n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let l = GroupDescriptor::linear(45, 3).unwrap();
        assert!(has_cyclic_hall(30, &l));
        let s = GroupDescriptor::symplectic(28, 3).unwrap();
        assert!(!has_cyclic_hall(20, &s));
        assert!(!has_cyclic_hall(10, &s));
        assert!(has_cyclic_hall(56, &s));
        assert!(has_cyclic_hall(30, &s));
        assert!(!has_cyclic_hall(28, &s));
    }
}
