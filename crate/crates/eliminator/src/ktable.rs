use std::collections::BTreeSet;

use group_model::{Family, GroupDescriptor, Sign};

/// Admissible values of `k = e(p, u)` when `t(p, L) = l` and `S` is the candidate.
pub fn k_candidates(l: usize, s: &GroupDescriptor) -> BTreeSet<u64> {
    let m = s.n() as u64;
    let set = |xs: &[u64]| xs.iter().copied().collect::<BTreeSet<u64>>();
    match (s.family(), s.sign(), l) {
        (Family::LinearUnitary, Sign::Plus, 2) => set(&[2]),
        (Family::LinearUnitary, Sign::Plus, 3) => set(&[3]),
        (Family::LinearUnitary, Sign::Plus, 4) => set(&[4]),
        (Family::LinearUnitary, Sign::Minus, 2) => set(&[1]),
        (Family::LinearUnitary, Sign::Minus, 3) => set(&[6]),
        (Family::LinearUnitary, Sign::Minus, 4) => set(&[4]),
        (_, _, 2) => set(&[1, 2]),
        (Family::Symplectic | Family::OddOrthogonal, _, 3) if matches!(m % 4, 2 | 3) => set(&[4]),
        (Family::Symplectic | Family::OddOrthogonal, _, 4) => match m % 12 {
            0 | 1 | 5 | 8 | 9 => set(&[4]),
            10 => set(&[3, 6]),
            4 => set(&[3, 4, 6]),
            _ => set(&[]),
        },
        (Family::EvenOrthogonal, Sign::Plus, 3) if m % 4 != 1 => set(&[4]),
        (Family::EvenOrthogonal, Sign::Plus, 4) => match m % 12 {
            4 | 10 => set(&[3, 6]),
            1 | 9 => set(&[4]),
            11 => set(&[6]),
            5 => set(&[4, 6]),
            _ => set(&[]),
        },
        (Family::EvenOrthogonal, Sign::Minus, 3) if m % 4 == 3 => set(&[4]),
        (Family::EvenOrthogonal, Sign::Minus, 4) => match m % 12 {
            3 | 7 => set(&[]),
            11 => set(&[3]),
            5 => set(&[3, 4]),
            _ => set(&[4]),
        },
        _ => set(&[]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let l = GroupDescriptor::linear(30, 5).unwrap();
        assert_eq!(k_candidates(3, &l), BTreeSet::from([3]));
        let o = GroupDescriptor::even_orthogonal(Sign::Plus, 29, 5).unwrap();
        assert_eq!(k_candidates(4, &o), BTreeSet::from([4, 6]));
        let s = GroupDescriptor::symplectic(30, 5).unwrap();
        assert_eq!(k_candidates(2, &s), BTreeSet::from([1, 2]));
        assert!(k_candidates(3, &GroupDescriptor::symplectic(29, 5).unwrap()).is_empty());
        let om = GroupDescriptor::even_orthogonal(Sign::Minus, 31, 5).unwrap();
        assert!(k_candidates(4, &om).is_empty());
    }
}
