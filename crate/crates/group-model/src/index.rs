use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use zsig_arith::{eta, factorize_u64, gpd, nu_eps, Sign, SignedBase};

use crate::descriptor::{Family, GroupDescriptor};
use crate::error::{ModelError, Result};

/// A class of primes sharing `i = e(r, q)`, together with `φ(r, L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IndexClass {
    pub i: u64,
    pub phi: u64,
}

/// Residue data of `e(r, q)` needed to invert φ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexParity {
    Odd,
    TwiceOdd,
    DivisibleByFour,
}

impl IndexParity {
    pub fn of(i: u64) -> IndexParity {
        match i % 4 {
            0 => IndexParity::DivisibleByFour,
            2 => IndexParity::TwiceOdd,
            _ => IndexParity::Odd,
        }
    }
}

/// φ(r, L) for a prime with `e(r, q) = i`.
pub fn phi_of_index(i: u64, group: &GroupDescriptor) -> u64 {
    match group.family() {
        Family::LinearUnitary => nu_eps(i, group.sign()),
        _ => eta(i),
    }
}

/// Recovers `e(r, q)` from φ and the residue class of `e(r, q)` modulo 4.
pub fn index_of_phi(phi: u64, parity: IndexParity, group: &GroupDescriptor) -> Result<IndexClass> {
    if phi == 0 {
        return Err(ModelError::Domain("phi must be positive".into()));
    }
    let unitary = group.family() == Family::LinearUnitary && group.sign() == Sign::Minus;
    let i = match (group.family(), parity) {
        (Family::LinearUnitary, IndexParity::Odd) if unitary => {
            if phi % 2 == 0 {
                phi / 2
            } else {
                0
            }
        }
        (Family::LinearUnitary, IndexParity::TwiceOdd) if unitary => 2 * phi,
        (Family::LinearUnitary, _) => phi,
        (_, IndexParity::Odd) => phi,
        (_, _) => 2 * phi,
    };
    if i == 0 || IndexParity::of(i) != parity || phi_of_index(i, group) != phi {
        return Err(ModelError::Domain(format!(
            "no index of parity {parity:?} has phi {phi} in {}",
            group.short_name()
        )));
    }
    Ok(IndexClass { i, phi })
}

/// Whether some prime with `e(r, q) = i` could divide |L|, judged by the index alone.
pub fn is_valid_index(i: u64, group: &GroupDescriptor) -> bool {
    if i == 0 {
        return false;
    }
    let n = group.n() as u64;
    match group.family() {
        Family::LinearUnitary => nu_eps(i, group.sign()) <= n,
        Family::Symplectic | Family::OddOrthogonal => eta(i) <= n,
        Family::EvenOrthogonal => {
            let top = match group.sign() {
                Sign::Plus => n,
                Sign::Minus => 2 * n,
            };
            eta(i) < n || i == top
        }
    }
}

/// All valid indices, including 1 and 2.
pub fn valid_indices(group: &GroupDescriptor) -> BTreeSet<u64> {
    let limit = 4 * group.n() as u64 + 4;
    (1..=limit).filter(|&i| is_valid_index(i, group)).collect()
}

/// Valid index whose prime class is nonempty (`k_i(q) > 1`).
pub fn has_index_class(i: u64, group: &GroupDescriptor) -> bool {
    if !is_valid_index(i, group) {
        return false;
    }
    let q = SignedBase::plus(group.q()).expect("q > 1");
    gpd(i, q) > 1.into()
}

/// Index classes with `i > 2` that carry at least one prime.
pub fn graph_indices(group: &GroupDescriptor) -> Vec<u64> {
    valid_indices(group)
        .into_iter()
        .filter(|&i| i > 2 && has_index_class(i, group))
        .collect()
}

/// δ(L): primes of `εq − 1` for linear/unitary groups, `π((2, q − 1))` otherwise.
pub fn delta_of(group: &GroupDescriptor) -> BTreeSet<BigUint> {
    let q = group.q() as i64;
    match group.family() {
        Family::LinearUnitary => {
            let v = (group.sign().unit() * q - 1).unsigned_abs();
            factorize_u64(v).into_keys().map(BigUint::from).collect()
        }
        _ => {
            if q % 2 == 1 {
                BTreeSet::from([BigUint::from(2u32)])
            } else {
                BTreeSet::new()
            }
        }
    }
}

/// Maximal root height `h(L)`.
pub fn max_root_height(group: &GroupDescriptor) -> u64 {
    let n = group.n() as u64;
    match group.family() {
        Family::LinearUnitary => n - 1,
        Family::EvenOrthogonal => 2 * n - 3,
        Family::Symplectic | Family::OddOrthogonal => 2 * n - 1,
    }
}

/// Exponent of a Sylow `p`-subgroup: the least power of `p` exceeding `h(L)`.
pub fn p_exponent(group: &GroupDescriptor) -> u64 {
    let h = max_root_height(group);
    let mut x = 1u64;
    while x <= h {
        x *= group.p();
    }
    x
}

/// Whether `φ(r,L)` obeys the small-or-extremal dichotomy for `e(r,q) | l·2^k`.
pub fn phi_dichotomy_holds(i: u64, l: u64, group: &GroupDescriptor) -> bool {
    let phi = phi_of_index(i, group);
    match group.family() {
        Family::LinearUnitary => phi <= 2 * l || phi == i,
        _ => phi <= l || 2 * phi == i,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: u32) -> GroupDescriptor {
        GroupDescriptor::symplectic(n, 3).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_of_index(6, &sym(5)), 3);
        let u = GroupDescriptor::unitary(10, 2).unwrap();
        assert_eq!(phi_of_index(3, &u), 6);
        assert_eq!(phi_of_index(4, &u), 4);
    }

    #[test]
    fn phi_inverse_round_trips() {
        let groups = [
            GroupDescriptor::linear(20, 3).unwrap(),
            GroupDescriptor::unitary(20, 3).unwrap(),
            sym(20),
            GroupDescriptor::even_orthogonal(Sign::Minus, 20, 3).unwrap(),
        ];
        for g in &groups {
            for i in valid_indices(g) {
                let phi = phi_of_index(i, g);
                let back = index_of_phi(phi, IndexParity::of(i), g).unwrap();
                assert_eq!(back, IndexClass { i, phi });
            }
        }
    }

    #[test]
    fn phi_inverse_rejects_inconsistent_parity() {
        assert!(index_of_phi(3, IndexParity::DivisibleByFour, &sym(10)).is_err());
        let u = GroupDescriptor::unitary(10, 2).unwrap();
        assert!(index_of_phi(3, IndexParity::Odd, &u).is_err());
    }

    #[test]
    fn valid_index_examples() {
        let op = GroupDescriptor::even_orthogonal(Sign::Plus, 8, 3).unwrap();
        assert!(!is_valid_index(16, &op));
        assert!(is_valid_index(8, &op));
        let om = GroupDescriptor::even_orthogonal(Sign::Minus, 7, 3).unwrap();
        assert!(!is_valid_index(7, &om));
        assert!(is_valid_index(14, &om));
        let s = valid_indices(&sym(5));
        assert_eq!(s, BTreeSet::from([1, 2, 3, 4, 5, 6, 8, 10]));
    }

    #[test]
    fn graph_indices_prune_empty_classes() {
        let l = GroupDescriptor::linear(13, 2).unwrap();
        assert!(!graph_indices(&l).contains(&6));
        let l3 = GroupDescriptor::linear(13, 3).unwrap();
        assert!(graph_indices(&l3).contains(&6));
    }

    #[test]
    fn delta_examples() {
        let b = |v: u32| BigUint::from(v);
        assert_eq!(
            delta_of(&GroupDescriptor::linear(5, 4).unwrap()),
            BTreeSet::from([b(3)])
        );
        assert_eq!(
            delta_of(&GroupDescriptor::unitary(5, 4).unwrap()),
            BTreeSet::from([b(5)])
        );
        assert_eq!(delta_of(&sym(28)), BTreeSet::from([b(2)]));
        assert!(delta_of(&GroupDescriptor::symplectic(28, 4).unwrap()).is_empty());
    }

    #[test]
    fn p_exponent_examples() {
        assert_eq!(p_exponent(&GroupDescriptor::linear(45, 2).unwrap()), 64);
        assert_eq!(p_exponent(&sym(28)), 81);
        let o = GroupDescriptor::even_orthogonal(Sign::Plus, 31, 5).unwrap();
        assert_eq!(p_exponent(&o), 125);
    }
}
