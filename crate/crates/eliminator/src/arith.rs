use group_model::{phi_of_index, Family, GroupDescriptor, Sign};
use num_rational::Ratio;
use torus_spectra::mixed_member;
use zsig_arith::{eta, nu_eps};

use crate::data::GroupData;
use crate::error::{EliminatorError, Result};

/// Whether `j` carries the prime of index `k` into a torus with it, which rules `j` out.
///
/// Linear/unitary: `ν_ε(k) | ν_ε(j)`. Symplectic/orthogonal: `j ≡ k (mod 2k)`.
pub fn congruence_obstruction(j: u64, k: u64, s: &GroupDescriptor) -> bool {
    if k == 0 {
        return false;
    }
    match s.family() {
        Family::LinearUnitary => nu_eps(j, s.sign()) % nu_eps(k, s.sign()) == 0,
        _ => j % (2 * k) == k,
    }
}

/// `t − a > (2t + 2)/3`, in exact arithmetic.
pub fn exceeds_two_thirds(t: usize, a: usize) -> bool {
    a < t && Ratio::from_integer((t - a) as u64) > Ratio::new(2 * t as u64 + 2, 3)
}

/// Whether `i` is a partner of the index `j`: `r_i` is large, `r_i r_j ∈ ω(L)` and
/// `p r_i r_j ∉ ω(L)`.
pub fn is_partner(data: &GroupData, j: u64, i: u64) -> Result<bool> {
    if i == j || !data.large.contains(&i) || !data.graph.contains_index(i) {
        return Ok(false);
    }
    Ok(data.adjacent(i, j)? && mixed_member(&[i, j], data.group())?.is_none())
}

/// All partners of `j`, in increasing order.
pub fn partners(data: &GroupData, j: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for &i in &data.large {
        if is_partner(data, j, i)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// Explicit partners `i` (and a second, mutually nonadjacent `i′` when one is guaranteed)
/// of an index `j ∈ M(L) ∩ N(L)`, each checked against the graph and torus modules.
pub fn rsnotprs_witnesses(j: u64, group: &GroupDescriptor) -> Result<(u64, Option<u64>)> {
    let data = GroupData::of(group)?;
    if !(data.zeta.m.contains(&j) && data.zeta.n.contains(&j)) {
        return Err(EliminatorError::Domain(format!(
            "{j} is not in M ∩ N of {}",
            group.short_name()
        )));
    }
    let n = group.n() as u64;
    let (i, second) = match group.family() {
        Family::LinearUnitary => {
            let eps = group.sign();
            let v = nu_eps(j, eps);
            let i = nu_eps(n - v, eps);
            let second = (2 * v + 1 < n).then(|| nu_eps(n - 1 - v, eps));
            (i, second)
        }
        Family::Symplectic | Family::OddOrthogonal => {
            let a = n - eta(j);
            (2 * a, (a % 2 == 1).then_some(a))
        }
        Family::EvenOrthogonal => {
            let h = eta(j);
            let plus = group.sign() == Sign::Plus;
            if 2 * h + 1 == n {
                (n + 1, None)
            } else if 2 * h + 2 == n && n % 4 == 2 {
                (n / 2, Some(n + 2))
            } else {
                let a = n - 1 - h;
                let second = if a % 2 == 1 {
                    a
                } else if (j == h) == plus {
                    a + 1
                } else {
                    2 * (a + 1)
                };
                (2 * a, Some(second))
            }
        }
    };
    let bound = Ratio::new(2 * n, 3);
    let check = |x: u64| -> Result<()> {
        if is_partner(&data, j, x)? && Ratio::from_integer(phi_of_index(x, group)) < bound {
            Ok(())
        } else {
            Err(EliminatorError::LemmaViolation(format!(
                "{x} is not a partner of {j} in {}",
                group.short_name()
            )))
        }
    };
    check(i)?;
    if let Some(x) = second {
        check(x)?;
        if x == i || data.adjacent(i, x)? {
            return Err(EliminatorError::LemmaViolation(format!(
                "partners {i} and {x} of {j} are adjacent in {}",
                group.short_name()
            )));
        }
    }
    Ok((i, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn congruence_examples() {
        let l = GroupDescriptor::linear(45, 3).unwrap();
        assert!(congruence_obstruction(21, 3, &l));
        assert!(!congruence_obstruction(20, 3, &l));
        let s = GroupDescriptor::symplectic(28, 3).unwrap();
        assert!(congruence_obstruction(12, 4, &s));
        assert!(!congruence_obstruction(16, 4, &s));
        let u = GroupDescriptor::unitary(45, 4).unwrap();
        assert!(congruence_obstruction(42, 6, &u));
    }

    #[test]
    fn two_thirds_gap() {
        for t in 23..=200 {
            for a in 1..=6 {
                assert!(exceeds_two_thirds(t, a));
            }
        }
        assert!(!exceeds_two_thirds(20, 6));
    }

    #[test]
    fn witness_examples() {
        let s = GroupDescriptor::symplectic(28, 3).unwrap();
        assert_eq!(rsnotprs_witnesses(13, &s).unwrap(), (30, Some(15)));
        let l = GroupDescriptor::linear(45, 3).unwrap();
        assert_eq!(rsnotprs_witnesses(20, &l).unwrap(), (25, Some(24)));
        let o = GroupDescriptor::even_orthogonal(Sign::Plus, 31, 3).unwrap();
        assert_eq!(rsnotprs_witnesses(30, &o).unwrap(), (32, None));
    }
}
