use group_model::{is_valid_index, Family, GroupDescriptor, Sign};
use zsig_arith::{eta, nu_eps};

use crate::error::{GraphError, Result};

/// Whether `i` carries a vertex of the index graph: valid, above 2, with a nonempty prime class.
pub fn is_vertex_index(i: u64, group: &GroupDescriptor) -> bool {
    i > 2 && is_valid_index(i, group) && !(group.q() == 2 && i == 6)
}

fn odd_ratio(i: u64, j: u64) -> bool {
    (j % i == 0 && (j / i) % 2 == 1) || (i % j == 0 && (i / j) % 2 == 1)
}

/// The boundary set J₃(i) of an even-dimensional orthogonal group, at `η(i) + η(j) = n`.
fn boundary_partner(i: u64, n: u64, sign: Sign) -> Option<u64> {
    let rest = n - eta(i);
    let i_even = i % 2 == 0;
    match sign {
        Sign::Plus if !i_even => Some(2 * rest),
        Sign::Minus if i_even => Some(2 * rest),
        _ if rest % 2 == 1 => Some(rest),
        _ => None,
    }
}

/// Whether `j` lies in the one-sided nonadjacency set J(i).
fn one_sided(i: u64, j: u64, group: &GroupDescriptor) -> bool {
    let n = group.n() as u64;
    match group.family() {
        Family::LinearUnitary => {
            let (a, b) = (nu_eps(i, group.sign()), nu_eps(j, group.sign()));
            a + b > n && a % b != 0 && b % a != 0
        }
        Family::Symplectic | Family::OddOrthogonal => eta(i) + eta(j) > n && !odd_ratio(i, j),
        Family::EvenOrthogonal => {
            if odd_ratio(i, j) {
                return false;
            }
            // Both lie in a cyclic torus of order q^n − 1.
            if group.sign() == Sign::Plus && n % i == 0 && n % j == 0 {
                return false;
            }
            let sum = eta(i) + eta(j);
            if sum != n {
                return sum > n;
            }
            boundary_partner(i, n, group.sign()) == Some(j)
        }
    }
}

/// Nonadjacency of two index classes in the prime graph.
pub fn nonadjacent(i: u64, j: u64, group: &GroupDescriptor) -> Result<bool> {
    for x in [i, j] {
        if x <= 2 || !is_valid_index(x, group) {
            return Err(GraphError::Domain(format!(
                "{x} is not a graph index of {}",
                group.short_name()
            )));
        }
    }
    if i == j {
        return Err(GraphError::Domain(format!("repeated index {i}")));
    }
    let forward = one_sided(i, j, group);
    if forward != one_sided(j, i, group) {
        return Err(GraphError::Inconsistent(format!(
            "{i} and {j} in {}",
            group.short_name()
        )));
    }
    Ok(forward)
}

/// Nonadjacency of an index class and the characteristic.
pub fn char_nonadjacent(i: u64, group: &GroupDescriptor) -> bool {
    let n = group.n() as u64;
    match group.family() {
        Family::LinearUnitary => nu_eps(i, group.sign()) + 2 > n,
        Family::Symplectic | Family::OddOrthogonal => eta(i) + 1 > n,
        Family::EvenOrthogonal => eta(i) + 2 > n,
    }
}
