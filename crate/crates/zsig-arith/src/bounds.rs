use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{pow, One, Signed, Zero};

use crate::base::{Sign, SignedBase};
use crate::cyclotomic::gpd;
use crate::error::{ArithError, Result};
use crate::index::totient;
use crate::order::has_order;
use crate::primes::{factorize, FactorBudget};

/// The six index shapes `c·2^γ` whose k-numbers satisfy `k_i(a) ≡ 1` modulo small-order primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KiCase {
    PowerOfTwo,
    Three,
    Five,
    Seven,
    Nine,
    Eleven,
}

impl KiCase {
    pub const ALL: [KiCase; 6] = [
        KiCase::PowerOfTwo,
        KiCase::Three,
        KiCase::Five,
        KiCase::Seven,
        KiCase::Nine,
        KiCase::Eleven,
    ];

    pub fn index(self, gamma: u32) -> u64 {
        let g = 1u64 << gamma;
        match self {
            KiCase::PowerOfTwo => g,
            KiCase::Three => 3 * g,
            KiCase::Five => 10 * g,
            KiCase::Seven => 7 * g,
            KiCase::Nine => 9 * g,
            KiCase::Eleven => 11 * g,
        }
    }

    /// The bound as printed in the lemma statement; differs from [`KiCase::bound`]
    /// only for `Five`, where `k_i(a) − 1` carries the factor `a^{2^{γ+1}} + 1`
    /// and so primes of order `2^{γ+2}` (for example 257 at `a = 2, γ = 2`).
    pub fn stated_bound(self, gamma: u32) -> u64 {
        match self {
            KiCase::Five => 2 << gamma,
            _ => self.bound(gamma),
        }
    }

    /// The bound `D` with `e(r,a) | D` for every admissible prime `r | k_i(a) − 1`.
    pub fn bound(self, gamma: u32) -> u64 {
        let g = 1u64 << gamma;
        match self {
            KiCase::PowerOfTwo => g / 2,
            KiCase::Three => g,
            KiCase::Five => 4 * g,
            KiCase::Seven => 3 * g,
            KiCase::Nine => 3 * g / 2,
            KiCase::Eleven => 5 * g,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KiCheck {
    pub case: KiCase,
    pub base: SignedBase,
    pub gamma: u32,
    pub index: u64,
    pub bound: u64,
    /// Part of `k_i(a) − 1` left after removing 2, primes of `a`, and primes of `a^D − 1`.
    pub residual: BigInt,
}

impl KiCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_one()
    }
}

fn strip_common(mut n: BigInt, m: &BigInt) -> BigInt {
    loop {
        let g = n.gcd(m);
        if g.is_one() || g.is_zero() {
            return n;
        }
        while n.is_multiple_of(&g) {
            n /= &g;
        }
    }
}

/// Checks the divisibility claim for one `(a, case, γ)` by gcd stripping.
///
/// Every odd prime coprime to `a` that divides `k_i(a) − 1` but not `a^D − 1` survives
/// into `residual`, so the claim holds exactly when the residual is 1.
pub fn ki_check(base: SignedBase, case: KiCase, gamma: u32) -> Result<KiCheck> {
    ki_check_with_bound(base, case, gamma, case.bound(gamma))
}

/// As [`ki_check`] but against an explicit bound, used to test the stated bound.
pub fn ki_check_with_bound(
    base: SignedBase,
    case: KiCase,
    gamma: u32,
    bound: u64,
) -> Result<KiCheck> {
    if gamma < 2 {
        return Err(ArithError::Domain(format!(
            "gamma must exceed 1, got {gamma}"
        )));
    }
    let index = case.index(gamma);
    let a = base.to_bigint();
    let mut n = (gpd(index, base) - BigInt::one()).abs();
    if !n.is_zero() {
        while n.is_even() {
            n /= 2;
        }
        n = strip_common(n, &a);
        let power = (pow(a.clone(), bound as usize) - BigInt::one()).abs();
        n = strip_common(n, &power);
    } else {
        n = BigInt::one();
    }
    Ok(KiCheck {
        case,
        base,
        gamma,
        index,
        bound,
        residual: n,
    })
}

/// Primes violating the claim, found by full factorization of `k_i(a) − 1`.
pub fn ki_offending_primes(
    base: SignedBase,
    case: KiCase,
    gamma: u32,
    budget: &FactorBudget,
) -> Result<BTreeSet<BigUint>> {
    let index = case.index(gamma);
    let bound = case.bound(gamma);
    let n = (gpd(index, base) - BigInt::one()).abs();
    if n.is_zero() {
        return Ok(BTreeSet::new());
    }
    let a = base.to_bigint();
    let mut bad = BTreeSet::new();
    for p in factorize(n.magnitude(), budget)?.into_keys() {
        if p == BigUint::from(2u32) || (&a % BigInt::from(p.clone())).is_zero() {
            continue;
        }
        let ok = crate::index::divisors(bound)
            .into_iter()
            .any(|d| has_order(&p, &a, d));
        if !ok {
            bad.insert(p);
        }
    }
    Ok(bad)
}

/// `k_i(εa) > a^{φ(i)/2}`, compared as `k² > a^{φ(i)}`.
pub fn gpd_exceeds_half_totient(a: u64, i: u64, sign: Sign) -> Result<bool> {
    let base = SignedBase::new(a, sign)?;
    let k = gpd(i, base);
    let rhs = pow(BigInt::from(a), totient(i) as usize);
    Ok(&k * &k > rhs)
}

/// `(k_j(εu) > u^7, k_{jp}(εu) > u^{5p})`.
pub fn large_index_bounds(u: u64, sign: Sign, j: u64, p: u64) -> Result<(bool, bool)> {
    let base = SignedBase::new(u, sign)?;
    let ub = BigInt::from(u);
    let first = gpd(j, base) > pow(ub.clone(), 7);
    let second = gpd(j * p, base) > pow(ub, 5 * p as usize);
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ki_shapes() {
        assert_eq!(KiCase::Five.index(2), 40);
        assert_eq!(KiCase::Five.bound(2), 16);
        assert_eq!(KiCase::Five.stated_bound(2), 8);
        assert_eq!(KiCase::Nine.bound(2), 6);
        assert_eq!(KiCase::PowerOfTwo.bound(3), 4);
    }

    #[test]
    fn ki_holds_for_small_cases() {
        for case in KiCase::ALL {
            let c = ki_check(SignedBase::plus(2).unwrap(), case, 2).unwrap();
            assert!(c.holds(), "{case:?}: residual {}", c.residual);
        }
    }

    #[test]
    fn five_case_stated_bound_fails_at_forty() {
        // k_40(2) − 1 = 2^4·3·5·257 and e(257, 2) = 16 does not divide 8.
        let a = SignedBase::plus(2).unwrap();
        let stated = ki_check_with_bound(a, KiCase::Five, 2, KiCase::Five.stated_bound(2)).unwrap();
        assert_eq!(stated.index, 40);
        assert_eq!(stated.residual, BigInt::from(257));
        assert!(ki_check(a, KiCase::Five, 2).unwrap().holds());
    }

    #[test]
    fn ki_stripping_detects_a_bad_bound() {
        // k_12(5) − 1 = 600 = 2^3·3·5^2, and e(3,5) = 2 does not divide 1.
        let a = SignedBase::plus(5).unwrap();
        let mut n = gpd(12, a) - BigInt::one();
        assert_eq!(n, BigInt::from(600));
        while n.is_even() {
            n /= 2;
        }
        let n = strip_common(strip_common(n, &BigInt::from(5)), &BigInt::from(4));
        assert_eq!(n, BigInt::from(3));
    }

    #[test]
    fn ki_factoring_agrees_on_small_values() {
        let budget = FactorBudget::default();
        for a in 2..=6u64 {
            let base = SignedBase::plus(a).unwrap();
            for case in KiCase::ALL {
                let c = ki_check(base, case, 2).unwrap();
                let bad = ki_offending_primes(base, case, 2, &budget).unwrap();
                assert_eq!(c.holds(), bad.is_empty(), "a={a} {case:?}");
            }
        }
    }

    #[test]
    fn half_totient_bound_exceptions() {
        assert!(!gpd_exceeds_half_totient(2, 6, Sign::Plus).unwrap());
        assert!(gpd_exceeds_half_totient(2, 20, Sign::Plus).unwrap());
        assert!(gpd_exceeds_half_totient(2, 20, Sign::Minus).unwrap());
    }
}
