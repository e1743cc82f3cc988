use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::base::SignedBase;
use crate::error::{ArithError, Result};
use crate::primes::{factorize_u64, is_prime_u64, pow_mod_u64};

fn reduce(a: &BigInt, p: &BigUint) -> BigUint {
    a.mod_floor(&BigInt::from(p.clone()))
        .to_biguint()
        .expect("floor remainder is nonnegative")
}

/// Whether `a` has multiplicative order exactly `i` modulo the prime `p`.
pub fn has_order(p: &BigUint, a: &BigInt, i: u64) -> bool {
    let a = reduce(a, p);
    if a.is_zero() || i == 0 {
        return false;
    }
    if !a.modpow(&BigUint::from(i), p).is_one() {
        return false;
    }
    factorize_u64(i)
        .into_keys()
        .all(|s| !a.modpow(&BigUint::from(i / s), p).is_one())
}

/// e(r, a): the multiplicative order of `a` modulo an odd prime `r`.
pub fn mult_order(r: u64, a: SignedBase) -> Result<u64> {
    if r % 2 == 0 || !is_prime_u64(r) {
        return Err(ArithError::Domain(format!("{r} is not an odd prime")));
    }
    let residue = a.value().rem_euclid(r as i64) as u64;
    if residue == 0 {
        return Err(ArithError::Domain(format!("{r} divides {a}")));
    }
    let mut order = r - 1;
    for (s, _) in factorize_u64(r - 1) {
        while order % s == 0 && pow_mod_u64(residue, order / s, r) == 1 {
            order /= s;
        }
    }
    Ok(order)
}

/// e(2, n): 1 if `n ≡ 1 (mod 4)`, 2 otherwise.
pub fn mult_order_two(n: i64) -> Result<u8> {
    if n % 2 == 0 {
        return Err(ArithError::Domain(format!("{n} is even")));
    }
    Ok(if n.rem_euclid(4) == 1 { 1 } else { 2 })
}

/// e(r, a) for any prime `r` coprime to `a`, using the e(2,·) convention at 2.
pub fn prime_index(r: u64, a: SignedBase) -> Result<u64> {
    if r == 2 {
        return mult_order_two(a.value()).map(u64::from);
    }
    mult_order(r, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> SignedBase {
        SignedBase::from_i64(v).unwrap()
    }

    fn brute(r: u64, a: i64) -> u64 {
        let a = a.rem_euclid(r as i64) as u64;
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = x * a % r;
            k += 1;
        }
        k
    }

    #[test]
    fn order_examples() {
        assert_eq!(mult_order(3, b(2)).unwrap(), 2);
        assert_eq!(mult_order(5, b(2)).unwrap(), 4);
        assert_eq!(mult_order(7, b(-2)).unwrap(), brute(7, -2));
        assert_eq!(mult_order(7, b(-2)).unwrap(), 6);
    }

    #[test]
    fn order_errors() {
        assert!(mult_order(3, b(6)).is_err());
        assert!(mult_order(9, b(2)).is_err());
        assert!(mult_order(2, b(3)).is_err());
    }

    #[test]
    fn order_matches_brute_force() {
        for r in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 97, 101] {
            for a in -30i64..=30 {
                if a.abs() < 2 || a % r as i64 == 0 {
                    continue;
                }
                assert_eq!(mult_order(r, b(a)).unwrap(), brute(r, a), "r={r} a={a}");
            }
        }
    }

    #[test]
    fn order_two_convention() {
        assert_eq!(mult_order_two(5).unwrap(), 1);
        assert_eq!(mult_order_two(7).unwrap(), 2);
        assert_eq!(mult_order_two(1).unwrap(), 1);
        assert_eq!(mult_order_two(-3).unwrap(), 1);
        assert!(mult_order_two(4).is_err());
    }

    #[test]
    fn exact_order_predicate() {
        let p = BigUint::from(41u32);
        assert!(has_order(&p, &BigInt::from(2), 20));
        assert!(!has_order(&p, &BigInt::from(2), 10));
        assert!(has_order(&p, &BigInt::from(-2), 20));
    }
}
