use std::collections::BTreeSet;
use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{pow, FromPrimitive, One, Signed, Zero};

use crate::base::SignedBase;
use crate::error::Result;
use crate::factored::FactoredInteger;
use crate::index::{divisors, largest_prime_factor, strip_prime};
use crate::order::has_order;
use crate::primes::FactorBudget;

/// Scalar types the cyclotomic layer can evaluate over.
pub trait Int: Integer + Signed + Clone + FromPrimitive + Debug {}

impl<T: Integer + Signed + Clone + FromPrimitive + Debug> Int for T {}

/// Φ_i(x) by exact division of `x^d − 1` through the smaller cyclotomic factors.
///
/// Panics on a nonzero remainder, which would mean an arithmetic bug.
pub fn cyclotomic_value<T: Int>(i: u64, x: &T) -> T {
    assert!(i >= 1, "cyclotomic index must be positive");
    let mut values: Vec<(u64, T)> = Vec::new();
    for d in divisors(i) {
        let mut num = pow(x.clone(), d as usize) - T::one();
        for (e, v) in &values {
            if d % e == 0 {
                let (q, r) = num.div_rem(v);
                assert!(r.is_zero(), "inexact cyclotomic division at d = {d}");
                num = q;
            }
        }
        values.push((d, num));
    }
    values.pop().expect("divisors of i include i").1
}

/// k_i(x), the greatest primitive divisor of `x^i − 1`.
pub fn gpd_value<T: Int>(i: u64, x: &T) -> T {
    assert!(i >= 1, "index must be positive");
    let four = T::from_u8(4).expect("4 fits");
    match i {
        1 => {
            let m = (x.clone() - T::one()).abs();
            if x.mod_floor(&four) == T::from_u8(3).expect("3 fits") {
                m / T::from_u8(2).expect("2 fits")
            } else {
                m
            }
        }
        2 => gpd_value(1, &(-x.clone())),
        _ => {
            let r = largest_prime_factor(i).expect("i > 2 has a prime factor");
            let rest = strip_prime(i, r);
            let phi = cyclotomic_value(i, x).abs();
            let g = T::from_u64(r)
                .expect("prime fits")
                .gcd(&cyclotomic_value(rest, x));
            phi / g
        }
    }
}

/// Φ_i(a) over the integers.
pub fn cyclotomic_eval(i: u64, a: SignedBase) -> BigInt {
    cyclotomic_value(i, &a.to_bigint())
}

/// k_i(a) as a plain integer.
pub fn gpd(i: u64, a: SignedBase) -> BigInt {
    gpd_value(i, &a.to_bigint())
}

/// k_i(a) with its factorization.
pub fn greatest_primitive_divisor(i: u64, a: SignedBase) -> Result<FactoredInteger> {
    greatest_primitive_divisor_with(i, a, &FactorBudget::default())
}

pub fn greatest_primitive_divisor_with(
    i: u64,
    a: SignedBase,
    budget: &FactorBudget,
) -> Result<FactoredInteger> {
    FactoredInteger::with_budget(gpd(i, a), budget)
}

/// Whether 2 counts as a primitive divisor for index `i` under e(2,a) ∈ {1, 2}.
fn two_is_primitive(i: u64, a: SignedBase) -> bool {
    if a.magnitude() % 2 == 0 {
        return false;
    }
    let e2 = if a.value().rem_euclid(4) == 1 { 1 } else { 2 };
    i == e2
}

/// R_i(a): primes of multiplicative order exactly `i` modulo which `a` is taken.
///
/// Computed by factoring Φ_i(a) and testing each prime's order, independently of k_i.
pub fn primitive_prime_divisors(i: u64, a: SignedBase) -> Result<BTreeSet<BigUint>> {
    primitive_prime_divisors_with(i, a, &FactorBudget::default())
}

pub fn primitive_prime_divisors_with(
    i: u64,
    a: SignedBase,
    budget: &FactorBudget,
) -> Result<BTreeSet<BigUint>> {
    let phi = cyclotomic_eval(i, a);
    let mut out = BTreeSet::new();
    if phi.is_zero() {
        return Ok(out);
    }
    let base = a.to_bigint();
    for p in FactoredInteger::with_budget(phi, budget)?.primes() {
        if p == BigUint::from(2u32) {
            continue;
        }
        if has_order(&p, &base, i) {
            out.insert(p);
        }
    }
    if two_is_primitive(i, a) {
        out.insert(BigUint::from(2u32));
    }
    Ok(out)
}

/// Whether R_i(a) is nonempty, decided without factoring.
///
/// Primes dividing Φ_i(a) that are not primitive divide `i`; removing them leaves a
/// cofactor that exceeds 1 exactly when a primitive prime exists.
pub fn has_primitive_prime_divisor(i: u64, a: SignedBase) -> bool {
    if two_is_primitive(i, a) {
        return true;
    }
    let base = a.to_bigint();
    let mut rest = cyclotomic_eval(i, a).abs();
    let two = BigInt::from(2);
    while rest.is_even() && !rest.is_zero() {
        rest /= &two;
    }
    for r in divisors(i)
        .into_iter()
        .filter(|&d| d > 2 && crate::primes::is_prime_u64(d))
    {
        let r_big = BigInt::from(r);
        if !rest.is_multiple_of(&r_big) {
            continue;
        }
        if has_order(&BigUint::from(r), &base, i) {
            return true;
        }
        while rest.is_multiple_of(&r_big) {
            rest /= &r_big;
        }
    }
    rest > BigInt::one()
}
