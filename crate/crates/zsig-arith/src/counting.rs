use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{pow, One, Signed, Zero};

use crate::base::Sign;
use crate::error::{ArithError, Result};
use crate::factored::FactoredInteger;
use crate::index::{eta, valuation};
use crate::primes::{is_prime_u64, Sieve};

/// `[3a/2]` for even `b`, `[(3a+1)/2]` for odd `b`.
pub fn eta_interval_closed_form(a: u64, b: u64) -> u64 {
    if b % 2 == 0 {
        3 * a / 2
    } else {
        (3 * a + 1) / 2
    }
}

/// |{i : b − a < η(i) ≤ b}| by enumeration, checked against the closed form.
pub fn count_eta_interval(a: u64, b: u64) -> Result<u64> {
    if a < 1 || b <= a {
        return Err(ArithError::Domain(format!(
            "need b > a ≥ 1, got a={a}, b={b}"
        )));
    }
    let count = (1..=2 * b)
        .filter(|&i| {
            let h = eta(i);
            b - a < h && h <= b
        })
        .count() as u64;
    let expected = eta_interval_closed_form(a, b);
    if count != expected {
        return Err(ArithError::LemmaViolation(format!(
            "eta interval a={a} b={b}: counted {count}, closed form {expected}"
        )));
    }
    Ok(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalMode {
    FiveSixths,
    EightNinths,
}

impl IntervalMode {
    /// `(numerator, denominator)` of the lower end as a fraction of `n`.
    pub fn ratio(self) -> (u64, u64) {
        match self {
            IntervalMode::FiveSixths => (5, 6),
            IntervalMode::EightNinths => (8, 9),
        }
    }

    /// Values of `n ≥ 30` for which the interval is known to be prime-free.
    pub fn exceptions(self) -> &'static [u64] {
        match self {
            IntervalMode::FiveSixths => &[],
            IntervalMode::EightNinths => &[35, 36, 37, 53],
        }
    }
}

/// Least prime in the open interval `(ratio·n, n)`, or `None`.
pub fn least_prime_in_interval(sieve: &Sieve, n: u64, mode: IntervalMode) -> Option<u64> {
    let (num, den) = mode.ratio();
    let start = num * n / den + 1;
    (start..n).find(|&p| {
        if (p as usize) <= sieve.limit() {
            sieve.is_prime(p as usize)
        } else {
            is_prime_u64(p)
        }
    })
}

/// A prime in `(5n/6, n)` or `(8n/9, n)`.
pub fn prime_in_interval(n: u64, mode: IntervalMode) -> Result<u64> {
    if n < 30 {
        return Err(ArithError::Domain(format!(
            "interval lemma needs n ≥ 30, got {n}"
        )));
    }
    if mode.exceptions().contains(&n) {
        return Err(ArithError::Domain(format!(
            "n = {n} is an excluded value for {mode:?}"
        )));
    }
    let sieve = Sieve::new(n as usize);
    least_prime_in_interval(&sieve, n, mode).ok_or_else(|| {
        ArithError::LemmaViolation(format!("no prime in the {mode:?} interval below {n}"))
    })
}

/// All `n` in `[30, nmax]` whose interval contains no prime.
pub fn prime_free_intervals(nmax: u64, mode: IntervalMode) -> Vec<u64> {
    let sieve = Sieve::new(nmax as usize);
    (30..=nmax)
        .filter(|&n| least_prime_in_interval(&sieve, n, mode).is_none())
        .collect()
}

/// `((εq)^m − 1)_r` from the closed form `m_r · (εq − 1)_r`.
pub fn lifted_r_part(sign: Sign, q: u64, m: u64, r: u64) -> Result<FactoredInteger> {
    if q < 2 || m < 1 {
        return Err(ArithError::Domain(format!(
            "need q > 1 and m ≥ 1, got q={q}, m={m}"
        )));
    }
    if !is_prime_u64(r) {
        return Err(ArithError::Domain(format!("{r} is not prime")));
    }
    let base_minus_one = (sign.unit() * q as i64 - 1).unsigned_abs();
    let ok = if r == 2 {
        base_minus_one % 4 == 0
    } else {
        base_minus_one % r == 0
    };
    if !ok {
        return Err(ArithError::Domain(format!(
            "{r} does not satisfy the divisibility hypothesis for {}{q} − 1",
            sign
        )));
    }
    let e = valuation(m, r) + valuation(base_minus_one, r);
    Ok(FactoredInteger::from_prime_powers(
        [(BigUint::from(r), e)].into_iter().collect(),
    ))
}

/// `((εq)^m − 1)_r` by direct evaluation.
pub fn direct_r_part(sign: Sign, q: u64, m: u64, r: u64) -> BigInt {
    let x = BigInt::from(sign.unit() * q as i64);
    let mut v = (pow(x, m as usize) - BigInt::one()).abs();
    let r_big = BigInt::from(r);
    let mut part = BigInt::one();
    while !v.is_zero() && v.is_multiple_of(&r_big) {
        v /= &r_big;
        part *= &r_big;
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_interval_examples() {
        assert_eq!(count_eta_interval(2, 10).unwrap(), 3);
        assert_eq!(count_eta_interval(1, 2).unwrap(), 1);
        assert_eq!(count_eta_interval(2, 9).unwrap(), 3);
        assert!(count_eta_interval(3, 3).is_err());
    }

    #[test]
    fn interval_examples() {
        assert_eq!(prime_in_interval(30, IntervalMode::FiveSixths).unwrap(), 29);
        assert_eq!(prime_in_interval(36, IntervalMode::FiveSixths).unwrap(), 31);
        assert_eq!(
            prime_in_interval(54, IntervalMode::EightNinths).unwrap(),
            53
        );
        assert_eq!(prime_in_interval(46, IntervalMode::FiveSixths).unwrap(), 41);
        assert!(prime_in_interval(29, IntervalMode::FiveSixths).is_err());
        assert!(prime_in_interval(53, IntervalMode::EightNinths).is_err());
    }

    #[test]
    fn eight_ninths_exceptions_below_200() {
        assert_eq!(
            prime_free_intervals(200, IntervalMode::EightNinths),
            vec![35, 36, 37, 53]
        );
        assert!(prime_free_intervals(200, IntervalMode::FiveSixths).is_empty());
    }

    #[test]
    fn lifted_r_part_examples() {
        let v = |f: FactoredInteger| f.value().clone();
        assert_eq!(
            v(lifted_r_part(Sign::Plus, 4, 9, 3).unwrap()),
            BigInt::from(27)
        );
        assert_eq!(direct_r_part(Sign::Plus, 4, 9, 3), BigInt::from(27));
        assert_eq!(
            v(lifted_r_part(Sign::Plus, 5, 1, 2).unwrap()),
            BigInt::from(4)
        );
        assert_eq!(
            v(lifted_r_part(Sign::Minus, 4, 3, 5).unwrap()),
            BigInt::from(5)
        );
        assert_eq!(direct_r_part(Sign::Minus, 4, 3, 5), BigInt::from(5));
        assert!(lifted_r_part(Sign::Plus, 3, 2, 2).is_err());
        assert!(lifted_r_part(Sign::Plus, 4, 2, 5).is_err());
    }
}
