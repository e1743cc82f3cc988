use crate::base::Sign;
use crate::primes::factorize_u64;

/// η(k): `k` for odd `k`, `k/2` for even `k`.
pub fn eta(k: u64) -> u64 {
    assert!(k >= 1, "eta is defined on positive integers");
    if k % 2 == 1 {
        k
    } else {
        k / 2
    }
}

/// ν(k): `k` if `4 | k`, `k/2` if `k ≡ 2 (mod 4)`, `2k` if `k` is odd.
pub fn nu(k: u64) -> u64 {
    assert!(k >= 1, "nu is defined on positive integers");
    match k % 4 {
        0 => k,
        2 => k / 2,
        _ => 2 * k,
    }
}

/// ν_ε(k): identity for ε = +, ν for ε = −.
pub fn nu_eps(k: u64, sign: Sign) -> u64 {
    match sign {
        Sign::Plus => k,
        Sign::Minus => nu(k),
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn largest_prime_factor(n: u64) -> Option<u64> {
    factorize_u64(n).into_keys().next_back()
}

/// Exponent of the prime `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    assert!(n > 0 && p > 1);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// `n` with every factor `p` removed.
pub fn strip_prime(mut n: u64, p: u64) -> u64 {
    while n % p == 0 {
        n /= p;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_values() {
        assert_eq!(eta(9), 9);
        assert_eq!(eta(10), 5);
        assert_eq!(eta(4), 2);
    }

    #[test]
    fn nu_values() {
        assert_eq!(nu(4), 4);
        assert_eq!(nu(6), 3);
        assert_eq!(nu(3), 6);
        assert_eq!(nu_eps(3, Sign::Plus), 3);
    }

    #[test]
    fn nu_is_an_involution() {
        for k in 1..500 {
            assert_eq!(nu(nu(k)), k);
        }
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(totient(20), 8);
        assert_eq!(totient(1), 1);
        assert_eq!(largest_prime_factor(84), Some(7));
        assert_eq!(largest_prime_factor(1), None);
        assert_eq!(valuation(48, 2), 4);
        assert_eq!(strip_prime(48, 2), 3);
    }
}
