use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{ArithError, Result};

/// Trial division runs through every prime below this bound.
pub const TRIAL_LIMIT: u32 = 1_000_000;

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const MR_BASES_BIG: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Sieve of Eratosthenes up to a fixed bound.
#[derive(Debug, Clone)]
pub struct Sieve {
    composite: Vec<bool>,
}

impl Sieve {
    pub fn new(limit: usize) -> Self {
        let mut composite = vec![false; limit + 1];
        composite[0] = true;
        if limit >= 1 {
            composite[1] = true;
        }
        let mut i = 2;
        while i * i <= limit {
            if !composite[i] {
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
            i += 1;
        }
        Sieve { composite }
    }

    pub fn limit(&self) -> usize {
        self.composite.len() - 1
    }

    pub fn is_prime(&self, n: usize) -> bool {
        n <= self.limit() && !self.composite[n]
    }

    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        (2..=self.limit()).filter(|&i| !self.composite[i])
    }
}

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        Sieve::new(TRIAL_LIMIT as usize)
            .primes()
            .map(|p| p as u32)
            .collect()
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for all 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller–Rabin with the first twenty prime bases; exact below 2^64.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in small_primes().iter().take(200) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_BASES_BIG {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Iteration allowance for Pollard–Brent splitting of one composite cofactor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorBudget {
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            rho_iterations: 20_000_000,
        }
    }
}

fn brent_u64(n: u64, budget: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    let mut spent = 0u64;
    for c in 1..64u64 {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, m) = (2u64, 128u64);
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
            spent += r;
            if spent > budget {
                return None;
            }
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    None
}

fn brent_big(n: &BigUint, budget: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let mut spent = 0u64;
    for c in 1..64u64 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let m = 256u64;
        let mut y = BigUint::from(2u32);
        let (mut g, mut r, mut q) = (one.clone(), 1u64, one.clone());
        let (mut x, mut ys) = (BigUint::zero(), BigUint::zero());
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
            spent += r;
            if spent > budget {
                return None;
            }
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

fn split(n: &BigUint, budget: &FactorBudget, out: &mut BTreeMap<BigUint, u32>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if is_probable_prime(n) {
        *out.entry(n.clone()).or_insert(0) += 1;
        return Ok(());
    }
    let divisor = match n.to_u64() {
        Some(small) => brent_u64(small, budget.rho_iterations).map(BigUint::from),
        None => brent_big(n, budget.rho_iterations),
    }
    .ok_or_else(|| ArithError::FactorBudget(n.to_string()))?;
    split(&divisor, budget, out)?;
    split(&(n / &divisor), budget, out)
}

/// Full factorization of a positive integer, verified by re-multiplication.
pub fn factorize(n: &BigUint, budget: &FactorBudget) -> Result<BTreeMap<BigUint, u32>> {
    if n.is_zero() {
        return Err(ArithError::Domain("cannot factor zero".into()));
    }
    let mut rest = n.clone();
    let mut out = BTreeMap::new();
    for &p in small_primes() {
        if let Some(small) = rest.to_u64() {
            if (p as u64) * (p as u64) > small {
                break;
            }
        }
        if !(&rest % p).is_zero() {
            continue;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        out.insert(BigUint::from(p), e);
    }
    let trial_square = BigUint::from(TRIAL_LIMIT) * BigUint::from(TRIAL_LIMIT);
    if !rest.is_one() {
        if rest < trial_square {
            *out.entry(rest.clone()).or_insert(0) += 1;
        } else {
            let mut big = BTreeMap::new();
            split(&rest, budget, &mut big)?;
            for (p, e) in big {
                *out.entry(p).or_insert(0) += e;
            }
        }
    }
    let product = out
        .iter()
        .fold(BigUint::one(), |acc, (p, &e)| acc * p.pow(e));
    assert_eq!(&product, n, "factorization does not multiply back");
    Ok(out)
}

pub fn factorize_u64(n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        while rest % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            rest /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        *out.entry(rest).or_insert(0) += 1;
    }
    out
}
