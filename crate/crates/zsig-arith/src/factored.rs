use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_traits::{One, Signed, Zero};

use crate::error::{ArithError, Result};
use crate::primes::{factorize, is_probable_prime, FactorBudget};

/// A nonzero integer together with the factorization of its absolute value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: BigInt,
    factors: BTreeMap<BigUint, u32>,
}

impl FactoredInteger {
    pub fn new(value: BigInt) -> Result<Self> {
        Self::with_budget(value, &FactorBudget::default())
    }

    pub fn with_budget(value: BigInt, budget: &FactorBudget) -> Result<Self> {
        if value.is_zero() {
            return Err(ArithError::Domain("zero has no factorization".into()));
        }
        let factors = factorize(value.magnitude(), budget)?;
        Ok(FactoredInteger { value, factors })
    }

    pub fn from_u64(value: u64) -> Result<Self> {
        Self::new(BigInt::from(value))
    }

    pub fn one() -> Self {
        FactoredInteger {
            value: BigInt::one(),
            factors: BTreeMap::new(),
        }
    }

    /// Builds from a claimed factorization; rejects non-primes and mismatched products.
    pub fn from_parts(value: BigInt, factors: BTreeMap<BigUint, u32>) -> Result<Self> {
        if value.is_zero() {
            return Err(ArithError::Domain("zero has no factorization".into()));
        }
        let mut product = BigUint::one();
        for (p, &e) in &factors {
            if e == 0 || !is_probable_prime(p) {
                return Err(ArithError::Domain(format!(
                    "{p}^{e} is not a prime power factor"
                )));
            }
            product *= p.pow(e);
        }
        if &product != value.magnitude() {
            return Err(ArithError::Domain(format!(
                "factors multiply to {product}, not |{value}|"
            )));
        }
        Ok(FactoredInteger { value, factors })
    }

    /// A positive product of prime powers.
    pub fn from_prime_powers(factors: BTreeMap<BigUint, u32>) -> Self {
        let factors: BTreeMap<_, _> = factors.into_iter().filter(|(_, e)| *e > 0).collect();
        let value = factors
            .iter()
            .fold(BigUint::one(), |acc, (p, &e)| acc * p.pow(e));
        FactoredInteger {
            value: BigInt::from_biguint(BigSign::Plus, value),
            factors,
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn magnitude(&self) -> &BigUint {
        self.value.magnitude()
    }

    pub fn factors(&self) -> &BTreeMap<BigUint, u32> {
        &self.factors
    }

    pub fn primes(&self) -> BTreeSet<BigUint> {
        self.factors.keys().cloned().collect()
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut factors = self.factors.clone();
        for (p, &e) in &other.factors {
            *factors.entry(p.clone()).or_insert(0) += e;
        }
        FactoredInteger {
            value: &self.value * &other.value,
            factors,
        }
    }

    /// Exact quotient; fails unless `other` divides `self`.
    pub fn div(&self, other: &FactoredInteger) -> Result<FactoredInteger> {
        let mut factors = self.factors.clone();
        for (p, &e) in &other.factors {
            let have = factors.get(p).copied().unwrap_or(0);
            if have < e {
                return Err(ArithError::Domain(format!(
                    "{} does not divide {}",
                    other, self
                )));
            }
            if have == e {
                factors.remove(p);
            } else {
                factors.insert(p.clone(), have - e);
            }
        }
        Ok(FactoredInteger {
            value: &self.value / &other.value,
            factors,
        })
    }

    /// The largest divisor supported on `primes` (always positive).
    pub fn pi_part(&self, primes: &BTreeSet<BigUint>) -> FactoredInteger {
        Self::from_prime_powers(
            self.factors
                .iter()
                .filter(|(p, _)| primes.contains(*p))
                .map(|(p, &e)| (p.clone(), e))
                .collect(),
        )
    }

    /// The largest divisor coprime to every prime in `primes`.
    pub fn pi_prime_part(&self, primes: &BTreeSet<BigUint>) -> FactoredInteger {
        Self::from_prime_powers(
            self.factors
                .iter()
                .filter(|(p, _)| !primes.contains(*p))
                .map(|(p, &e)| (p.clone(), e))
                .collect(),
        )
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if !self.factors.is_empty() {
            let parts: Vec<String> = self
                .factors
                .iter()
                .map(|(p, e)| {
                    if *e == 1 {
                        p.to_string()
                    } else {
                        format!("{p}^{e}")
                    }
                })
                .collect();
            write!(f, " = {}", parts.join("·"))?;
        }
        Ok(())
    }
}

/// `n_π` for an integer and a prime set.
pub fn pi_part(n: &FactoredInteger, primes: &BTreeSet<BigUint>) -> FactoredInteger {
    n.pi_part(primes)
}
