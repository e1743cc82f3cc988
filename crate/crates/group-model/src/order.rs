use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use zsig_arith::{
    cyclotomic_eval, divisors, factorize, factorize_u64, FactorBudget, FactoredInteger, Sign,
    SignedBase,
};

use crate::descriptor::{Family, GroupDescriptor};
use crate::error::Result;

type Factors = BTreeMap<BigUint, u32>;

fn add(into: &mut Factors, from: &Factors) {
    for (p, e) in from {
        *into.entry(p.clone()).or_insert(0) += e;
    }
}

struct CycloFactors {
    base: SignedBase,
    budget: FactorBudget,
    cache: BTreeMap<u64, Factors>,
}

impl CycloFactors {
    fn new(base: SignedBase, budget: FactorBudget) -> Self {
        CycloFactors {
            base,
            budget,
            cache: BTreeMap::new(),
        }
    }

    fn phi(&mut self, d: u64) -> Result<Factors> {
        if let Some(f) = self.cache.get(&d) {
            return Ok(f.clone());
        }
        let v = cyclotomic_eval(d, self.base);
        let f = factorize(v.magnitude(), &self.budget)?;
        self.cache.insert(d, f.clone());
        Ok(f)
    }

    /// Factors of `|x^i − 1|`.
    fn power_minus_one(&mut self, i: u64) -> Result<Factors> {
        let mut out = Factors::new();
        for d in divisors(i) {
            let f = self.phi(d)?;
            add(&mut out, &f);
        }
        Ok(out)
    }

    /// Factors of `x^i + 1`.
    fn power_plus_one(&mut self, i: u64) -> Result<Factors> {
        let mut out = Factors::new();
        for d in divisors(2 * i) {
            if i % d != 0 {
                let f = self.phi(d)?;
                add(&mut out, &f);
            }
        }
        Ok(out)
    }
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// |L| from the standard order formulas, with the center quotient removed.
pub fn order_of(group: &GroupDescriptor) -> Result<FactoredInteger> {
    order_of_with(group, &FactorBudget::default())
}

pub fn order_of_with(group: &GroupDescriptor, budget: &FactorBudget) -> Result<FactoredInteger> {
    let n = group.n() as u64;
    let q = group.q();
    let mut plus = CycloFactors::new(SignedBase::plus(q)?, *budget);
    let mut factors = Factors::new();
    let (p_power, d) = match group.family() {
        Family::LinearUnitary => {
            let base = SignedBase::new(q, group.sign())?;
            let mut tw = CycloFactors::new(base, *budget);
            for i in 2..=n {
                let f = tw.power_minus_one(i)?;
                add(&mut factors, &f);
            }
            let shifted = (q as i64 - group.sign().unit()).unsigned_abs();
            (n * (n - 1) / 2, n.gcd(&shifted))
        }
        Family::Symplectic | Family::OddOrthogonal => {
            for i in 1..=n {
                let f = plus.power_minus_one(2 * i)?;
                add(&mut factors, &f);
            }
            (n * n, 2u64.gcd(&(q - 1)))
        }
        Family::EvenOrthogonal => {
            for i in 1..n {
                let f = plus.power_minus_one(2 * i)?;
                add(&mut factors, &f);
            }
            let top = match group.sign() {
                Sign::Plus => plus.power_minus_one(n)?,
                Sign::Minus => plus.power_plus_one(n)?,
            };
            add(&mut factors, &top);
            let residue = (pow_mod(q, n, 4) + 4 - group.sign().unit().rem_euclid(4) as u64) % 4;
            let d = if residue == 0 { 4 } else { residue.gcd(&4) };
            (n * (n - 1), d)
        }
    };
    *factors.entry(BigUint::from(group.p())).or_insert(0) += p_power as u32 * group.f();
    for (r, e) in factorize_u64(d) {
        let slot = factors
            .get_mut(&BigUint::from(r))
            .expect("center order divides the group order");
        *slot -= e;
    }
    Ok(FactoredInteger::from_prime_powers(factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn order(g: GroupDescriptor) -> BigInt {
        order_of(&g).unwrap().value().clone()
    }

    #[test]
    fn small_orders() {
        assert_eq!(
            order(GroupDescriptor::linear(2, 4).unwrap()),
            BigInt::from(60)
        );
        assert_eq!(
            order(GroupDescriptor::symplectic(2, 3).unwrap()),
            BigInt::from(25920)
        );
        assert_eq!(
            order(GroupDescriptor::unitary(3, 3).unwrap()),
            BigInt::from(6048)
        );
        assert_eq!(
            order(GroupDescriptor::linear(3, 2).unwrap()),
            BigInt::from(168)
        );
        assert_eq!(
            order(GroupDescriptor::linear(2, 7).unwrap()),
            BigInt::from(168)
        );
        assert_eq!(
            order(GroupDescriptor::symplectic(3, 2).unwrap()),
            BigInt::from(1451520)
        );
        assert_eq!(
            order(GroupDescriptor::even_orthogonal(Sign::Plus, 4, 2).unwrap()),
            BigInt::from(174182400)
        );
        assert_eq!(
            order(GroupDescriptor::even_orthogonal(Sign::Minus, 4, 2).unwrap()),
            BigInt::from(197406720)
        );
        assert_eq!(
            order(GroupDescriptor::unitary(4, 2).unwrap()),
            BigInt::from(25920)
        );
    }

    #[test]
    fn odd_orthogonal_matches_symplectic_order() {
        for q in [3u64, 5, 7] {
            for n in 2..=6 {
                assert_eq!(
                    order(GroupDescriptor::symplectic(n, q).unwrap()),
                    order(GroupDescriptor::odd_orthogonal(n, q).unwrap())
                );
            }
        }
    }
}
