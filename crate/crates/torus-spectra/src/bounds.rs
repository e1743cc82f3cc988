use group_model::{Family, GroupDescriptor};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow};
use prime_graph::IndexGraph;
use serde::{Deserialize, Serialize};
use zsig_arith::{gpd, prime_in_interval, IntervalMode, SignedBase};

use crate::error::{Result, SpectraError};

/// How the witness for a large spectral element was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// A prime `j` with `k_j(±q)` large.
    Prime,
    /// `j = 32`, value `k_64(q) = (q^32 + 1)/(2, q − 1)`.
    PowerOfTwo,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// An element order of L bounded below by a power of q in t(L).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigSpectralElement {
    #[serde(with = "decimal")]
    pub value: BigInt,
    pub witness: u64,
    pub kind: WitnessKind,
    pub t: usize,
}

fn symplectic_type_witness(group: &GroupDescriptor, t: usize) -> Result<(u64, WitnessKind)> {
    let n = group.n() as u64;
    let sym = group.is_symplectic_type();
    let prime = |j| Ok((j, WitnessKind::Prime));
    if n >= 54 {
        let m = if n % 2 == 0 {
            n + 1
        } else if sym {
            n + 2
        } else {
            n
        };
        return prime(prime_in_interval(m, IntervalMode::EightNinths)?);
    }
    match n {
        48..=53 => prime(if t == 41 { 53 } else { 47 }),
        44..=47 => prime(43),
        42 | 43 => prime(41),
        38..=41 => prime(if sym && n == 41 { 41 } else { 37 }),
        33..=37 if t == 29 => prime(37),
        33..=37 => Ok((32, WitnessKind::PowerOfTwo)),
        32 => prime(31),
        29..=31 if sym || n >= 30 => prime(29),
        _ => Err(SpectraError::Range(format!(
            "{} is below the rank floor for large spectral elements",
            group.short_name()
        ))),
    }
}

/// An element order at least `q^{4t/3}` (linear/unitary) or `q^{10t/9}` (otherwise).
pub fn big_spectral_element(group: &GroupDescriptor) -> Result<BigSpectralElement> {
    let t = IndexGraph::new(group)?.t();
    let q = group.q();
    let n = group.n() as u64;
    let qpow = |e: usize| Pow::pow(BigInt::from(q), e);
    let (value, witness, kind, ok) = match group.family() {
        Family::LinearUnitary => {
            if n < 23 {
                return Err(SpectraError::Range(format!(
                    "{} needs n ≥ 23",
                    group.short_name()
                )));
            }
            let j = if n <= 28 {
                23
            } else {
                prime_in_interval(n + 1, IntervalMode::FiveSixths)?
            };
            let v = gpd(j, SignedBase::new(q, group.sign())?);
            let ok = Pow::pow(&v, 3u32) >= qpow(4 * t);
            (v, j, WitnessKind::Prime, ok)
        }
        _ => {
            let (j, kind) = symplectic_type_witness(group, t)?;
            let v = match kind {
                WitnessKind::Prime => {
                    let a = gpd(j, SignedBase::plus(q)?);
                    let b = gpd(j, SignedBase::minus(q)?);
                    a.max(b)
                }
                WitnessKind::PowerOfTwo => gpd(2 * j, SignedBase::plus(q)?),
            };
            let ok = Pow::pow(&v, 9u32) >= qpow(10 * t);
            (v, j, kind, ok)
        }
    };
    if !ok {
        return Err(SpectraError::LemmaViolation(format!(
            "witness {witness} for {} is below the required power of q",
            group.short_name()
        )));
    }
    Ok(BigSpectralElement {
        value,
        witness,
        kind,
        t,
    })
}

/// `⌊q^{m+1}/(q − 1)⌋` with `m` the Lie rank, checked against `q^{2t(L)}`.
pub fn max_spectral_bound(group: &GroupDescriptor) -> Result<BigUint> {
    let t = IndexGraph::new(group)?.t();
    let q = BigUint::from(group.q());
    let bound = Pow::pow(&q, group.lie_rank() + 1) / (&q - BigUint::one());
    if bound > Pow::pow(&q, 2 * t as u32) {
        return Err(SpectraError::LemmaViolation(format!(
            "spectrum bound for {} exceeds q^(2t)",
            group.short_name()
        )));
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_model::Sign;

    #[test]
    fn linear_45() {
        let g = GroupDescriptor::linear(45, 2).unwrap();
        let b = big_spectral_element(&g).unwrap();
        assert_eq!((b.witness, b.t), (41, 23));
        assert_eq!(max_spectral_bound(&g).unwrap(), BigUint::one() << 45);
    }

    #[test]
    fn power_of_two_witness() {
        let g = GroupDescriptor::symplectic(33, 3).unwrap();
        let b = big_spectral_element(&g).unwrap();
        assert_eq!((b.witness, b.kind), (32, WitnessKind::PowerOfTwo));
        assert_eq!(b.value, (BigInt::from(3).pow(32u32) + 1) / 2);
    }

    #[test]
    fn orthogonal_minus_62() {
        let g = GroupDescriptor::even_orthogonal(Sign::Minus, 31, 3).unwrap();
        assert_eq!(big_spectral_element(&g).unwrap().witness, 29);
    }

    #[test]
    fn bounds_for_examples() {
        let s = GroupDescriptor::symplectic(28, 3).unwrap();
        assert_eq!(
            max_spectral_bound(&s).unwrap(),
            BigUint::from(3u32).pow(29u32) / 2u32
        );
        let o = GroupDescriptor::even_orthogonal(Sign::Minus, 30, 2).unwrap();
        assert_eq!(max_spectral_bound(&o).unwrap(), BigUint::one() << 31);
    }
}
