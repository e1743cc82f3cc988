use std::fmt;

use num_bigint::BigInt;

use crate::error::{ArithError, Result};

/// The sign ε attached to a base or to a group family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    /// `+1` or `-1`.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An integer `±m` with `m > 1`, the base of all cyclotomic arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedBase {
    magnitude: u64,
    sign: Sign,
}

impl SignedBase {
    pub fn new(magnitude: u64, sign: Sign) -> Result<Self> {
        if magnitude < 2 || magnitude > i64::MAX as u64 {
            return Err(ArithError::Domain(format!(
                "base magnitude must exceed 1, got {magnitude}"
            )));
        }
        Ok(SignedBase { magnitude, sign })
    }

    pub fn from_i64(value: i64) -> Result<Self> {
        let sign = if value < 0 { Sign::Minus } else { Sign::Plus };
        Self::new(value.unsigned_abs(), sign)
    }

    pub fn plus(magnitude: u64) -> Result<Self> {
        Self::new(magnitude, Sign::Plus)
    }

    pub fn minus(magnitude: u64) -> Result<Self> {
        Self::new(magnitude, Sign::Minus)
    }

    pub fn magnitude(self) -> u64 {
        self.magnitude
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn value(self) -> i64 {
        self.sign.unit() * self.magnitude as i64
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.value())
    }

    pub fn negate(self) -> Self {
        SignedBase {
            magnitude: self.magnitude,
            sign: self.sign.flip(),
        }
    }

    /// `a^e` as a signed base; `None` if the magnitude overflows.
    pub fn pow(self, e: u32) -> Option<Self> {
        let magnitude = self.magnitude.checked_pow(e)?;
        if magnitude > i64::MAX as u64 {
            return None;
        }
        let sign = if self.sign == Sign::Minus && e % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        };
        Some(SignedBase { magnitude, sign })
    }
}

impl fmt::Display for SignedBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.sign, self.magnitude)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_magnitudes() {
        assert!(SignedBase::plus(1).is_err());
        assert!(SignedBase::from_i64(-1).is_err());
        assert!(SignedBase::from_i64(0).is_err());
    }

    #[test]
    fn sign_round_trip() {
        let a = SignedBase::from_i64(-7).unwrap();
        assert_eq!(a.value(), -7);
        assert_eq!(a.negate().value(), 7);
        assert_eq!(a.pow(3).unwrap().value(), -343);
        assert_eq!(a.pow(2).unwrap().value(), 49);
        assert_eq!(a.to_string(), "-7");
    }
}
