use std::fmt;

use serde::{Deserialize, Serialize};
use zsig_arith::{factorize_u64, is_prime_u64, Sign};

use crate::error::{ModelError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    LinearUnitary,
    Symplectic,
    OddOrthogonal,
    EvenOrthogonal,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::LinearUnitary,
        Family::Symplectic,
        Family::OddOrthogonal,
        Family::EvenOrthogonal,
    ];

    /// Whether the sign ε is meaningful for this family.
    pub fn is_signed(self) -> bool {
        matches!(self, Family::LinearUnitary | Family::EvenOrthogonal)
    }

    pub fn min_rank(self) -> u32 {
        match self {
            Family::EvenOrthogonal => 4,
            _ => 2,
        }
    }
}

/// A finite simple classical group `L` over the field of order `q = p^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    family: Family,
    #[serde(with = "sign_serde")]
    sign: Sign,
    n: u32,
    q: u64,
    p: u64,
    f: u32,
}

mod sign_serde {
    use serde::{Deserialize, Deserializer, Serializer};
    use zsig_arith::Sign;

    pub fn serialize<S: Serializer>(sign: &Sign, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&sign.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Sign, D::Error> {
        match String::deserialize(d)?.as_str() {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!("bad sign {other}"))),
        }
    }
}

/// Splits `q` as `p^f`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize_u64(q);
    if f.len() != 1 {
        return None;
    }
    let (p, e) = f.into_iter().next()?;
    debug_assert!(is_prime_u64(p));
    Some((p, e))
}

impl GroupDescriptor {
    pub fn new(family: Family, sign: Sign, n: u32, q: u64) -> Result<Self> {
        let (p, f) = prime_power(q)
            .ok_or_else(|| ModelError::Descriptor(format!("q = {q} is not a prime power")))?;
        if !family.is_signed() && sign == Sign::Minus {
            return Err(ModelError::Descriptor(format!("{family:?} takes no sign")));
        }
        if n < family.min_rank() {
            return Err(ModelError::Descriptor(format!(
                "{family:?} needs n ≥ {}, got {n}",
                family.min_rank()
            )));
        }
        let not_simple = match family {
            Family::LinearUnitary => {
                (n == 2 && q <= 3) || (n == 3 && q == 2 && sign == Sign::Minus)
            }
            Family::Symplectic | Family::OddOrthogonal => n == 2 && q == 2,
            Family::EvenOrthogonal => false,
        };
        if not_simple {
            return Err(ModelError::Descriptor(format!(
                "{family:?} n={n} q={q} is not simple"
            )));
        }
        Ok(GroupDescriptor {
            family,
            sign,
            n,
            q,
            p,
            f,
        })
    }

    pub fn linear(n: u32, q: u64) -> Result<Self> {
        Self::new(Family::LinearUnitary, Sign::Plus, n, q)
    }

    pub fn unitary(n: u32, q: u64) -> Result<Self> {
        Self::new(Family::LinearUnitary, Sign::Minus, n, q)
    }

    pub fn linear_unitary(sign: Sign, n: u32, q: u64) -> Result<Self> {
        Self::new(Family::LinearUnitary, sign, n, q)
    }

    pub fn symplectic(n: u32, q: u64) -> Result<Self> {
        Self::new(Family::Symplectic, Sign::Plus, n, q)
    }

    pub fn odd_orthogonal(n: u32, q: u64) -> Result<Self> {
        Self::new(Family::OddOrthogonal, Sign::Plus, n, q)
    }

    pub fn even_orthogonal(sign: Sign, n: u32, q: u64) -> Result<Self> {
        Self::new(Family::EvenOrthogonal, sign, n, q)
    }

    /// The same type and rank over another field.
    pub fn with_q(&self, q: u64) -> Result<Self> {
        Self::new(self.family, self.sign, self.n, q)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// `prk(L)`: dimension for linear/unitary groups, Lie rank otherwise.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn prk(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    /// Dimension of the natural module.
    pub fn dim(&self) -> u32 {
        match self.family {
            Family::LinearUnitary => self.n,
            Family::Symplectic | Family::EvenOrthogonal => 2 * self.n,
            Family::OddOrthogonal => 2 * self.n + 1,
        }
    }

    /// Rank of the root system.
    pub fn lie_rank(&self) -> u32 {
        match self.family {
            Family::LinearUnitary => self.n - 1,
            _ => self.n,
        }
    }

    pub fn is_linear_unitary(&self) -> bool {
        self.family == Family::LinearUnitary
    }

    pub fn is_even_orthogonal(&self) -> bool {
        self.family == Family::EvenOrthogonal
    }

    /// Symplectic or odd-dimensional orthogonal: the two families share all index data.
    pub fn is_symplectic_type(&self) -> bool {
        matches!(self.family, Family::Symplectic | Family::OddOrthogonal)
    }

    /// Whether the rank meets the lower bound of the main recognition theorem.
    pub fn in_theorem_range(&self) -> bool {
        match self.family {
            Family::LinearUnitary => self.n >= 45,
            Family::Symplectic | Family::OddOrthogonal => self.n >= 28,
            Family::EvenOrthogonal => match self.sign {
                Sign::Plus => self.n >= 31,
                Sign::Minus => self.n >= 30,
            },
        }
    }

    /// Rank below which the theorem makes no claim.
    pub fn theorem_floor(&self) -> u32 {
        match self.family {
            Family::LinearUnitary => 45,
            Family::Symplectic | Family::OddOrthogonal => 28,
            Family::EvenOrthogonal => match self.sign {
                Sign::Plus => 31,
                Sign::Minus => 30,
            },
        }
    }

    /// Conventional name such as `L45+(9)`, `S56(3)`, `O57(5)`, `O60-(4)`.
    pub fn short_name(&self) -> String {
        match self.family {
            Family::LinearUnitary => {
                let letter = if self.sign == Sign::Plus { 'L' } else { 'U' };
                format!("{letter}{}({})", self.n, self.q)
            }
            Family::Symplectic => format!("S{}({})", self.dim(), self.q),
            Family::OddOrthogonal => format!("O{}({})", self.dim(), self.q),
            Family::EvenOrthogonal => format!("O{}{}({})", self.dim(), self.sign, self.q),
        }
    }
}

/// Descriptor text: `L45+(q=9)`, `S(n=28,q=3)`, `O(n=28,q=5)`, `O-(n=30,q=4)`.
impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::LinearUnitary => write!(f, "L{}{}(q={})", self.n, self.sign, self.q),
            Family::Symplectic => write!(f, "S(n={},q={})", self.n, self.q),
            Family::OddOrthogonal => write!(f, "O(n={},q={})", self.n, self.q),
            Family::EvenOrthogonal => write!(f, "O{}(n={},q={})", self.sign, self.n, self.q),
        }
    }
}
