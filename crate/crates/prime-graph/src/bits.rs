const WORDS: usize = 4;

/// Fixed-width vertex set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bits([u64; WORDS]);

impl Bits {
    pub const CAPACITY: usize = 64 * WORDS;

    pub fn empty() -> Bits {
        Bits([0; WORDS])
    }

    pub fn full(len: usize) -> Bits {
        assert!(len <= Self::CAPACITY);
        let mut b = Bits::empty();
        for w in 0..WORDS {
            let lo = w * 64;
            if len >= lo + 64 {
                b.0[w] = u64::MAX;
            } else if len > lo {
                b.0[w] = (1u64 << (len - lo)) - 1;
            }
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn and(self, other: Bits) -> Bits {
        let mut out = self;
        for w in 0..WORDS {
            out.0[w] &= other.0[w];
        }
        out
    }

    pub fn and_not(self, other: Bits) -> Bits {
        let mut out = self;
        for w in 0..WORDS {
            out.0[w] &= !other.0[w];
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut cur = *self;
        std::iter::from_fn(move || {
            let v = cur.first()?;
            cur.remove(v);
            Some(v)
        })
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut b = Bits::empty();
        for i in iter {
            b.insert(i);
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut b = Bits::full(130);
        assert_eq!(b.len(), 130);
        assert!(b.contains(129) && !b.contains(130));
        b.remove(0);
        assert_eq!(b.first(), Some(1));
        let c: Bits = [1usize, 64, 200].into_iter().collect();
        assert_eq!(b.and(c).iter().collect::<Vec<_>>(), vec![1, 64]);
        assert_eq!(c.and_not(b).iter().collect::<Vec<_>>(), vec![200]);
    }
}
