//! Pair patterns: the majority clone `D2 = <maj>`.

use crate::bits::BitVector;

/// For every pair `i < j`, the set of patterns `(w_i, w_j)` realised by the
/// family, as a 4-bit mask with bit `2a + b` for pattern `(a, b)`. Single
/// columns are kept as 2-bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTable {
    len: usize,
    singles: Vec<u8>,
    pairs: Vec<u8>,
}

#[inline]
fn tri(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl PairTable {
    pub fn new(len: usize, members: &[BitVector]) -> Self {
        let mut singles = vec![0u8; len];
        let mut pairs = vec![0u8; len * len.saturating_sub(1) / 2];
        for w in members {
            let bits: Vec<usize> = (0..len).map(|i| w.get(i) as usize).collect();
            for j in 0..len {
                singles[j] |= 1 << bits[j];
                for i in 0..j {
                    pairs[tri(i, j)] |= 1 << (2 * bits[i] + bits[j]);
                }
            }
        }
        PairTable { len, singles, pairs }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// Number of stored pair entries, `n(n-1)/2`.
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    #[inline]
    pub fn single(&self, j: usize) -> u8 {
        self.singles[j]
    }

    /// Patterns at `(i, j)` for `i < j`.
    #[inline]
    pub fn pair(&self, i: usize, j: usize) -> u8 {
        self.pairs[tri(i, j)]
    }

    #[inline]
    pub fn has(&self, i: usize, j: usize, a: bool, b: bool) -> bool {
        self.pair(i, j) >> (2 * a as u8 + b as u8) & 1 == 1
    }

    /// Every single value and every pair pattern of `v` occurs in the family.
    pub fn contains(&self, v: &BitVector) -> bool {
        debug_assert_eq!(v.len(), self.len);
        (0..self.len).all(|j| {
            let b = v.get(j);
            self.singles[j] >> b as u8 & 1 == 1 && (0..j).all(|i| self.has(i, j, v.get(i), b))
        })
    }
}
