//! Word-packed boolean vectors.
//!
//! All boolean algorithms work on [`BitVector`], one bit per coordinate, so
//! that meets, joins, sums and inclusion tests cost one operation per 64
//! coordinates. Bits beyond `len` in the last word are always zero.

use std::fmt;

use crate::vector::Vector;

pub const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

pub fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVector {
            len,
            words: vec![!0; words_for(len)],
        };
        v.clear_tail();
        v
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if b {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        BitVector { len, words }
    }

    /// Packs a boolean [`Vector`]; callers guarantee the domain is 2.
    pub fn from_vector(v: &Vector) -> Self {
        debug_assert_eq!(v.domain(), 2);
        Self::from_bits(v.digits().iter().map(|&d| d == 1))
    }

    pub fn to_vector(&self) -> Vector {
        Vector::from_digits_unchecked((0..self.len).map(|i| self.get(i) as u8).collect(), 2)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    fn clear_tail(&mut self) {
        let r = self.len % WORD_BITS;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    pub fn and_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        let mut r = self.clone();
        r.and_assign(other);
        r
    }

    pub fn or(&self, other: &BitVector) -> BitVector {
        let mut r = self.clone();
        r.or_assign(other);
        r
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut r = self.clone();
        r.xor_assign(other);
        r
    }

    /// Bits set in `self` but not in `other`.
    pub fn and_not(&self, other: &BitVector) -> BitVector {
        let mut r = self.clone();
        for (a, b) in r.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        r
    }

    pub fn not(&self) -> BitVector {
        let mut r = BitVector {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        r.clear_tail();
        r
    }

    /// `1(self) ⊆ 1(other)`.
    pub fn is_subset(&self, other: &BitVector) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Whether `self` and `other` share a set bit.
    pub fn intersects(&self, other: &BitVector) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD_BITS + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn iter_zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| !self.get(i))
    }

    /// Keeps the first `l` coordinates.
    pub fn prefix(&self, l: usize) -> BitVector {
        debug_assert!(l <= self.len);
        let mut r = BitVector {
            len: l,
            words: self.words[..words_for(l)].to_vec(),
        };
        r.clear_tail();
        r
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_bits(s.bytes().map(|b| b == b'1'))
    }

    #[test]
    fn boolean_algebra_on_words() {
        let a = bv("1101");
        let b = bv("1010");
        assert_eq!(a.and(&b), bv("1000"));
        assert_eq!(a.or(&b), bv("1111"));
        assert_eq!(a.xor(&b), bv("0111"));
        assert_eq!(a.not(), bv("0010"));
        assert_eq!(a.and_not(&b), bv("0101"));
        assert!(bv("1000").is_subset(&a));
        assert!(!b.is_subset(&a));
    }

    #[test]
    fn tail_stays_clear_across_words() {
        let v = BitVector::ones(70);
        assert_eq!(v.count_ones(), 70);
        assert_eq!(v.not().count_ones(), 0);
        assert_eq!(BitVector::zeros(70).not(), v);
        let ones: Vec<_> = bv("0100000000000000000000000000000000000000000000000000000000000000001")
            .iter_ones()
            .collect();
        assert_eq!(ones, vec![1, 66]);
    }

    #[test]
    fn prefix_truncates() {
        let v = BitVector::ones(130);
        assert_eq!(v.prefix(65).count_ones(), 65);
        assert_eq!(v.prefix(0).len(), 0);
    }
}
