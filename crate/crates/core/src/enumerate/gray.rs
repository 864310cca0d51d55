use crate::bits::BitVector;
use crate::decide::linear::Gf2Basis;

use super::BitEnumeration;

/// Loopless reflected Gray code over `r` bits, driven by focus pointers.
///
/// The first step reports no flip (the all-zero word); each following step
/// reports the single bit to flip, for `2^r` steps in total.
#[derive(Clone, Debug)]
pub struct GrayCounter {
    focus: Vec<usize>,
    bits: usize,
    started: bool,
    done: bool,
}

impl GrayCounter {
    pub fn new(bits: usize) -> Self {
        GrayCounter {
            focus: (0..=bits).collect(),
            bits,
            started: false,
            done: false,
        }
    }
}

impl Iterator for GrayCounter {
    /// `None` for the first word, then `Some(bit)`.
    type Item = Option<usize>;

    fn next(&mut self) -> Option<Option<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(None);
        }
        let j = self.focus[0];
        self.focus[0] = 0;
        if j == self.bits {
            self.done = true;
            return None;
        }
        self.focus[j] = self.focus[j + 1];
        self.focus[j + 1] = j + 1;
        Some(Some(j))
    }
}

/// All GF(2) combinations of a maximal independent subset of the family.
///
/// Consecutive outputs differ by one basis vector; work counts the words
/// touched by the update and by the copy handed to the caller.
pub struct L0Gray {
    basis: Vec<BitVector>,
    current: BitVector,
    gray: GrayCounter,
    empty: bool,
    work: u64,
    last_flip: Option<usize>,
}

impl L0Gray {
    pub fn new(len: usize, members: &[BitVector]) -> Self {
        Self::affine(BitVector::zeros(len), members, members.is_empty())
    }

    /// The coset `offset + span(generators)`.
    pub fn affine(offset: BitVector, generators: &[BitVector], empty: bool) -> Self {
        let echelon = Gf2Basis::new(offset.len(), generators);
        let basis: Vec<BitVector> = echelon.independent().iter().map(|&k| generators[k].clone()).collect();
        L0Gray {
            gray: GrayCounter::new(basis.len()),
            basis,
            current: offset,
            empty,
            work: 0,
            last_flip: None,
        }
    }

    /// Odd sums of members: `s_1 + span{s_1 + s_j}`.
    pub fn odd_sums(len: usize, members: &[BitVector]) -> Self {
        match members.split_first() {
            None => Self::affine(BitVector::zeros(len), &[], true),
            Some((first, rest)) => {
                let shifted: Vec<BitVector> = rest.iter().map(|w| w.xor(first)).collect();
                Self::affine(first.clone(), &shifted, false)
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    /// Basis index added by the most recent step.
    pub fn last_flip(&self) -> Option<usize> {
        self.last_flip
    }
}

impl Iterator for L0Gray {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if self.empty {
            return None;
        }
        let flip = self.gray.next()?;
        self.last_flip = flip;
        if let Some(j) = flip {
            self.current.xor_assign(&self.basis[j]);
            self.work += self.current.word_count() as u64;
        }
        self.work += self.current.word_count() as u64;
        Some(self.current.clone())
    }
}

impl BitEnumeration for L0Gray {
    fn work(&self) -> u64 {
        self.work
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_bits(s.bytes().map(|b| b == b'1'))
    }

    #[test]
    fn gray_flips_one_bit_per_step() {
        let flips: Vec<Option<usize>> = GrayCounter::new(3).collect();
        assert_eq!(flips.len(), 8);
        assert_eq!(flips[0], None);
        let mut word = 0u32;
        let mut seen = std::collections::HashSet::new();
        seen.insert(word);
        for f in &flips[1..] {
            word ^= 1 << f.unwrap();
            assert!(seen.insert(word));
        }
        assert_eq!(GrayCounter::new(0).count(), 1);
    }

    #[test]
    fn spans_of_small_families() {
        let out: Vec<String> = L0Gray::new(3, &[bv("110"), bv("011")]).map(|v| v.to_string()).collect();
        assert_eq!(out, ["000", "110", "101", "011"]);
        let out: Vec<String> = L0Gray::new(3, &[bv("110"), bv("110")]).map(|v| v.to_string()).collect();
        assert_eq!(out, ["000", "110"]);
        assert_eq!(L0Gray::new(3, &[]).count(), 0);
    }

    #[test]
    fn odd_sums_form_a_coset() {
        let mut out: Vec<String> = L0Gray::odd_sums(3, &[bv("110"), bv("011")]).map(|v| v.to_string()).collect();
        out.sort();
        assert_eq!(out, ["011", "110"]);
        let out: Vec<String> = L0Gray::odd_sums(3, &[bv("110"), bv("011"), bv("000")]).map(|v| v.to_string()).collect();
        assert_eq!(out.len(), 4);
        assert_eq!(L0Gray::odd_sums(3, &[]).count(), 0);
    }
}
