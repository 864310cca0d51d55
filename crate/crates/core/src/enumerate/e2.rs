use crate::bits::BitVector;

use super::BitEnumeration;

/// Intersection closure (`E2 = <∧>`) by backtracking over the prefix tree.
///
/// A member is compatible with a prefix `p` when `1(p) ⊆ 1(w)`; `p` extends
/// iff some member is compatible and every zero of `p` is a zero of some
/// compatible member. Compatible sets are kept as bit masks over the members,
/// one per depth, so setting a coordinate costs `⌈m/64⌉` word operations.
///
/// Setting `p_l = 0` keeps the compatible set and only needs a member with
/// a 0 at `l`. Setting `p_l = 1` after the 0-branch succeeded is tested by
/// intersecting the surviving members and checking that the meet is still 0
/// on every zero of `p`, at most `(m + 1)⌈n/64⌉` word operations. When the
/// 0-branch failed the 1-branch is known to extend and needs no test.
pub struct E2Fast {
    len: usize,
    members: Vec<BitVector>,
    /// Members with a 1 (resp. 0) at each coordinate, as masks over members.
    one_masks: Vec<BitVector>,
    zero_masks: Vec<BitVector>,
    /// `compatible[d]` is the compatible set of the prefix of length `d`.
    compatible: Vec<BitVector>,
    prefix: BitVector,
    /// Zeros of the current prefix.
    prefix_zeros: BitVector,
    frames: Vec<Frame>,
    started: bool,
    work: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Frame {
    TryZero,
    /// Whether the 0-branch was taken, which makes the 1-branch need a test.
    TryOne { zero_taken: bool },
    Exhausted,
}

impl E2Fast {
    pub fn new(len: usize, members: &[BitVector]) -> Self {
        let m = members.len();
        let mut one_masks = vec![BitVector::zeros(m); len];
        let mut zero_masks = vec![BitVector::zeros(m); len];
        for (k, w) in members.iter().enumerate() {
            for i in 0..len {
                if w.get(i) {
                    one_masks[i].set(k, true);
                } else {
                    zero_masks[i].set(k, true);
                }
            }
        }
        E2Fast {
            len,
            members: members.to_vec(),
            one_masks,
            zero_masks,
            compatible: vec![BitVector::zeros(m); len + 1],
            prefix: BitVector::zeros(len),
            prefix_zeros: BitVector::zeros(len),
            frames: Vec::with_capacity(len),
            started: false,
            work: 0,
        }
    }

    pub fn members(&self) -> &[BitVector] {
        &self.members
    }

    fn mask_words(&self) -> u64 {
        self.compatible[0].word_count() as u64
    }

    /// Whether the prefix of length `l` extends with `p_l = 1`, given that
    /// `candidates` are its compatible members with a 1 at `l`.
    fn one_extends(&mut self, candidates: &BitVector) -> bool {
        let mut meet: Option<BitVector> = None;
        for k in candidates.iter_ones() {
            let w = &self.members[k];
            self.work += w.word_count() as u64;
            match meet.as_mut() {
                None => meet = Some(w.clone()),
                Some(acc) => acc.and_assign(w),
            }
        }
        let Some(meet) = meet else { return false };
        self.work += meet.word_count() as u64;
        !meet.intersects(&self.prefix_zeros)
    }
}

impl Iterator for E2Fast {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if !self.started {
            self.started = true;
            if self.members.is_empty() {
                return None;
            }
            self.compatible[0] = BitVector::ones(self.members.len());
            if self.len == 0 {
                return Some(self.prefix.clone());
            }
            self.frames.push(Frame::TryZero);
        }
        loop {
            let l = self.frames.len().checked_sub(1)?;
            self.work += 1;
            match self.frames[l] {
                Frame::TryZero => {
                    self.work += self.mask_words();
                    let zero_taken = self.compatible[l].intersects(&self.zero_masks[l]);
                    self.frames[l] = Frame::TryOne { zero_taken };
                    if zero_taken {
                        self.work += self.mask_words();
                        let (head, tail) = self.compatible.split_at_mut(l + 1);
                        tail[0].clone_from(&head[l]);
                        self.prefix_zeros.set(l, true);
                        if let Some(v) = self.descend(l) {
                            return Some(v);
                        }
                    }
                }
                Frame::TryOne { zero_taken } => {
                    self.frames[l] = Frame::Exhausted;
                    self.prefix_zeros.set(l, false);
                    self.work += self.mask_words();
                    let candidates = self.compatible[l].and(&self.one_masks[l]);
                    if zero_taken && !self.one_extends(&candidates) {
                        continue;
                    }
                    self.compatible[l + 1] = candidates;
                    self.prefix.set(l, true);
                    if let Some(v) = self.descend(l) {
                        return Some(v);
                    }
                }
                Frame::Exhausted => {
                    self.prefix.set(l, false);
                    self.prefix_zeros.set(l, false);
                    self.frames.pop();
                }
            }
        }
    }
}

impl E2Fast {
    /// Moves below level `l`; at a leaf returns the completed vector.
    fn descend(&mut self, l: usize) -> Option<BitVector> {
        if l + 1 == self.len {
            self.work += self.prefix.word_count() as u64;
            let out = self.prefix.clone();
            if self.prefix.get(l) {
                self.prefix.set(l, false);
            }
            return Some(out);
        }
        self.frames.push(Frame::TryZero);
        None
    }
}

impl BitEnumeration for E2Fast {
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
    fn intersections_of_example() {
        let s = [bv("1101"), bv("0110"), bv("1010")];
        let out: Vec<String> = E2Fast::new(4, &s).map(|v| v.to_string()).collect();
        assert_eq!(out, ["0000", "0010", "0100", "0110", "1000", "1010", "1101"]);
    }

    #[test]
    fn single_and_empty() {
        let out: Vec<String> = E2Fast::new(3, &[bv("101")]).map(|v| v.to_string()).collect();
        assert_eq!(out, ["101"]);
        assert_eq!(E2Fast::new(3, &[]).count(), 0);
    }
}
