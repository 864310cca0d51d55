//! The limit clones `S10 = <x ∧ (y ∨ z)>` and `S12 = <x ∧ (y → z)>`.
//!
//! Constant columns are fixed by both clones, so they are checked for
//! equality first and the characterisation is applied to the remaining
//! columns, where every coordinate takes both values somewhere in `S`.

use crate::bits::BitVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Separation {
    /// Some member has `(w_k, w_i) = (1, 0)`.
    OneZero,
    /// Some member has `w_k ≠ w_i`.
    Mixed,
}

fn decide(len: usize, members: &[BitVector], v: &BitVector, sep: Separation) -> bool {
    let Some(first) = members.first() else {
        return false;
    };
    let mut all_ones = first.clone();
    let mut any_ones = first.clone();
    for w in &members[1..] {
        all_ones.and_assign(w);
        any_ones.or_assign(w);
    }
    let all_zeros = any_ones.not();
    if !all_ones.is_subset(v) || !v.and(&all_zeros).is_zero() {
        return false;
    }
    let free = any_ones.and_not(&all_ones);

    if !members.iter().any(|w| v.is_subset(w)) {
        return false;
    }
    let free_zeros = free.and_not(v);
    if free_zeros.is_zero() {
        return true;
    }
    // for each k ∈ 1(v) on free columns, the set of i separated from k
    for k in v.and(&free).iter_ones() {
        let mut separated = BitVector::zeros(len);
        for w in members {
            match sep {
                Separation::OneZero => {
                    if w.get(k) {
                        separated.or_assign(&w.not());
                    }
                }
                Separation::Mixed => {
                    if w.get(k) {
                        separated.or_assign(&w.not());
                    } else {
                        separated.or_assign(w);
                    }
                }
            }
        }
        if !free_zeros.is_subset(&separated) {
            return false;
        }
    }
    true
}

pub fn s10_contains(len: usize, members: &[BitVector], v: &BitVector) -> bool {
    decide(len, members, v, Separation::OneZero)
}

pub fn s12_contains(len: usize, members: &[BitVector], v: &BitVector) -> bool {
    decide(len, members, v, Separation::Mixed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_bits(s.bytes().map(|b| b == b'1'))
    }

    fn rows(r: &[&str]) -> Vec<BitVector> {
        r.iter().map(|s| bv(s)).collect()
    }

    #[test]
    fn s12_examples() {
        let s = rows(&["110", "011"]);
        assert!(s12_contains(3, &s, &bv("010")));
        assert!(!s12_contains(3, &s, &bv("111")));
        assert!(s12_contains(3, &s, &bv("110")));
    }

    #[test]
    fn s10_examples() {
        assert!(s10_contains(3, &rows(&["110", "011"]), &bv("010")));
        assert!(s10_contains(3, &rows(&["110", "101"]), &bv("100")));
        assert!(!s10_contains(3, &rows(&["110"]), &bv("100")));
    }

    #[test]
    fn constant_columns_are_fixed() {
        let s = rows(&["11"]);
        assert!(!s10_contains(2, &s, &bv("00")));
        assert!(!s12_contains(2, &s, &bv("00")));
        assert!(!s10_contains(2, &[], &bv("00")));
    }
}
