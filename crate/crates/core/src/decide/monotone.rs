//! Meets and joins: the clones `E2 = <∧>` and `M2 = <∧, ∨>`.

use crate::bits::BitVector;

/// `∩ { w ∈ S : 1(v) ⊆ 1(w) }`, or `None` when no member contains `v`.
pub fn meet_of_supersets(members: &[BitVector], v: &BitVector) -> Option<BitVector> {
    let mut acc: Option<BitVector> = None;
    for w in members.iter().filter(|w| v.is_subset(w)) {
        match &mut acc {
            None => acc = Some(w.clone()),
            Some(a) => a.and_assign(w),
        }
    }
    acc
}

/// `v ∈ Cl_{E2}(S)`: `v` is the meet of the members above it.
pub fn e2_contains(members: &[BitVector], v: &BitVector) -> bool {
    meet_of_supersets(members, v).is_some_and(|t| &t == v)
}

/// The meets `x^i = ∧ { w ∈ S : w_i = 1 }` and the bottom `∧ S`.
///
/// `Cl_{M2}(S)` is exactly the set of joins `bottom ∨ ∨_{i ∈ J} x^i` for
/// `J ⊆ [n]`.
#[derive(Clone, Debug)]
pub struct LatticeMeets {
    len: usize,
    meets: Vec<Option<BitVector>>,
    bottom: Option<BitVector>,
}

impl LatticeMeets {
    pub fn new(len: usize, members: &[BitVector]) -> Self {
        let mut meets: Vec<Option<BitVector>> = vec![None; len];
        for w in members {
            for i in w.iter_ones() {
                match &mut meets[i] {
                    None => meets[i] = Some(w.clone()),
                    Some(m) => m.and_assign(w),
                }
            }
        }
        let bottom = members.iter().cloned().reduce(|mut a, b| {
            a.and_assign(&b);
            a
        });
        LatticeMeets { len, meets, bottom }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    /// `x^i`, or `None` when no member has a 1 at `i`.
    pub fn meet(&self, i: usize) -> Option<&BitVector> {
        self.meets[i].as_ref()
    }

    pub fn bottom(&self) -> Option<&BitVector> {
        self.bottom.as_ref()
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let Some(bottom) = &self.bottom else {
            return false;
        };
        if v.is_zero() {
            // the empty join is not generated; 0 needs ∧S = 0
            return bottom.is_zero();
        }
        let mut join = BitVector::zeros(self.len);
        for i in v.iter_ones() {
            match &self.meets[i] {
                None => return false,
                Some(x) => {
                    if !x.is_subset(v) {
                        return false;
                    }
                    join.or_assign(x);
                }
            }
        }
        &join == v
    }
}
