use std::sync::Arc;

use crate::bits::BitVector;
use crate::decide::near_unanimity::ProjectionCache;
use crate::decide::pairs::PairTable;
use crate::error::Result;
use crate::vector::Vector;

use super::{BitEnumeration, Enumeration};

/// Majority closure (`D2`) by backtracking on the pair table.
///
/// On entering a node at depth `l` the feasible values of coordinate `l` are
/// computed at once from the `l` pair entries `(i, l)`, `i < l`.
pub struct D2Incremental {
    table: PairTable,
    empty: bool,
    prefix: BitVector,
    /// Per depth: remaining feasible values as a 2-bit mask.
    pending: Vec<u8>,
    started: bool,
    work: u64,
}

impl D2Incremental {
    pub fn new(len: usize, members: &[BitVector]) -> Self {
        D2Incremental {
            table: PairTable::new(len, members),
            empty: members.is_empty(),
            prefix: BitVector::zeros(len),
            pending: Vec::with_capacity(len),
            started: false,
            work: 0,
        }
    }

    fn children(&mut self, l: usize) -> u8 {
        let mut mask = self.table.single(l);
        for i in 0..l {
            self.work += 1;
            let a = self.prefix.get(i) as u8;
            mask &= self.table.pair(i, l) >> (2 * a) & 0b11;
        }
        mask
    }
}

impl Iterator for D2Incremental {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        let len = self.table.len();
        if !self.started {
            self.started = true;
            if self.empty {
                return None;
            }
            let mask = self.children(0);
            self.pending.push(mask);
        }
        loop {
            let l = self.pending.len().checked_sub(1)?;
            let mask = self.pending[l];
            self.work += 1;
            if mask == 0 {
                self.pending.pop();
                continue;
            }
            let b = mask.trailing_zeros() as usize;
            self.pending[l] = mask & (mask - 1);
            self.prefix.set(l, b == 1);
            if l + 1 == len {
                return Some(self.prefix.clone());
            }
            let mask = self.children(l + 1);
            self.pending.push(mask);
        }
    }
}

impl BitEnumeration for D2Incremental {
    fn work(&self) -> u64 {
        self.work
    }
}

/// Backtracking on cached projection closures, for any near-unanimity clone
/// and any domain.
///
/// At depth `l` a value is feasible when every index set of the cache
/// whose largest element is `l` accepts the extended prefix.
pub struct NuIncremental {
    cache: Arc<ProjectionCache>,
    domain: u8,
    len: usize,
    prefix: Vec<u8>,
    next_value: Vec<u8>,
    started: bool,
    done: bool,
    complement: bool,
    work: u64,
}

impl NuIncremental {
    pub fn new(cache: Arc<ProjectionCache>, domain: u8, complement: bool) -> Self {
        let len = cache.len();
        NuIncremental {
            cache,
            domain,
            len,
            prefix: Vec::with_capacity(len),
            next_value: Vec::with_capacity(len + 1),
            started: false,
            done: false,
            complement,
            work: 0,
        }
    }
}

impl Iterator for NuIncremental {
    type Item = Result<Vector>;

    fn next(&mut self) -> Option<Result<Vector>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.next_value.push(0);
        }
        loop {
            let depth = self.prefix.len();
            let b = self.next_value[depth];
            self.work += 1;
            if b == self.domain {
                self.next_value.pop();
                if self.prefix.pop().is_none() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            self.next_value[depth] += 1;
            self.prefix.push(b);
            let (ok, lookups) = self.cache.extends(&self.prefix);
            self.work += lookups;
            if !ok {
                self.prefix.pop();
            } else if self.prefix.len() == self.len {
                let digits = if self.complement {
                    self.prefix.iter().map(|&x| 1 - x).collect()
                } else {
                    self.prefix.clone()
                };
                self.prefix.pop();
                return Some(Ok(Vector::from_digits_unchecked(digits, self.domain)));
            } else {
                self.next_value.push(0);
            }
        }
    }
}

impl Enumeration for NuIncremental {
    fn work(&self) -> u64 {
        self.work
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op::builtin;
    use crate::vector::Family;

    fn bv(s: &str) -> BitVector {
        BitVector::from_bits(s.bytes().map(|b| b == b'1'))
    }

    #[test]
    fn majority_closure() {
        let s = [bv("110"), bv("011"), bv("101")];
        let out: Vec<String> = D2Incremental::new(3, &s).map(|v| v.to_string()).collect();
        assert_eq!(out, ["011", "101", "110", "111"]);
        let out: Vec<String> = D2Incremental::new(3, &[bv("010")]).map(|v| v.to_string()).collect();
        assert_eq!(out, ["010"]);
        assert_eq!(D2Incremental::new(3, &[]).count(), 0);
    }

    #[test]
    fn projection_backtrack() {
        let s = Family::parse_members(2, &["110", "011", "101"]).unwrap();
        let cache = ProjectionCache::new(&[builtin::maj()], &s, 2, usize::MAX).unwrap();
        let out: Vec<String> = NuIncremental::new(Arc::new(cache), 2, false)
            .map(|v| v.unwrap().to_string())
            .collect();
        assert_eq!(out, ["011", "101", "110", "111"]);
    }
}
