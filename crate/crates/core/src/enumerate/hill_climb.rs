use crate::bits::BitVector;
use crate::decide::monotone::LatticeMeets;

use super::BitEnumeration;

/// Lattice closure (`M2 = <∧, ∨>`) by climbing from `∧S` through joins of
/// the meets `x^i`.
///
/// Indices with equal `x^i` form one class. Classes are ordered by
/// decreasing popcount, so every class comes after all classes whose meet
/// strictly contains its own. The live list `L` holds the classes whose
/// meet is not yet below the current vector; a node either adds the head of
/// `L` (and unlinks every class with an index among the new bits) or drops
/// it. Unlinks are journaled and relinked in reverse order.
pub struct HillClimb {
    masks: Vec<BitVector>,
    class_of: Vec<Option<usize>>,
    next: Vec<usize>,
    prev: Vec<usize>,
    linked: Vec<bool>,
    current: BitVector,
    journal: Vec<usize>,
    /// Bits added by each pending include, for restoring the vector.
    added: Vec<BitVector>,
    stack: Vec<Frame>,
    bottom: Option<BitVector>,
    started: bool,
    work: u64,
}

#[derive(Clone, Copy, Debug)]
enum Phase {
    Enter,
    AfterInclude,
    AfterExclude,
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    phase: Phase,
    class: usize,
    mark: usize,
}

impl HillClimb {
    pub fn new(len: usize, members: &[BitVector]) -> Self {
        let meets = LatticeMeets::new(len, members);
        let mut masks: Vec<BitVector> = Vec::new();
        let mut class_of = vec![None; len];
        let mut by_mask = std::collections::HashMap::new();
        for (i, slot) in class_of.iter_mut().enumerate() {
            if let Some(x) = meets.meet(i) {
                let c = *by_mask.entry(x.clone()).or_insert_with(|| {
                    masks.push(x.clone());
                    masks.len() - 1
                });
                *slot = Some(c);
            }
        }
        // order classes by decreasing popcount, ties by first index
        let mut order: Vec<usize> = (0..masks.len()).collect();
        order.sort_by_key(|&c| std::cmp::Reverse(masks[c].count_ones()));
        let mut rank = vec![0; masks.len()];
        for (r, &c) in order.iter().enumerate() {
            rank[c] = r;
        }
        let masks: Vec<BitVector> = order.iter().map(|&c| masks[c].clone()).collect();
        let class_of: Vec<Option<usize>> = class_of.into_iter().map(|c| c.map(|c| rank[c])).collect();

        let k = masks.len();
        let head = k;
        let mut next: Vec<usize> = (1..=k + 1).collect();
        let mut prev: Vec<usize> = (0..=k).map(|c| if c == 0 { head } else { c - 1 }).collect();
        next[head] = if k == 0 { head } else { 0 };
        if k > 0 {
            next[k - 1] = head;
            prev[head] = k - 1;
        }
        let bottom = meets.bottom().cloned();
        let mut hc = HillClimb {
            masks,
            class_of,
            next,
            prev,
            linked: vec![true; k],
            current: bottom.clone().unwrap_or_else(|| BitVector::zeros(len)),
            journal: Vec::new(),
            added: Vec::new(),
            stack: Vec::new(),
            bottom,
            started: false,
            work: 0,
        };
        // classes already below the bottom never enter the climb
        let below: Vec<usize> = hc.current.iter_ones().filter_map(|i| hc.class_of[i]).collect();
        for c in below {
            if hc.linked[c] {
                hc.unlink(c);
            }
        }
        hc.journal.clear();
        hc
    }

    fn head(&self) -> usize {
        self.masks.len()
    }

    fn unlink(&mut self, c: usize) {
        let (p, n) = (self.prev[c], self.next[c]);
        self.next[p] = n;
        self.prev[n] = p;
        self.linked[c] = false;
        self.journal.push(c);
        self.work += 1;
    }

    fn relink_to(&mut self, mark: usize) {
        while self.journal.len() > mark {
            let c = self.journal.pop().unwrap();
            let (p, n) = (self.prev[c], self.next[c]);
            self.next[p] = c;
            self.prev[n] = c;
            self.linked[c] = true;
            self.work += 1;
        }
    }

    /// Joins class `c` into the current vector and records the added bits.
    fn include(&mut self, c: usize) {
        self.unlink(c);
        let added = self.masks[c].and_not(&self.current);
        self.current.or_assign(&added);
        for i in added.iter_ones() {
            self.work += 1;
            if let Some(d) = self.class_of[i] {
                if self.linked[d] {
                    self.unlink(d);
                }
            }
        }
        self.added.push(added);
    }
}

impl Iterator for HillClimb {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if !self.started {
            self.started = true;
            self.bottom.as_ref()?;
            self.stack.push(Frame {
                phase: Phase::Enter,
                class: 0,
                mark: 0,
            });
            return Some(self.current.clone());
        }
        loop {
            let frame = *self.stack.last()?;
            self.work += 1;
            match frame.phase {
                Phase::Enter => {
                    let c = self.next[self.head()];
                    if c == self.head() {
                        self.stack.pop();
                        continue;
                    }
                    let mark = self.journal.len();
                    *self.stack.last_mut().unwrap() = Frame {
                        phase: Phase::AfterInclude,
                        class: c,
                        mark,
                    };
                    self.include(c);
                    self.stack.push(Frame {
                        phase: Phase::Enter,
                        class: 0,
                        mark: 0,
                    });
                    return Some(self.current.clone());
                }
                Phase::AfterInclude => {
                    self.relink_to(frame.mark);
                    let added = self.added.pop().unwrap();
                    self.current.xor_assign(&added);
                    let mark = self.journal.len();
                    self.unlink(frame.class);
                    *self.stack.last_mut().unwrap() = Frame {
                        phase: Phase::AfterExclude,
                        class: frame.class,
                        mark,
                    };
                    self.stack.push(Frame {
                        phase: Phase::Enter,
                        class: 0,
                        mark: 0,
                    });
                }
                Phase::AfterExclude => {
                    self.relink_to(frame.mark);
                    self.stack.pop();
                }
            }
        }
    }
}

impl BitEnumeration for HillClimb {
    fn work(&self) -> u64 {
        self.work
    }
}
