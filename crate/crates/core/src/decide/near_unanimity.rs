//! Projection tests for clones with a near-unanimity operation.
//!
//! With a near-unanimity operation of arity `w + 1`, `v ∈ Cl(S)` iff
//! `v_I ∈ Cl(S_I)` for every index set `I` of size `w`. The cache stores
//! `Cl(S_I)` for every such `I`, as a bitset over the `d^w` local patterns.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::op::Operation;
use crate::vector::Family;

/// Upper bound on `d^w`, the size of one local pattern space.
pub const MAX_PATTERNS: usize = 1 << 16;

/// Subsets of size `r` of `[0, n)` in colexicographic order.
#[derive(Clone, Debug)]
pub struct Colex {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Colex {
    pub fn new(n: usize, r: usize) -> Self {
        Colex {
            n,
            current: (0..r).collect(),
            done: r > n,
        }
    }
}

impl Iterator for Colex {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let r = self.current.len();
        let mut j = 0;
        loop {
            if j == r {
                self.done = true;
                break;
            }
            let limit = if j + 1 < r { self.current[j + 1] } else { self.n };
            if self.current[j] + 1 < limit {
                self.current[j] += 1;
                for (t, slot) in self.current[..j].iter_mut().enumerate() {
                    *slot = t;
                }
                break;
            }
            j += 1;
        }
        Some(out)
    }
}

/// Binomial coefficients `C(a, b)` for `a ≤ n`, `b ≤ r`, saturating.
#[derive(Clone, Debug)]
struct Binomials {
    r: usize,
    table: Vec<u64>,
}

impl Binomials {
    fn new(n: usize, r: usize) -> Self {
        let mut table = vec![0u64; (n + 1) * (r + 1)];
        for a in 0..=n {
            for b in 0..=r.min(a) {
                table[a * (r + 1) + b] = if b == 0 || b == a {
                    1
                } else {
                    table[(a - 1) * (r + 1) + b - 1].saturating_add(table[(a - 1) * (r + 1) + b])
                };
            }
        }
        Binomials { r, table }
    }

    fn get(&self, a: usize, b: usize) -> u64 {
        if b > a {
            0
        } else {
            self.table[a * (self.r + 1) + b]
        }
    }
}

/// `Cl_F(S_I)` for every `I` of a fixed width.
#[derive(Clone, Debug)]
pub struct ProjectionCache {
    len: usize,
    domain: u8,
    width: usize,
    binom: Binomials,
    /// Bitsets in colex order of `I`.
    sets: Vec<Vec<u64>>,
    /// For `l < width`: the length-`l` prefixes of `Cl(S_{[width]})`.
    prefixes: Vec<HashSet<Vec<u8>>>,
    empty: bool,
}

impl ProjectionCache {
    /// `width` is clamped to the vector length. `max_subsets` bounds the
    /// number of index sets, `C(n, width)`.
    pub fn new(ops: &[Operation], s: &Family, width: usize, max_subsets: usize) -> Result<Self> {
        let len = s.len();
        let domain = s.domain();
        let width = width.min(len);
        let patterns = (domain as usize).checked_pow(width as u32).unwrap_or(usize::MAX);
        if patterns > MAX_PATTERNS {
            return Err(Error::Unsupported(format!(
                "projection width {width} over domain {domain} exceeds {MAX_PATTERNS} local patterns"
            )));
        }
        let binom = Binomials::new(len, width);
        let count = binom.get(len, width);
        if count > max_subsets as u64 {
            return Err(Error::BudgetExceeded { budget: max_subsets });
        }
        let mut cache = ProjectionCache {
            len,
            domain,
            width,
            binom,
            sets: Vec::with_capacity(count as usize),
            prefixes: Vec::new(),
            empty: s.is_empty(),
        };
        if cache.empty {
            return Ok(cache);
        }
        let local = LocalSaturator::new(ops, domain, width);
        for idx in Colex::new(len, width) {
            let seeds: Vec<Vec<u8>> = s.iter().map(|v| idx.iter().map(|&i| v.get(i)).collect()).collect();
            cache.sets.push(local.closure(seeds));
        }
        if width > 0 {
            let first = &cache.sets[0];
            cache.prefixes = (0..width)
                .map(|l| {
                    (0..patterns)
                        .filter(|&c| first[c / 64] >> (c % 64) & 1 == 1)
                        .map(|c| cache.decode(c)[..l].to_vec())
                        .collect()
                })
                .collect();
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of cached index sets.
    pub fn subset_count(&self) -> usize {
        self.sets.len()
    }

    fn decode(&self, mut code: usize) -> Vec<u8> {
        let d = self.domain as usize;
        (0..self.width)
            .map(|_| {
                let x = (code % d) as u8;
                code /= d;
                x
            })
            .collect()
    }

    fn code(&self, v: &[u8], idx: &[usize]) -> usize {
        let d = self.domain as usize;
        idx.iter().rev().fold(0, |acc, &i| acc * d + v[i] as usize)
    }

    fn rank(&self, idx: &[usize]) -> usize {
        idx.iter().enumerate().map(|(j, &i)| self.binom.get(i, j + 1) as usize).sum()
    }

    #[inline]
    fn test(&self, rank: usize, code: usize) -> bool {
        self.sets[rank][code / 64] >> (code % 64) & 1 == 1
    }

    /// Whether `(v_I)` lies in the cached closure for the index set `idx`.
    pub fn lookup(&self, v: &[u8], idx: &[usize]) -> bool {
        self.test(self.rank(idx), self.code(v, idx))
    }

    /// Full membership test for a vector of length `n`.
    pub fn contains(&self, v: &[u8]) -> bool {
        self.contains_prefix(v)
    }

    /// `p ∈ Cl(S_{[l]})` for `l = p.len()`.
    pub fn contains_prefix(&self, p: &[u8]) -> bool {
        if self.empty {
            return false;
        }
        let l = p.len();
        if l < self.width {
            return self.prefixes[l].contains(p);
        }
        Colex::new(l, self.width)
            .enumerate()
            .all(|(rank, idx)| self.test(rank, self.code(p, &idx)))
    }

    /// Checks only the index sets whose largest element is the last
    /// coordinate of `p`, assuming `p` without its last coordinate passed.
    /// Returns the verdict and the number of lookups made.
    pub fn extends(&self, p: &[u8]) -> (bool, u64) {
        if self.empty {
            return (false, 0);
        }
        let l = p.len();
        if l < self.width {
            return (self.prefixes[l].contains(p), 1);
        }
        if self.width == 0 {
            return (true, 0);
        }
        let last = l - 1;
        let base = self.binom.get(last, self.width) as usize;
        let mut lookups = 0;
        for (offset, mut idx) in Colex::new(last, self.width - 1).enumerate() {
            idx.push(last);
            lookups += 1;
            if !self.test(base + offset, self.code(p, &idx)) {
                return (false, lookups);
            }
        }
        (true, lookups)
    }
}

/// Saturation of short vectors encoded as base-`d` integers.
struct LocalSaturator<'a> {
    ops: &'a [Operation],
    symmetric: Vec<bool>,
    domain: usize,
    width: usize,
}

impl<'a> LocalSaturator<'a> {
    fn new(ops: &'a [Operation], domain: u8, width: usize) -> Self {
        LocalSaturator {
            ops,
            symmetric: ops.iter().map(is_symmetric).collect(),
            domain: domain as usize,
            width,
        }
    }

    fn encode(&self, v: &[u8]) -> usize {
        v.iter().rev().fold(0, |acc, &x| acc * self.domain + x as usize)
    }

    fn closure(&self, seeds: Vec<Vec<u8>>) -> Vec<u64> {
        let patterns = self.domain.pow(self.width as u32);
        let mut bits = vec![0u64; patterns.div_ceil(64).max(1)];
        let mut found: Vec<Vec<u8>> = Vec::new();
        let insert = |v: Vec<u8>, bits: &mut Vec<u64>, found: &mut Vec<Vec<u8>>| {
            let c = self.encode(&v);
            if bits[c / 64] >> (c % 64) & 1 == 0 {
                bits[c / 64] |= 1 << (c % 64);
                found.push(v);
            }
        };
        for v in seeds {
            insert(v, &mut bits, &mut found);
        }
        let mut start = 0;
        while start < found.len() && found.len() < patterns {
            let end = found.len();
            let mut fresh = Vec::new();
            for (op, &sym) in self.ops.iter().zip(&self.symmetric) {
                let t = op.arity();
                let mut tuple = vec![0usize; t];
                let mut emit = |tuple: &[usize]| {
                    let out: Vec<u8> = (0..self.width)
                        .map(|j| {
                            let idx = tuple.iter().fold(0, |acc, &k| acc * self.domain + found[k][j] as usize);
                            op.table()[idx]
                        })
                        .collect();
                    fresh.push(out);
                };
                if sym {
                    // nondecreasing tuples whose largest entry is new
                    for top in start..end {
                        tuple[t - 1] = top;
                        multisets(&mut tuple, t - 1, top, &mut emit);
                    }
                } else {
                    tuples(&mut tuple, 0, false, start, end, &mut emit);
                }
            }
            start = end;
            for v in fresh {
                insert(v, &mut bits, &mut found);
            }
        }
        bits
    }
}

fn multisets(tuple: &mut [usize], k: usize, max: usize, emit: &mut impl FnMut(&[usize])) {
    if k == 0 {
        emit(tuple);
        return;
    }
    for x in 0..=max {
        tuple[k - 1] = x;
        multisets(tuple, k - 1, x, emit);
    }
}

fn tuples(tuple: &mut [usize], pos: usize, has_new: bool, start: usize, end: usize, emit: &mut impl FnMut(&[usize])) {
    if pos == tuple.len() {
        if has_new {
            emit(tuple);
        }
        return;
    }
    let must_be_new = !has_new && pos + 1 == tuple.len();
    let lo = if must_be_new { start } else { 0 };
    for x in lo..end {
        tuple[pos] = x;
        tuples(tuple, pos + 1, has_new || x >= start, start, end, emit);
    }
}

/// Invariant under every permutation of the arguments.
pub fn is_symmetric(op: &Operation) -> bool {
    let t = op.arity();
    if t < 2 {
        return true;
    }
    let d = op.domain() as usize;
    op.entries().all(|(args, out)| {
        (0..t - 1).all(|i| {
            let mut swapped = args.clone();
            swapped.swap(i, i + 1);
            let idx = swapped.iter().fold(0, |acc, &x| acc * d + x as usize);
            op.table()[idx] == out
        })
    })
}
