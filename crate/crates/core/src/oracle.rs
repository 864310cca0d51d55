//! Fixpoint saturation: the ground truth every specialised algorithm is
//! checked against, and the incremental-delay fallback for operation sets
//! without a polynomial decider.

use std::collections::{HashMap, HashSet};

use crate::clones::{resolve, CloneSpec, Strategy};
use crate::error::{Error, Result};
use crate::op::Operation;
use crate::vector::{Family, Vector};

pub const DEFAULT_BUDGET: usize = 1 << 20;

/// Streams `Cl_F(S)`: the members of `S` first, then every new vector in
/// discovery order.
///
/// Evaluation is semi-naive: a round only applies an operation to tuples
/// with at least one argument found in the previous round.
pub struct SaturationStream {
    ops: Vec<Operation>,
    found: Vec<Vector>,
    seen: HashSet<Vector>,
    budget: usize,
    emitted: usize,
    initial: usize,
    round: Option<Round>,
    applications: u64,
    failed: bool,
}

/// Cursor over the argument tuples of one round.
struct Round {
    frontier_start: usize,
    end: usize,
    op: usize,
    /// Position of the first argument drawn from the frontier.
    first_new: usize,
    cursor: Vec<usize>,
    fresh: bool,
}

impl Round {
    fn new(frontier_start: usize, end: usize) -> Self {
        Round {
            frontier_start,
            end,
            op: 0,
            first_new: 0,
            cursor: Vec::new(),
            fresh: true,
        }
    }

    fn range(&self, pos: usize) -> (usize, usize) {
        use std::cmp::Ordering::*;
        match pos.cmp(&self.first_new) {
            Less => (0, self.frontier_start),
            Equal => (self.frontier_start, self.end),
            Greater => (0, self.end),
        }
    }

    /// Advances to the next tuple; returns false once the round is exhausted.
    fn advance(&mut self, ops: &[Operation]) -> bool {
        loop {
            if self.op >= ops.len() {
                return false;
            }
            let arity = ops[self.op].arity();
            if self.fresh {
                self.fresh = false;
                if self.first_new < arity && self.reset_cursor(arity) {
                    return true;
                }
            } else if self.step(arity) {
                return true;
            }
            self.first_new += 1;
            if self.first_new >= arity {
                self.first_new = 0;
                self.op += 1;
            }
            self.fresh = true;
        }
    }

    fn reset_cursor(&mut self, arity: usize) -> bool {
        self.cursor.clear();
        for pos in 0..arity {
            let (lo, hi) = self.range(pos);
            if lo >= hi {
                return false;
            }
            self.cursor.push(lo);
        }
        true
    }

    fn step(&mut self, arity: usize) -> bool {
        for pos in (0..arity).rev() {
            let (lo, hi) = self.range(pos);
            self.cursor[pos] += 1;
            if self.cursor[pos] < hi {
                return true;
            }
            self.cursor[pos] = lo;
        }
        false
    }
}

impl SaturationStream {
    pub fn new(ops: &[Operation], s: &Family, budget: usize) -> Result<Self> {
        for op in ops {
            if op.domain() != s.domain() {
                return Err(Error::DomainMismatch {
                    expected: s.domain(),
                    got: op.domain(),
                });
            }
        }
        Ok(SaturationStream {
            ops: ops.to_vec(),
            found: s.members().to_vec(),
            seen: s.members().iter().cloned().collect(),
            budget,
            emitted: 0,
            initial: s.size(),
            round: None,
            applications: 0,
            failed: false,
        })
    }

    /// Number of operation applications performed so far.
    pub fn applications(&self) -> u64 {
        self.applications
    }

    pub fn found(&self) -> &[Vector] {
        &self.found
    }
}

impl Iterator for SaturationStream {
    type Item = Result<Vector>;

    fn next(&mut self) -> Option<Result<Vector>> {
        if self.failed {
            return None;
        }
        if self.emitted < self.initial {
            if self.emitted >= self.budget {
                self.failed = true;
                return Some(Err(Error::BudgetExceeded { budget: self.budget }));
            }
            self.emitted += 1;
            return Some(Ok(self.found[self.emitted - 1].clone()));
        }
        loop {
            let round = self.round.get_or_insert_with(|| Round::new(0, self.found.len()));
            if !round.advance(&self.ops) {
                if self.found.len() == round.end {
                    return None;
                }
                *round = Round::new(round.end, self.found.len());
                continue;
            }
            let op = &self.ops[round.op];
            let args: Vec<&Vector> = round.cursor.iter().map(|&k| &self.found[k]).collect();
            let v = op.apply_unchecked(&args);
            self.applications += 1;
            if self.seen.contains(&v) {
                continue;
            }
            if self.found.len() >= self.budget {
                self.failed = true;
                return Some(Err(Error::BudgetExceeded { budget: self.budget }));
            }
            self.seen.insert(v.clone());
            self.found.push(v.clone());
            self.emitted += 1;
            return Some(Ok(v));
        }
    }
}

/// The least superset of `s` closed under every operation in `ops`.
pub fn saturate(ops: &[Operation], s: &Family, budget: usize) -> Result<Family> {
    let mut stream = SaturationStream::new(ops, s, budget)?;
    for item in stream.by_ref() {
        item?;
    }
    Family::new(s.len(), s.domain(), stream.found)
}

/// Every vector of `D^n` in lexicographic order.
pub fn all_vectors(len: usize, domain: u8) -> impl Iterator<Item = Vector> {
    let total = (domain as usize).checked_pow(len as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut code| {
        let mut digits = vec![0u8; len];
        for slot in digits.iter_mut().rev() {
            *slot = (code % domain as usize) as u8;
            code /= domain as usize;
        }
        Vector::from_digits_unchecked(digits, domain)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionMismatch {
    pub vector: Vector,
    pub expected: bool,
    pub got: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationMismatch {
    pub strategy: String,
    pub missing: Vec<Vector>,
    pub extra: Vec<Vector>,
    pub duplicates: Vec<Vector>,
}

impl EnumerationMismatch {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.duplicates.is_empty()
    }
}

/// Outcome of comparing a decider and enumerators against saturation.
#[derive(Debug, Clone, Default)]
pub struct HarnessReport {
    pub closure_size: usize,
    pub decisions: Vec<DecisionMismatch>,
    pub enumerations: Vec<EnumerationMismatch>,
    pub errors: Vec<String>,
}

impl HarnessReport {
    pub fn is_clean(&self) -> bool {
        self.decisions.is_empty() && self.errors.is_empty() && self.enumerations.iter().all(|e| e.is_clean())
    }
}

/// Runs `decide` on every vector of `D^n` and records disagreements with `closure`.
pub fn compare_decider(
    len: usize,
    domain: u8,
    closure: &HashSet<Vector>,
    mut decide: impl FnMut(&Vector) -> Result<bool>,
) -> Result<Vec<DecisionMismatch>> {
    let mut out = Vec::new();
    for v in all_vectors(len, domain) {
        let expected = closure.contains(&v);
        let got = decide(&v)?;
        if got != expected {
            out.push(DecisionMismatch { vector: v, expected, got });
        }
    }
    Ok(out)
}

/// Compares an emitted sequence with `closure` as sets and flags repeats.
pub fn compare_enumeration(
    strategy: &str,
    closure: &HashSet<Vector>,
    emitted: impl IntoIterator<Item = Vector>,
) -> EnumerationMismatch {
    let mut counts: HashMap<Vector, usize> = HashMap::new();
    for v in emitted {
        *counts.entry(v).or_default() += 1;
    }
    let mut report = EnumerationMismatch {
        strategy: strategy.to_string(),
        ..Default::default()
    };
    for (v, &c) in &counts {
        if c > 1 {
            report.duplicates.push(v.clone());
        }
        if !closure.contains(v) {
            report.extra.push(v.clone());
        }
    }
    for v in closure {
        if !counts.contains_key(v) {
            report.missing.push(v.clone());
        }
    }
    report.missing.sort();
    report.extra.sort();
    report.duplicates.sort();
    report
}

/// Checks the resolved decider over all of `D^n`, and both enumeration
/// strategies, against saturation under the clone's generators.
pub fn equivalence_harness(spec: &CloneSpec, s: &Family, budget: usize) -> Result<HarnessReport> {
    let problem = resolve(spec, s)?;
    let oracle = saturate(&spec.generators()?, s, budget)?;
    let closure = oracle.to_set();
    let mut report = HarnessReport {
        closure_size: closure.len(),
        ..Default::default()
    };
    report.decisions = compare_decider(s.len(), s.domain(), &closure, |v| problem.decide(v))?;
    for strategy in [Strategy::Fast, Strategy::Generic] {
        if strategy == Strategy::Generic && !problem.has_decider() {
            continue;
        }
        match problem.enumerate(strategy) {
            Ok(stream) => {
                let mut emitted = Vec::new();
                for item in stream {
                    match item {
                        Ok(v) => emitted.push(v),
                        Err(e) => report.errors.push(e.to_string()),
                    }
                }
                report
                    .enumerations
                    .push(compare_enumeration(&format!("{strategy:?}"), &closure, emitted));
            }
            Err(e) => report.errors.push(e.to_string()),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op::builtin;

    fn fam(rows: &[&str]) -> Family {
        Family::parse_members(2, rows).unwrap()
    }

    fn sorted(f: &Family) -> Vec<String> {
        f.sorted().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn union_closure_of_worked_example() {
        let s = fam(&["1101", "0110", "1010"]);
        let cl = saturate(&[builtin::or()], &s, DEFAULT_BUDGET).unwrap();
        assert_eq!(sorted(&cl), ["0110", "1010", "1101", "1110", "1111"]);
    }

    #[test]
    fn no_operations_is_identity() {
        let s = fam(&["10", "01"]);
        assert_eq!(saturate(&[], &s, DEFAULT_BUDGET).unwrap(), s);
    }

    #[test]
    fn majority_adds_one_vector() {
        let s = fam(&["110", "011", "101"]);
        let cl = saturate(&[builtin::maj()], &s, DEFAULT_BUDGET).unwrap();
        assert_eq!(sorted(&cl), ["011", "101", "110", "111"]);
    }

    #[test]
    fn stream_emits_members_first() {
        let s = fam(&["1101", "0110", "1010"]);
        let out: Vec<String> = SaturationStream::new(&[builtin::or()], &s, DEFAULT_BUDGET)
            .unwrap()
            .map(|v| v.unwrap().to_string())
            .collect();
        assert_eq!(&out[..3], ["1101", "0110", "1010"]);
        assert_eq!(out.len(), 5);

        let s = fam(&["110"]);
        let out: Vec<String> = SaturationStream::new(&[builtin::xor()], &s, DEFAULT_BUDGET)
            .unwrap()
            .map(|v| v.unwrap().to_string())
            .collect();
        assert_eq!(out, ["110", "000"]);
    }

    #[test]
    fn budget_overflow_flushes_prefix_then_errors() {
        let s = fam(&["1000", "0100", "0010", "0001"]);
        let items: Vec<_> = SaturationStream::new(&[builtin::or()], &s, 6).unwrap().collect();
        assert_eq!(items.iter().filter(|r| r.is_ok()).count(), 6);
        assert!(matches!(items.last(), Some(Err(Error::BudgetExceeded { budget: 6 }))));
        assert!(saturate(&[builtin::or()], &s, 6).is_err());
    }

    #[test]
    fn derived_compositions_do_not_change_the_closure() {
        let and3 = Operation::from_fn("and3", 2, 3, |a| a[0] & a[1] & a[2]);
        let s = fam(&["1101", "0111", "1011", "1110"]);
        let a = saturate(&[builtin::and()], &s, DEFAULT_BUDGET).unwrap();
        let b = saturate(&[builtin::and(), and3], &s, DEFAULT_BUDGET).unwrap();
        assert_eq!(a.to_set(), b.to_set());
    }

    #[test]
    fn rejects_mixed_domains() {
        let s = fam(&["10"]);
        assert!(SaturationStream::new(&[builtin::capped_sum()], &s, 10).is_err());
    }

    #[test]
    fn all_vectors_is_lexicographic() {
        let v: Vec<String> = all_vectors(2, 3).map(|v| v.to_string()).collect();
        assert_eq!(v, ["00", "01", "02", "10", "11", "12", "20", "21", "22"]);
        assert_eq!(all_vectors(0, 2).count(), 1);
    }
}
