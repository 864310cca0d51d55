use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::op::Operation;
use crate::oracle::saturate;
use crate::vector::{Family, Vector};

/// Closure under one associative binary operation, by depth-first traversal
/// of the graph with arcs `v → f(v, s)`, `s ∈ S`.
///
/// Every closure element is a left-nested product of members, so the
/// traversal started from each member reaches all of them. Emitted vectors
/// are kept in a balanced search tree, so memory grows with the output.
pub struct AssociativeDfs {
    op: Operation,
    members: Vec<Vector>,
    visited: BTreeSet<Vector>,
    stack: Vec<(Vector, usize)>,
    root: usize,
    work: u64,
}

impl AssociativeDfs {
    pub fn new(op: &Operation, s: &Family) -> Result<Self> {
        if op.arity() != 2 || !op.is_associative() {
            return Err(Error::NotAssociative(op.name().to_string()));
        }
        if op.domain() != s.domain() {
            return Err(Error::DomainMismatch {
                expected: s.domain(),
                got: op.domain(),
            });
        }
        Ok(AssociativeDfs {
            op: op.clone(),
            members: s.members().to_vec(),
            visited: BTreeSet::new(),
            stack: Vec::new(),
            root: 0,
            work: 0,
        })
    }

    /// Number of vectors held in the visited set.
    pub fn stored(&self) -> usize {
        self.visited.len()
    }

    pub fn work(&self) -> u64 {
        self.work
    }
}

impl Iterator for AssociativeDfs {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        loop {
            if let Some((top, next)) = self.stack.last_mut() {
                if *next < self.members.len() {
                    let s = &self.members[*next];
                    *next += 1;
                    let w = self.op.apply_unchecked(&[top, s]);
                    self.work += w.len() as u64 + 1;
                    if self.visited.insert(w.clone()) {
                        self.stack.push((w.clone(), 0));
                        return Some(w);
                    }
                } else {
                    self.stack.pop();
                    self.work += 1;
                }
                continue;
            }
            let r = self.members.get(self.root)?.clone();
            self.root += 1;
            self.work += 1;
            if self.visited.insert(r.clone()) {
                self.stack.push((r.clone(), 0));
                return Some(r);
            }
        }
    }
}

/// Membership by full saturation, guarded by `d^n ≤ budget`.
pub fn decide_associative_small(op: &Operation, s: &Family, v: &Vector, budget: usize) -> Result<bool> {
    s.check(v)?;
    let space = (s.domain() as usize).checked_pow(s.len() as u32);
    if space.is_none_or(|x| x > budget) {
        return Err(Error::BudgetExceeded { budget });
    }
    if s.contains(v) {
        return Ok(true);
    }
    Ok(saturate(std::slice::from_ref(op), s, budget)?.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op::builtin;

    #[test]
    fn capped_sum_example() {
        let s = Family::parse_members(3, &["01", "10"]).unwrap();
        let mut out: Vec<String> = AssociativeDfs::new(&builtin::capped_sum(), &s)
            .unwrap()
            .map(|v| v.to_string())
            .collect();
        out.sort();
        assert_eq!(out, ["01", "02", "10", "11", "12", "20", "21", "22"]);
    }

    #[test]
    fn fixed_point_and_rejection() {
        let s = Family::parse_members(2, &["10"]).unwrap();
        let out: Vec<String> = AssociativeDfs::new(&builtin::and(), &s).unwrap().map(|v| v.to_string()).collect();
        assert_eq!(out, ["10"]);
        assert!(AssociativeDfs::new(&builtin::maj(), &s).is_err());
        let nonassoc = Operation::from_fn("nand", 2, 2, |a| 1 - (a[0] & a[1]));
        assert!(AssociativeDfs::new(&nonassoc, &s).is_err());
    }

    #[test]
    fn exact_cover_style_instance() {
        let s = Family::parse_members(3, &["110", "011", "101"]).unwrap();
        let f = builtin::capped_sum();
        // 110 + 011 = 121, no pair of rows is an exact cover of 111
        assert!(!decide_associative_small(&f, &s, &Vector::parse("111", 3).unwrap(), 1 << 10).unwrap());
        let s = Family::parse_members(3, &["110", "001"]).unwrap();
        assert!(decide_associative_small(&f, &s, &Vector::parse("111", 3).unwrap(), 1 << 10).unwrap());
        assert!(decide_associative_small(&f, &s, &Vector::parse("110", 3).unwrap(), 1).is_err());
    }
}
