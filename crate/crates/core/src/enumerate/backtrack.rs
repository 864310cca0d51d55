use crate::error::Result;
use crate::vector::Vector;

use super::Enumeration;

/// Answers whether some closure element starts with a given prefix.
pub trait PrefixTest {
    fn extends(&mut self, prefix: &[u8]) -> Result<bool>;
}

impl<F: FnMut(&[u8]) -> Result<bool>> PrefixTest for F {
    fn extends(&mut self, prefix: &[u8]) -> Result<bool> {
        self(prefix)
    }
}

/// Flashlight search over the prefix tree of `D^n`.
///
/// Children are tried in increasing value order, so the output is
/// lexicographic.
pub struct Backtrack<T> {
    len: usize,
    domain: u8,
    extends: T,
    prefix: Vec<u8>,
    next_value: Vec<u8>,
    started: bool,
    done: bool,
    internal_nodes: u64,
    tests: u64,
}

impl<T: PrefixTest> Backtrack<T> {
    pub fn new(len: usize, domain: u8, extends: T) -> Self {
        Backtrack {
            len,
            domain,
            extends,
            prefix: Vec::with_capacity(len),
            next_value: Vec::with_capacity(len + 1),
            started: false,
            done: false,
            internal_nodes: 0,
            tests: 0,
        }
    }

    /// Internal nodes (prefixes shorter than `n`) entered so far, root included.
    pub fn internal_nodes(&self) -> u64 {
        self.internal_nodes
    }

    /// Extension tests made so far.
    pub fn tests(&self) -> u64 {
        self.tests
    }
}

impl<T: PrefixTest> Iterator for Backtrack<T> {
    type Item = Result<Vector>;

    fn next(&mut self) -> Option<Result<Vector>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.internal_nodes = 1;
            self.next_value.push(0);
        }
        loop {
            let depth = self.prefix.len();
            let b = self.next_value[depth];
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
            self.tests += 1;
            match self.extends.extends(&self.prefix) {
                Err(e) => {
                    self.done = true;
                    return Some(Err(e));
                }
                Ok(false) => {
                    self.prefix.pop();
                }
                Ok(true) if self.prefix.len() == self.len => {
                    let v = Vector::from_digits_unchecked(self.prefix.clone(), self.domain);
                    self.prefix.pop();
                    return Some(Ok(v));
                }
                Ok(true) => {
                    self.internal_nodes += 1;
                    self.next_value.push(0);
                }
            }
        }
    }
}

impl<T: PrefixTest> Enumeration for Backtrack<T> {
    fn work(&self) -> u64 {
        self.tests
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_lexicographically() {
        // vectors of length 3 with at most one 1
        let bt = Backtrack::new(3, 2, |p: &[u8]| Ok(p.iter().filter(|&&x| x == 1).count() <= 1));
        let out: Vec<String> = bt.map(|v| v.unwrap().to_string()).collect();
        assert_eq!(out, ["000", "001", "010", "100"]);
    }

    #[test]
    fn counts_nodes() {
        let mut bt = Backtrack::new(2, 3, |_: &[u8]| Ok(true));
        assert_eq!(bt.by_ref().count(), 9);
        assert_eq!(bt.internal_nodes(), 4);
        let mut bt = Backtrack::new(2, 2, |_: &[u8]| Ok(false));
        assert_eq!(bt.by_ref().count(), 0);
        assert_eq!(bt.internal_nodes(), 1);
    }
}
