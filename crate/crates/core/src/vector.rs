//! Vectors over a finite domain, index sets and families.
//!
//! Coordinates are 0-based in the library. Text interfaces (instance files,
//! CLI arguments) use 1-based indices and convert at the boundary.

use std::collections::HashSet;
use std::fmt;

use crate::bits::BitVector;
use crate::error::{Error, Result};

pub const MAX_DOMAIN: u8 = 10;

/// A word of fixed length over `{0, …, d-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    digits: Vec<u8>,
    domain: u8,
}

impl Vector {
    pub fn new(digits: Vec<u8>, domain: u8) -> Result<Self> {
        if !(2..=MAX_DOMAIN).contains(&domain) {
            return Err(Error::BadDomain(domain));
        }
        if let Some(&value) = digits.iter().find(|&&x| x >= domain) {
            return Err(Error::ValueOutOfDomain { value, domain });
        }
        Ok(Vector { digits, domain })
    }

    pub(crate) fn from_digits_unchecked(digits: Vec<u8>, domain: u8) -> Self {
        debug_assert!(digits.iter().all(|&x| x < domain));
        Vector { digits, domain }
    }

    pub fn constant(len: usize, value: u8, domain: u8) -> Result<Self> {
        Vector::new(vec![value; len], domain)
    }

    /// Parses a digit string such as `"0121"`.
    pub fn parse(s: &str, domain: u8) -> Result<Self> {
        let digits = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse {
                    line: 1,
                    msg: format!("unexpected character {c:?} in vector"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Vector::new(digits, domain)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    #[inline]
    pub fn domain(&self) -> u8 {
        self.domain
    }

    #[inline]
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        self.digits[i]
    }

    pub fn project(&self, idx: &IndexSet) -> Vector {
        Vector {
            digits: idx.iter().map(|i| self.digits[i]).collect(),
            domain: self.domain,
        }
    }

    pub fn prefix(&self, l: usize) -> Vector {
        Vector {
            digits: self.digits[..l].to_vec(),
            domain: self.domain,
        }
    }

    /// Coordinate-wise complement; boolean only.
    pub fn complement(&self) -> Result<Vector> {
        if self.domain != 2 {
            return Err(Error::NotBoolean(self.domain));
        }
        Ok(Vector {
            digits: self.digits.iter().map(|&x| 1 - x).collect(),
            domain: 2,
        })
    }

    pub fn to_bits(&self) -> Result<BitVector> {
        if self.domain != 2 {
            return Err(Error::NotBoolean(self.domain));
        }
        Ok(BitVector::from_vector(self))
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector({self}")?;
        if self.domain != 2 {
            write!(f, "; d={}", self.domain)?;
        }
        f.write_str(")")
    }
}

/// Strictly increasing list of 0-based coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>, len: usize) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedIndexSet);
        }
        if let Some(&index) = indices.iter().find(|&&i| i >= len) {
            return Err(Error::IndexOutOfRange { index, len });
        }
        Ok(IndexSet(indices))
    }

    /// Builds an index set from 1-based indices, as written in text formats.
    pub fn from_one_based(indices: &[usize], len: usize) -> Result<Self> {
        if let Some(&index) = indices.iter().find(|&&i| i == 0) {
            return Err(Error::IndexOutOfRange { index, len });
        }
        IndexSet::new(indices.iter().map(|i| i - 1).collect(), len)
    }

    /// `{0, …, l-1}`.
    pub fn prefix(l: usize) -> Self {
        IndexSet((0..l).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Selects positions `inner` of `self`, i.e. the index set `self ∘ inner`.
    pub fn compose(&self, inner: &IndexSet) -> Result<IndexSet> {
        IndexSet::new(
            inner
                .iter()
                .map(|j| {
                    self.0.get(j).copied().ok_or(Error::IndexOutOfRange {
                        index: j,
                        len: self.len(),
                    })
                })
                .collect::<Result<_>>()?,
            usize::MAX,
        )
    }
}

/// A duplicate-free set of equal-length vectors over one domain.
///
/// Members keep their first-seen order so that every algorithm that walks
/// the family is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Family {
    len: usize,
    domain: u8,
    members: Vec<Vector>,
}

impl Family {
    pub fn empty(len: usize, domain: u8) -> Self {
        Family {
            len,
            domain,
            members: Vec::new(),
        }
    }

    /// Collects `members`, dropping duplicates.
    pub fn new(len: usize, domain: u8, members: impl IntoIterator<Item = Vector>) -> Result<Self> {
        if !(2..=MAX_DOMAIN).contains(&domain) {
            return Err(Error::BadDomain(domain));
        }
        let mut family = Family::empty(len, domain);
        let mut seen = HashSet::new();
        for v in members {
            family.check(&v)?;
            if seen.insert(v.clone()) {
                family.members.push(v);
            }
        }
        Ok(family)
    }

    /// Convenience constructor from digit strings.
    pub fn parse_members(domain: u8, rows: &[&str]) -> Result<Self> {
        let vectors = rows
            .iter()
            .map(|r| Vector::parse(r, domain))
            .collect::<Result<Vec<_>>>()?;
        let len = vectors.first().map_or(0, Vector::len);
        Family::new(len, domain, vectors)
    }

    pub fn from_bits(len: usize, members: impl IntoIterator<Item = BitVector>) -> Self {
        let mut family = Family::empty(len, 2);
        let mut seen = HashSet::new();
        for b in members {
            debug_assert_eq!(b.len(), len);
            if seen.insert(b.clone()) {
                family.members.push(b.to_vector());
            }
        }
        family
    }

    /// Vector length `n`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn domain(&self) -> u8 {
        self.domain
    }

    /// Member count `m`.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Vector] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vector> {
        self.members.iter()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.members.contains(v)
    }

    /// Checks that `v` could be a member: same length and domain.
    pub fn check(&self, v: &Vector) -> Result<()> {
        if v.domain() != self.domain {
            return Err(Error::DomainMismatch {
                expected: self.domain,
                got: v.domain(),
            });
        }
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Adds `v` unless already present. Returns whether it was new.
    pub fn insert(&mut self, v: Vector) -> Result<bool> {
        self.check(&v)?;
        if self.members.contains(&v) {
            return Ok(false);
        }
        self.members.push(v);
        Ok(true)
    }

    pub fn to_bits(&self) -> Result<Vec<BitVector>> {
        if self.domain != 2 {
            return Err(Error::NotBoolean(self.domain));
        }
        Ok(self.members.iter().map(BitVector::from_vector).collect())
    }

    /// Members sorted lexicographically.
    pub fn sorted(&self) -> Vec<Vector> {
        let mut v = self.members.clone();
        v.sort();
        v
    }

    pub fn to_set(&self) -> HashSet<Vector> {
        self.members.iter().cloned().collect()
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(n={}, d={}, {{", self.len, self.domain)?;
        for (k, v) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("})")
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a Vector;
    type IntoIter = std::slice::Iter<'a, Vector>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// `S_I = { v_I : v ∈ S }`, deduplicated.
pub fn project(s: &Family, idx: &IndexSet) -> Result<Family> {
    if let Some(index) = idx.iter().find(|&i| i >= s.len()) {
        return Err(Error::IndexOutOfRange {
            index,
            len: s.len(),
        });
    }
    Family::new(idx.len(), s.domain(), s.iter().map(|v| v.project(idx)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(rows: &[&str]) -> Family {
        Family::parse_members(2, rows).unwrap()
    }

    #[test]
    fn projection_selects_and_deduplicates() {
        let s = fam(&["1101", "0110"]);
        let p = project(&s, &IndexSet::from_one_based(&[2, 3], 4).unwrap()).unwrap();
        assert_eq!(p.sorted(), fam(&["10", "11"]).sorted());

        let s = fam(&["1101", "0110", "1010"]);
        let p = project(&s, &IndexSet::prefix(2)).unwrap();
        assert_eq!(p.members(), fam(&["11", "01", "10"]).members());

        let e = Family::empty(4, 2);
        assert!(project(&e, &IndexSet::prefix(3)).unwrap().is_empty());
    }

    #[test]
    fn projection_rejects_bad_indices() {
        let s = fam(&["1101"]);
        assert!(matches!(
            project(&s, &IndexSet(vec![4])),
            Err(Error::IndexOutOfRange { index: 4, len: 4 })
        ));
        assert!(IndexSet::new(vec![2, 1], 4).is_err());
        assert!(IndexSet::from_one_based(&[0], 4).is_err());
    }

    #[test]
    fn family_drops_duplicates_in_order() {
        let s = fam(&["101", "011", "101"]);
        assert_eq!(s.size(), 2);
        assert_eq!(s.members()[0].to_string(), "101");
    }

    #[test]
    fn vector_validates_domain() {
        assert!(Vector::parse("012", 2).is_err());
        assert!(Vector::parse("012", 3).is_ok());
        assert!(Vector::new(vec![0], 11).is_err());
    }
}
