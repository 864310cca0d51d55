//! Membership tests `v ∈ Cl_F(S)` for the boolean clones of the reduced
//! Post lattice.
//!
//! Each test works on a family that has already been through the clone
//! reductions (constants adjoined, negation closure, complement), so the
//! clone here is always one of the bases. Near-unanimity bases go through
//! [`near_unanimity::ProjectionCache`] instead.

pub mod classes;
pub mod limits;
pub mod linear;
pub mod monotone;
pub mod near_unanimity;
pub mod pairs;

use std::collections::HashSet;

use crate::bits::BitVector;
use crate::error::{Error, Result};

use self::classes::{ColumnClasses, Fixed};
use self::linear::Gf2Basis;
use self::monotone::LatticeMeets;
use self::pairs::PairTable;

/// Precomputed membership test over packed vectors.
#[derive(Clone, Debug)]
pub enum BooleanTest {
    Member(HashSet<BitVector>),
    Meet(Vec<BitVector>),
    Span(Gf2Basis),
    OddSpan(Gf2Basis),
    Lattice(LatticeMeets),
    Pairs(PairTable),
    S10(Vec<BitVector>),
    S12(Vec<BitVector>),
    Classes(ColumnClasses),
}

/// Which characterisation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BooleanKind {
    I2,
    E2,
    L0,
    L2,
    M2,
    D2,
    S10,
    S12,
    R2,
    R0,
}

#[derive(Clone, Debug)]
pub struct BooleanDecider {
    len: usize,
    empty: bool,
    test: BooleanTest,
}

impl BooleanDecider {
    pub fn new(kind: BooleanKind, len: usize, members: &[BitVector]) -> Self {
        let test = match kind {
            BooleanKind::I2 => BooleanTest::Member(members.iter().cloned().collect()),
            BooleanKind::E2 => BooleanTest::Meet(members.to_vec()),
            BooleanKind::L0 => BooleanTest::Span(Gf2Basis::new(len, members)),
            BooleanKind::L2 => BooleanTest::OddSpan(Gf2Basis::new(len, members)),
            BooleanKind::M2 => BooleanTest::Lattice(LatticeMeets::new(len, members)),
            BooleanKind::D2 => BooleanTest::Pairs(PairTable::new(len, members)),
            BooleanKind::S10 => BooleanTest::S10(members.to_vec()),
            BooleanKind::S12 => BooleanTest::S12(members.to_vec()),
            BooleanKind::R2 => BooleanTest::Classes(ColumnClasses::new(len, members, Fixed::Both)),
            BooleanKind::R0 => BooleanTest::Classes(ColumnClasses::new(len, members, Fixed::Zeros)),
        };
        BooleanDecider {
            len,
            empty: members.is_empty(),
            test,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn test(&self) -> &BooleanTest {
        &self.test
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: v.len(),
            });
        }
        if self.empty {
            return Ok(false);
        }
        Ok(match &self.test {
            BooleanTest::Member(set) => set.contains(v),
            BooleanTest::Meet(members) => monotone::e2_contains(members, v),
            BooleanTest::Span(b) => b.spans(v),
            BooleanTest::OddSpan(b) => b.odd_combination(v),
            BooleanTest::Lattice(l) => l.contains(v),
            BooleanTest::Pairs(t) => t.contains(v),
            BooleanTest::S10(members) => limits::s10_contains(self.len, members, v),
            BooleanTest::S12(members) => limits::s12_contains(self.len, members, v),
            BooleanTest::Classes(c) => c.contains(v),
        })
    }
}
