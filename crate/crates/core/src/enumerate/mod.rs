//! Enumerators of `Cl_F(S)`: generic backtrack search and the specialised
//! delay-optimised algorithms.
//!
//! Every enumerator keeps a cumulative work counter counting the elementary
//! data-structure operations it performs, so delays can be measured in
//! noise-free units as differences between consecutive emissions.

mod atoms;
mod backtrack;
mod e2;
mod gray;
mod hill_climb;
mod incremental;

pub use atoms::AtomsGray;
pub use backtrack::{Backtrack, PrefixTest};
pub use e2::E2Fast;
pub use gray::{GrayCounter, L0Gray};
pub use hill_climb::HillClimb;
pub use incremental::{D2Incremental, NuIncremental};

use crate::bits::BitVector;
use crate::error::Result;
use crate::vector::Vector;

/// A stream of closure elements with an abstract work counter.
pub trait Enumeration: Iterator<Item = Result<Vector>> {
    /// Work performed so far.
    fn work(&self) -> u64;
}

/// A boolean enumerator working on packed vectors.
pub trait BitEnumeration: Iterator<Item = BitVector> {
    fn work(&self) -> u64;
}

/// Converts packed output to [`Vector`]s, complementing when the problem
/// was dualised.
pub struct Unpack<E> {
    inner: E,
    complement: bool,
}

impl<E: BitEnumeration> Unpack<E> {
    pub fn new(inner: E, complement: bool) -> Self {
        Unpack { inner, complement }
    }

    pub fn inner(&self) -> &E {
        &self.inner
    }
}

impl<E: BitEnumeration> Iterator for Unpack<E> {
    type Item = Result<Vector>;

    fn next(&mut self) -> Option<Result<Vector>> {
        let v = self.inner.next()?;
        Some(Ok(if self.complement { v.not() } else { v }.to_vector()))
    }
}

impl<E: BitEnumeration> Enumeration for Unpack<E> {
    fn work(&self) -> u64 {
        self.inner.work()
    }
}

/// Wraps a plain fallible iterator that has no meaningful work counter.
pub struct Uncounted<I> {
    inner: I,
    emitted: u64,
}

impl<I> Uncounted<I> {
    pub fn new(inner: I) -> Self {
        Uncounted { inner, emitted: 0 }
    }
}

impl<I: Iterator<Item = Result<Vector>>> Iterator for Uncounted<I> {
    type Item = Result<Vector>;

    fn next(&mut self) -> Option<Result<Vector>> {
        let item = self.inner.next();
        if item.is_some() {
            self.emitted += 1;
        }
        item
    }
}

impl<I: Iterator<Item = Result<Vector>>> Enumeration for Uncounted<I> {
    fn work(&self) -> u64 {
        self.emitted
    }
}
