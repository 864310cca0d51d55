//! Membership testing and enumeration of closures of vector families under
//! coefficient-wise operations.
//!
//! Given a finite domain `D`, a set of operations `F` on `D` and a family
//! `S ⊆ D^n`, the closure `Cl_F(S)` is the least superset of `S` closed under
//! every `f ∈ F` applied coordinate by coordinate. This crate decides
//! `v ∈ Cl_F(S)` and lists `Cl_F(S)` with bounded delay for every boolean
//! clone of the reduced Post lattice, for near-unanimity and commutative
//! group operations over any domain, and by saturation otherwise.
//!
//! ```
//! use polyclose::{resolve, CloneSpec, Family, Strategy, Vector};
//!
//! let s = Family::parse_members(2, &["1101", "0110", "1010"]).unwrap();
//! let union: CloneSpec = "E2 dual".parse().unwrap();
//! let problem = resolve(&union, &s).unwrap();
//! assert!(problem.decide(&Vector::parse("1110", 2).unwrap()).unwrap());
//! assert_eq!(problem.enumerate(Strategy::Fast).unwrap().count(), 5);
//! ```

pub mod bits;
pub mod clones;
pub mod decide;
pub mod delay;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod generate;
pub mod multidomain;
pub mod op;
pub mod oracle;
pub mod vector;

pub use bits::BitVector;
pub use clones::{resolve, resolve_with, Algorithm, Base, CloneSpec, Modifiers, ResolveOptions, ResolvedProblem, Strategy};
pub use enumerate::Enumeration;
pub use error::{Error, Result};
pub use op::{builtin, Operation};
pub use vector::{Family, IndexSet, Vector};
