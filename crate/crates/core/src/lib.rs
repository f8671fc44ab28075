//! Exact enumeration of Raney numbers and the plane-tree families they count.
//!
//! The crate is split along the objects it handles:
//!
//! * [`numbers`]: closed forms and summation formulas for Raney and p-Catalan
//!   numbers, generic over the integer type (see [`Count`]).
//! * [`trees`]: plane rooted trees, their preorder child-count codes and the
//!   full p-ary tree generator.
//! * [`coral`]: (p,r)-coral diagrams, enumerated by tiers and by tuples of
//!   p-ary trees, together with the two explicit bijections.
//! * [`webs`]: source/sink orientations and the oriented tree webs.
//! * [`records`] and [`verify`]: the line format and the identity suites used
//!   by the command-line front end.
//!
//! Every count is an [`ExactNat`]; the machine-integer instantiations of the
//! formulas are there for small parameters and for cross-checking.

pub mod coral;
pub mod error;
pub mod numbers;
pub mod records;
pub mod trees;
pub mod verify;
pub mod webs;

pub use coral::CoralDiagram;
pub use error::{Error, Result};
pub use numbers::{Composition, Count, WeakComposition};
pub use trees::{CanonicalCode, PlaneTree};
pub use webs::{BoundaryWord, OrientedTreeWeb, Sign, VertexClass};

/// Arbitrary-precision nonnegative integer used for every count.
pub type ExactNat = num_bigint::BigUint;

/// 64-bit instantiation of the formulas; overflows past roughly `C(60, 30)`.
pub type SmallNat = u64;

/// 128-bit instantiation of the formulas.
pub type WideNat = u128;

/// Default cap on the number of unfiltered trees a brute-force filter may walk.
pub const DEFAULT_SIZE_CAP: u64 = 1_000_000;
