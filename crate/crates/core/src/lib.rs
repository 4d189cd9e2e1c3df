//! Mod-p homology of unordered configuration spaces of the plane.
//!
//! The crate computes `H_*(C_n(ℂ); F_p)` as a free graded commutative
//! algebra, the BV operator on it, the `S¹`- and `ℤ/p`-equivariant homology
//! of `C_n(ℂ)`, the fixed points of the `ℤ/p` rotation, and the homology of
//! `B_n/Z(B_n)` with sign coefficients. Every answer is a finite table of
//! dimensions over F_p, produced by exhaustive enumeration.

pub mod algebra;
pub mod brackets;
pub mod bv;
pub mod catalog;
pub mod enumeration;
pub mod error;
pub mod identities;
pub mod sign;

pub use algebra::{Element, FpMatrix, GenKind, Generator, Monomial, Prime};
pub use enumeration::{BigradedSeries, GradedDims};
pub use error::{Error, Result};
