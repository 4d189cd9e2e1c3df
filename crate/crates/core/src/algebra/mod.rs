//! Exact arithmetic over F_p, generators, canonical monomials and dense
//! F_p linear algebra.

pub mod field;
pub mod generator;
pub mod matrix;
pub mod monomial;

pub use field::Prime;
pub use generator::{GenKind, Generator};
pub use matrix::{FpMatrix, Reduction};
pub use monomial::{monomial_mul, Element, Monomial, Product};
