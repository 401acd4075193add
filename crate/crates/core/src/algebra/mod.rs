//! The algebra W(l): one vertex `v`, loops `e1..el` and their duals `e1'..el'`.
//!
//! Elements are kept in normal form with respect to the rewriting system
//!
//! ```text
//! vv -> v,  ve -> e,  ev -> e,  ve' -> e',  e'v -> e'
//! ei' ej -> delta(i,j) v
//! e1 e1' -> v - (e2 e2' + ... + el el')
//! ```
//!
//! whose irreducible words (the vertex, paths, dual paths and mixed words
//! `w h'` not ending in `e1 e1'`) form a linear basis.

mod basis;
mod config;
mod element;
mod monomial;
mod reduce;

pub use basis::{enumerate_basis, is_basis_monomial};
pub use config::{AlgebraConfig, Generator, Word, SPECIAL_EDGE};
pub use element::{Element, Rational};
pub use monomial::BasisMonomial;
pub use reduce::{multiply, reduce_word};

pub(crate) use reduce::mul_unchecked;
