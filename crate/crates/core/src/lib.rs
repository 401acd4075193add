//! Symbolic computation in the Leavitt path algebra W(l) of the graph with
//! one vertex and l loops.
//!
//! * [`algebra`]: normal forms, products and the monomial basis.
//! * [`derivation`]: derivations given by generator values, their Leibniz
//!   extension and the identities they must satisfy.
//! * [`inner`]: inner derivations, obstruction coefficients and an exact
//!   witness search.
//! * [`oracle`]: randomized rewriting used to cross-check the normal form.

pub mod algebra;
pub mod derivation;
mod error;
pub mod inner;
pub mod linalg;
pub mod oracle;
pub mod report;

pub use algebra::{
    enumerate_basis, is_basis_monomial, multiply, reduce_word, AlgebraConfig, BasisMonomial, Element,
    Generator, Rational, Word,
};
pub use derivation::{CoefficientTable, DerivationSpec};
pub use error::{Error, Result};
pub use inner::{
    ad, classify_by_obstruction, find_inner_witness, obstruction_coefficients, Classification,
    ObstructionReport, WitnessProblem,
};
pub use report::{Equation, Residual, Violation, ViolationReport};
