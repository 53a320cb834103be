//! Structural invariants of numerical semigroups and of the binomial ideals
//! defining their monomial curves.
//!
//! The crate is organised in four layers:
//!
//! - [`semigroup`]: membership, Apéry sets, Frobenius and pseudo-Frobenius
//!   numbers, Cohen-Macaulay type.
//! - [`poly`]: monomials, pure-difference binomials, term orders, Buchberger's
//!   algorithm and standard-monomial counting (Gastinger's generation test).
//! - [`presentation`]: toric ideals of monomial curves, factorization graphs and
//!   the minimal number of generators μ.
//! - [`family`]: the concatenation families `S(n, e)` with e = 4, 5, their
//!   closed-form Apéry and pseudo-Frobenius sets, the explicit generating set
//!   for e = 5, and a verifier that checks all of them against the generic
//!   engines.

pub mod budget;
pub mod error;
pub mod family;
pub mod poly;
pub mod presentation;
pub mod semigroup;

pub use budget::Budget;
pub use error::{Error, Result};
pub use semigroup::{AperyTable, NumericalSemigroup, SemigroupInvariants};
