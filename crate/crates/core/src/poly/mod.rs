//! Monomials and pure-difference binomials over an arbitrary field.
//!
//! Every polynomial handled here is either a monomial `x^u` or a binomial
//! `x^u - x^v`. That class is closed under S-polynomials and reduction, so no
//! coefficient arithmetic is needed and the field characteristic never
//! matters. Signs are dropped: an ideal does not see them.

mod binomial;
mod groebner;
mod monomial;
mod order;
mod quotient;

pub use binomial::Binomial;
pub use groebner::{
    buchberger, buchberger_bounded, normal_form, normal_form_by, s_polynomial, GroebnerBasis, ReducerRule,
};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use quotient::{
    gastinger_check, gastinger_check_with, minimal_monomials, project_to_zero, quotient_dimension, GastingerOutcome,
    QuotientDim,
};
