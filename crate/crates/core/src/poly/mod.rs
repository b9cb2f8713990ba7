//! Monomials, monomial orders and canonical multivariate polynomials whose
//! coefficients live in Q(parameters).

mod context;
mod monomial;
mod polynomial;

pub use context::VarContext;
pub use monomial::{compare_monomials, Monomial, MonomialOrder};
pub use polynomial::{LeadingParts, Polynomial, Term};
