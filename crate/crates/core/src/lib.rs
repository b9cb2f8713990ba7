//! Exact Gröbner-basis engine over Q and Q(parameters), with a planarity
//! decision procedure for intersections of surfaces in three variables and the
//! egg-curve conoid plane-section study built on top of it.
//!
//! Layering, bottom up:
//!
//! - [`numeric`]: rationals, parameter polynomials and their fraction field
//! - [`poly`]: monomials, monomial orders, canonical multivariate polynomials
//! - [`division`]: the multivariate division algorithm and normal forms
//! - [`groebner`]: S-polynomials, Buchberger, minimal and reduced bases
//! - [`planarity`]: linear members of an ideal in x, y, z
//! - [`conoid`]: the conoid surface, its axis sections and conic analysis
//! - [`cli`]: expression syntax, system files, rendering and the command line

pub mod cli;
pub mod conoid;
pub mod division;
pub mod error;
pub mod groebner;
mod linalg;
pub mod numeric;
pub mod planarity;
pub mod poly;

pub use error::{Error, Result};
pub use numeric::{ParamFraction, ParamPoly, Rational};
pub use poly::{Monomial, MonomialOrder, Polynomial, Term, VarContext};
