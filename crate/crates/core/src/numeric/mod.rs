//! Exact coefficient arithmetic.
//!
//! [`Rational`] is the coefficient atom. [`ParamPoly`] holds polynomials in the
//! symbolic parameters (`a`, `b`, `d`, `h`, ...) with rational coefficients, and
//! [`ParamFraction`] is the field of fractions built on top of it. Every value is
//! kept in a canonical form, so structural equality is mathematical equality.

mod fraction;
mod gcd;
mod param_poly;

pub use fraction::ParamFraction;
pub use gcd::param_poly_gcd;
pub use param_poly::ParamPoly;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}
