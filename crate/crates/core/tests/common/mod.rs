//! Reference polynomials transcribed by hand, shared by the integration and
//! acceptance targets.
#![allow(dead_code)]

use std::sync::Arc;

use gbsurf::cli::parse_expression;
use gbsurf::conoid::projection_context;
use gbsurf::{MonomialOrder, Polynomial, VarContext};

pub fn parse(ctx: &Arc<VarContext>, s: &str) -> Polynomial {
    parse_expression(s, ctx, MonomialOrder::Lex).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// The `x−y` projection (plane with `C ≠ 0`), term by term as printed.
pub const XY_PROJECTION_AS_PRINTED: &str = "\
    (A^2*a^2/C^2 + A^2*d^2/C^2 + 2*d*h*A/C)*x^2*y^2 \
    + (2*A*B*d^2/C^2 + 2*d*h*B/C + 2*A*B*a^2/C^2)*x*y^3 \
    + (B^2*d^2/C^2 + B^2*a^2/C^2)*y^4 \
    + (2*A*h*a^2/C + 2*A*D*d^2/C^2 + 2*A*h*d^2/C + 2*d*h*D/C + 2*d*h^2 + 2*A*D*a^2/C^2)*x*y^2 \
    + (2*B*D*d^2/C^2 + 2*B*D*a^2/C^2 + 2*B*h*a^2/C + 2*B*h*d^2/C)*y^3 \
    + (h^2*b^2 - A^2*a^2*b^2/C^2)*x^2 \
    + 2*A*B*a^2*b^2/C^2*x*y \
    + (2*D*h*a^2/C + h^2*a^2 - B^2*a^2*b^2/C^2 + D^2*a^2/C^2 + h^2*d^2 + 2*D*h*d^2/C + D^2*d^2/C^2)*y^2 \
    - (2*A*D*a^2*b^2/C^2 + 2*A*h*a^2*b^2/C)*x \
    - (2*B*h*a^2*b^2/C + 2*B*D*a^2*b^2/C^2)*y \
    - h^2*a^2*b^2 - 2*D*h*a^2*b^2/C - D^2*a^2*b^2/C^2";

/// The same projection with the sign of the `x y` term reversed, as
/// `−a²b²(z − h)²` dictates.
pub const XY_PROJECTION_CORRECTED: &str = "\
    (A^2*a^2/C^2 + A^2*d^2/C^2 + 2*d*h*A/C)*x^2*y^2 \
    + (2*A*B*d^2/C^2 + 2*d*h*B/C + 2*A*B*a^2/C^2)*x*y^3 \
    + (B^2*d^2/C^2 + B^2*a^2/C^2)*y^4 \
    + (2*A*h*a^2/C + 2*A*D*d^2/C^2 + 2*A*h*d^2/C + 2*d*h*D/C + 2*d*h^2 + 2*A*D*a^2/C^2)*x*y^2 \
    + (2*B*D*d^2/C^2 + 2*B*D*a^2/C^2 + 2*B*h*a^2/C + 2*B*h*d^2/C)*y^3 \
    + (h^2*b^2 - A^2*a^2*b^2/C^2)*x^2 \
    - 2*A*B*a^2*b^2/C^2*x*y \
    + (2*D*h*a^2/C + h^2*a^2 - B^2*a^2*b^2/C^2 + D^2*a^2/C^2 + h^2*d^2 + 2*D*h*d^2/C + D^2*d^2/C^2)*y^2 \
    - (2*A*D*a^2*b^2/C^2 + 2*A*h*a^2*b^2/C)*x \
    - (2*B*h*a^2*b^2/C + 2*B*D*a^2*b^2/C^2)*y \
    - h^2*a^2*b^2 - 2*D*h*a^2*b^2/C - D^2*a^2*b^2/C^2";

/// The `x−z` projection (`C = 0`, `B ≠ 0`), term by term as printed.
pub const XZ_PROJECTION_AS_PRINTED: &str = "\
    -2*d*h*A^2/B^2*x^3*z \
    + (a^2*A^2/B^2 + d^2*A^2/B^2)*x^2*z^2 \
    + 2*d*h^2*A^2/B^2*x^3 \
    - (4*d*h*A*D/B^2 + 2*h*a^2*A^2/B^2 + 2*h*d^2*A^2/B^2)*x^2*z \
    + (2*a^2*A*D/B^2 + 2*d^2*A*D/B^2)*x*z^2 \
    + (4*d*h^2*A*D/B^2 + h^2*a^2*A^2/B^2 + h^2*b^2 + h^2*d^2*A^2/B^2)*x^2 \
    - (2*d*h*D/B^2 + 4*h*d^2*A*D/B^2 + 4*h*a^2*A*D/B^2)*x*z \
    + (a^2*D/B^2 - a^2*b^2 + d^2*D/B^2)*z^2 \
    + (2*h^2*d^2*A*D/B^2 + 2*d*h^2*D/B^2 + 2*h^2*a^2*A*D/B^2)*x \
    + (2*h*a^2*b^2 - 2*h*a^2*D/B^2 - 2*h*d^2*D/B^2)*z \
    + (h^2*d^2*D/B^2 + h^2*a^2*D/B^2 - h^2*a^2*b^2)";

/// The same projection with `D` read as `D^2` in every term that comes from
/// the `D^2/B^2` part of `y^2 = (A x + D)^2 / B^2`.
pub const XZ_PROJECTION_CORRECTED: &str = "\
    -2*d*h*A^2/B^2*x^3*z \
    + (a^2*A^2/B^2 + d^2*A^2/B^2)*x^2*z^2 \
    + 2*d*h^2*A^2/B^2*x^3 \
    - (4*d*h*A*D/B^2 + 2*h*a^2*A^2/B^2 + 2*h*d^2*A^2/B^2)*x^2*z \
    + (2*a^2*A*D/B^2 + 2*d^2*A*D/B^2)*x*z^2 \
    + (4*d*h^2*A*D/B^2 + h^2*a^2*A^2/B^2 + h^2*b^2 + h^2*d^2*A^2/B^2)*x^2 \
    - (2*d*h*D^2/B^2 + 4*h*d^2*A*D/B^2 + 4*h*a^2*A*D/B^2)*x*z \
    + (a^2*D^2/B^2 - a^2*b^2 + d^2*D^2/B^2)*z^2 \
    + (2*h^2*d^2*A*D/B^2 + 2*d*h^2*D^2/B^2 + 2*h^2*a^2*A*D/B^2)*x \
    + (2*h*a^2*b^2 - 2*h*a^2*D^2/B^2 - 2*h*d^2*D^2/B^2)*z \
    + (h^2*d^2*D^2/B^2 + h^2*a^2*D^2/B^2 - h^2*a^2*b^2)";

/// Monomials of `x, y, z` whose coefficients differ between two polynomials.
pub fn differing_monomials(p: &Polynomial, q: &Polynomial) -> Vec<String> {
    let diff = p - q;
    let vars = diff.context().variables().to_vec();
    diff.terms()
        .iter()
        .map(|t| {
            let parts: Vec<String> = vars
                .iter()
                .zip(t.monomial.exponents())
                .filter(|(_, &e)| e > 0)
                .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("*")
            }
        })
        .collect()
}

pub fn projection(s: &str) -> Polynomial {
    parse(&projection_context(), s)
}

pub mod properties;
pub mod strategies;
