//! Canonical text form of polynomials, in the grammar accepted by the parser.

use std::fmt;

use num_traits::{One, Signed};

use crate::numeric::{ParamFraction, ParamPoly, Rational};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderMode {
    /// The polynomial as stored; reduced-basis elements are monic.
    #[default]
    Monic,
    /// Scaled by [`Polynomial::clear_denominators`].
    Cleared,
}

fn power(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

fn powers(names: &[String], exps: &[u32]) -> Vec<String> {
    names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(n, &e)| power(n, e))
        .collect()
}

/// Sum of terms with `±` separators; `term` yields the sign and the unsigned body.
fn join_signed(parts: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in parts.enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A parameter polynomial with integer coefficients.
fn param_poly_string(p: &ParamPoly, names: &[String]) -> String {
    join_signed(p.terms().rev().map(|(e, c)| {
        let mut factors = Vec::new();
        let mag = c.abs();
        if !mag.is_one() {
            factors.push(mag.to_string());
        }
        factors.extend(powers(names, e));
        if factors.is_empty() {
            factors.push("1".into());
        }
        (c.is_negative(), factors.join("*"))
    }))
}

/// Single-term parameter polynomial with coefficient one and one parameter.
fn is_atom(p: &ParamPoly) -> bool {
    p.len() == 1
        && p.leading_term()
            .is_some_and(|(e, c)| c.is_one() && e.iter().filter(|&&k| k > 0).count() == 1)
}

/// Splits a nonzero coefficient into a sign and unsigned `numerator factors`
/// plus an optional denominator, both in expression syntax.
fn split_coefficient(c: &ParamFraction, names: &[String]) -> (bool, Vec<String>, Option<String>) {
    let (n, d) = (c.numer(), c.denom());
    let r: Rational = n.rational_content() / d.rational_content();
    let (np, dp) = (n.primitive(), d.primitive());
    let mut num = Vec::new();
    let p = r.numer().abs();
    if !p.is_one() {
        num.push(p.to_string());
    }
    if np.len() > 1 {
        let mut common = np.leading_term().expect("nonzero").0.clone();
        for (e, _) in np.terms() {
            for (m, &k) in common.iter_mut().zip(e) {
                *m = (*m).min(k);
            }
        }
        num.extend(powers(names, &common));
        let rest = np
            .exact_div(&ParamPoly::monomial(common, Rational::one()))
            .expect("monomial content divides");
        num.push(format!("({})", param_poly_string(&rest, names)));
    } else if !np.is_one() {
        num.push(param_poly_string(&np, names));
    }
    let q = r.denom();
    let den = if dp.is_one() {
        (!q.is_one()).then(|| q.to_string())
    } else if q.is_one() && is_atom(&dp) {
        Some(param_poly_string(&dp, names))
    } else {
        Some(format!(
            "({})",
            param_poly_string(&dp.scale(&Rational::from_integer(q.clone())), names)
        ))
    };
    (r.is_negative(), num, den)
}

/// Parameter coefficient as an expression over the given parameter names.
pub fn render_coefficient(c: &ParamFraction, names: &[String]) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let (negative, mut num, den) = split_coefficient(c, names);
    if num.is_empty() {
        num.push("1".into());
    }
    let mut body = num.join("*");
    if let Some(d) = den {
        body = format!("{body}/{d}");
    }
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Renders `p` in descending order of its monomial order; `parse(render(p)) = p`
/// in [`RenderMode::Monic`].
pub fn render(p: &Polynomial, mode: RenderMode) -> String {
    let p = match mode {
        RenderMode::Monic => p.clone(),
        RenderMode::Cleared => p.clear_denominators(),
    };
    let ctx = p.context();
    let (params, vars) = (ctx.parameters(), ctx.variables());
    join_signed(p.terms().iter().map(|t| {
        let (negative, mut factors, den) = split_coefficient(&t.coeff, params);
        factors.extend(powers(vars, t.monomial.exponents()));
        if factors.is_empty() {
            factors.push("1".into());
        }
        let mut body = factors.join("*");
        if let Some(d) = den {
            body = format!("{body}/{d}");
        }
        (negative, body)
    }))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, RenderMode::Monic))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_expression;
    use crate::poly::{MonomialOrder, VarContext};
    use std::sync::Arc;

    fn ctx() -> Arc<VarContext> {
        VarContext::new(&["x", "y", "z"], &["a", "b", "d", "h"]).unwrap()
    }

    fn roundtrip(s: &str) -> String {
        let c = ctx();
        let p = parse_expression(s, &c, MonomialOrder::Lex).unwrap();
        let out = render(&p, RenderMode::Monic);
        assert_eq!(parse_expression(&out, &c, MonomialOrder::Lex).unwrap(), p, "{out}");
        out
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(roundtrip("0"), "0");
        assert_eq!(roundtrip("1"), "1");
        assert_eq!(roundtrip("-3/4"), "-3/4");
        assert_eq!(roundtrip("z - x^2/a^2 - y^2/b^2"), "-x^2/a^2 - y^2/b^2 + z");
        assert_eq!(roundtrip("x + a/b*y - a*z"), "x + a*y/b - a*z");
        assert_eq!(roundtrip("-2*d*h/(a^2 + d^2)*x"), "-2*d*h*x/(a^2 + d^2)");
        assert_eq!(roundtrip("(a^2 + d^2)*z/(2*d*h)"), "(a^2 + d^2)*z/(2*d*h)");
        assert_eq!(roundtrip("x/(2*a)"), "x/(2*a)");
        assert_eq!(roundtrip("1/a"), "1/a");
        assert_eq!(roundtrip("-y/(a - b)"), "-y/(a - b)");
        assert_eq!(roundtrip("(b - a)*x"), "-(a - b)*x");
        assert_eq!(roundtrip("3*a*b^2*x*y^3/5"), "3*a*b^2*x*y^3/5");
        assert_eq!(roundtrip("(a^2*h + d^2*h)*z"), "h*(a^2 + d^2)*z");
        assert_eq!(roundtrip("x/(a^2*b + a*b^2)"), "x/(a^2*b + a*b^2)");
    }

    #[test]
    fn cleared_mode() {
        let c = ctx();
        let p = parse_expression("x + a/b*y - a*z", &c, MonomialOrder::Lex).unwrap();
        assert_eq!(render(&p, RenderMode::Cleared), "b*x + a*y - a*b*z");
        let q = parse_expression("y^2 - b*y*z + b^2/2*z^2 - b^2/2*z", &c, MonomialOrder::Lex).unwrap();
        assert_eq!(render(&q, RenderMode::Cleared), "2*y^2 - 2*b*y*z + b^2*z^2 - b^2*z");
    }

    #[test]
    fn coefficient_strings() {
        let names: Vec<String> = ["a", "b"].map(String::from).to_vec();
        let a = ParamFraction::param(2, 0);
        let b = ParamFraction::param(2, 1);
        assert_eq!(render_coefficient(&ParamFraction::zero(2), &names), "0");
        assert_eq!(render_coefficient(&(&a / &b), &names), "a/b");
        assert_eq!(render_coefficient(&-&b.inv().unwrap(), &names), "-1/b");
    }
}
