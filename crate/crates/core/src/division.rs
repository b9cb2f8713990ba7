//! Multivariate division with remainder and normal forms.

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::poly::Polynomial;

/// `f = Σ aᵢ fᵢ + r` for a fixed, ordered divisor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    pub divisors: Vec<Polynomial>,
}

impl DivisionResult {
    /// `Σ aᵢ fᵢ + r`, which must equal the dividend.
    pub fn reconstruct(&self) -> Polynomial {
        self.quotients
            .iter()
            .zip(&self.divisors)
            .fold(self.remainder.clone(), |acc, (a, f)| &acc + &(a * f))
    }
}

/// Divides `f` by the ordered list `divisors` under `f`'s monomial order.
///
/// Each step cancels the leading term of the running polynomial with the first
/// divisor (in list order) whose leading monomial divides it; if none does, the
/// leading term moves to the remainder.
pub fn multivariate_divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<DivisionResult> {
    for g in divisors {
        if !f.same_ring(g) {
            return Err(Error::ContextMismatch);
        }
        if g.is_zero() {
            return Err(Error::usage("division by the zero polynomial"));
        }
    }
    let ctx = f.context();
    let ord = f.order();
    let leads: Vec<_> = divisors
        .iter()
        .map(|g| {
            let t = g.leading_term().expect("nonzero");
            (t.monomial.clone(), t.coeff.inv().expect("nonzero"))
        })
        .collect();
    let mut quotient_terms: Vec<Vec<_>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some(lt) = p.leading_term().cloned() {
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (m, inv))| lt.monomial.checked_div(m).map(|q| (i, q, inv)));
        match hit {
            Some((i, qm, inv)) => {
                let qc = &lt.coeff * inv;
                p = p.sub_mul_term(&qc, &qm, &divisors[i]);
                quotient_terms[i].push((qm, qc));
            }
            None => {
                p.pop_leading();
                remainder.push((lt.monomial, lt.coeff));
            }
        }
    }
    Ok(DivisionResult {
        quotients: quotient_terms
            .into_iter()
            .map(|ts| Polynomial::from_terms(ctx, ord, ts))
            .collect(),
        remainder: Polynomial::from_terms(ctx, ord, remainder),
        divisors: divisors.to_vec(),
    })
}

/// Remainder of `f` on division by `divisors`.
pub fn remainder(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    Ok(multivariate_divide(f, divisors)?.remainder)
}

/// Normal form of `f` modulo a Gröbner basis. For a Gröbner basis this does
/// not depend on the listed order of the elements.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    let f = f.with_order(basis.order());
    remainder(&f, basis.elements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_expression;
    use crate::poly::{MonomialOrder, VarContext};
    use std::sync::Arc;

    fn ctx(vars: &[&str]) -> Arc<VarContext> {
        VarContext::new(vars, &[]).unwrap()
    }

    fn e(ctx: &Arc<VarContext>, s: &str) -> Polynomial {
        parse_expression(s, ctx, MonomialOrder::Lex).unwrap()
    }

    #[test]
    fn dividing_by_itself() {
        let c = ctx(&["x", "y"]);
        let f = e(&c, "x^2*y - 3*y + 1");
        let res = multivariate_divide(&f, std::slice::from_ref(&f)).unwrap();
        assert_eq!(res.quotients, vec![e(&c, "1")]);
        assert!(res.remainder.is_zero());
    }

    #[test]
    fn two_divisors_textbook_case() {
        let c = ctx(&["x", "y"]);
        let f = e(&c, "x^2*y + x*y^2 + y^2");
        let fs = [e(&c, "x*y - 1"), e(&c, "y^2 - 1")];
        let res = multivariate_divide(&f, &fs).unwrap();
        assert_eq!(res.quotients, vec![e(&c, "x + y"), e(&c, "1")]);
        assert_eq!(res.remainder, e(&c, "x + y + 1"));
        // oracle: expand a1 f1 + a2 f2 + r by plain multiplication
        let rebuilt = &(&(&e(&c, "x + y") * &fs[0]) + &fs[1]) + &e(&c, "x + y + 1");
        assert_eq!(rebuilt, f);
        for t in res.remainder.terms() {
            for g in &fs {
                assert!(!g.leading_monomial().unwrap().divides(&t.monomial));
            }
        }
    }

    #[test]
    fn planar_combination_of_example_system() {
        let c = ctx(&["x", "y", "z"]);
        let f = e(&c, "x + y*z + y - z^4 - 4");
        let g = e(&c, "y - z^3 - 1");
        assert_eq!(&f - &(&e(&c, "z") * &g), e(&c, "x + y + z - 4"));
        let res = multivariate_divide(&f, std::slice::from_ref(&g)).unwrap();
        assert_eq!(res.reconstruct(), f);
        assert_eq!(res.remainder, e(&c, "x + z^3 + z - 3"));
    }

    #[test]
    fn empty_divisor_list_and_zero_divisor() {
        let c = ctx(&["x"]);
        let f = e(&c, "x^2 + 1");
        let res = multivariate_divide(&f, &[]).unwrap();
        assert!(res.quotients.is_empty());
        assert_eq!(res.remainder, f);
        assert!(multivariate_divide(&f, &[e(&c, "0")]).is_err());
    }

    #[test]
    fn first_divisor_in_list_wins() {
        let c = ctx(&["x", "y"]);
        let f = e(&c, "x*y");
        let a = multivariate_divide(&f, &[e(&c, "x - 1"), e(&c, "y - 1")]).unwrap();
        let b = multivariate_divide(&f, &[e(&c, "y - 1"), e(&c, "x - 1")]).unwrap();
        assert_eq!(a.quotients[0], e(&c, "y"));
        assert_eq!(b.quotients[0], e(&c, "x"));
        assert_eq!(a.remainder, e(&c, "1"));
        assert_eq!(b.remainder, e(&c, "1"));
    }
}
