//! Random polynomials and ideals for the property suites.

use std::sync::Arc;

use gbsurf::numeric::{ratio, ParamFraction};
use gbsurf::{Monomial, MonomialOrder, Polynomial, VarContext};
use proptest::prelude::*;

pub fn xyz() -> Arc<VarContext> {
    VarContext::new(&["x", "y", "z"], &[]).unwrap()
}

pub fn xyz_a() -> Arc<VarContext> {
    VarContext::new(&["x", "y", "z"], &["a"]).unwrap()
}

pub fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        Just(MonomialOrder::DegLex),
        Just(MonomialOrder::DegRevLex)
    ]
}

pub fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(Monomial::new)
}

pub fn nonzero_rational() -> impl Strategy<Value = gbsurf::Rational> {
    (-6i64..=6, 1i64..=4)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| ratio(n, d))
}

/// Coefficient in Q, or in Q(a) when the context has a parameter.
fn coefficient(nparams: usize) -> BoxedStrategy<ParamFraction> {
    if nparams == 0 {
        nonzero_rational()
            .prop_map(|c| ParamFraction::from_rational(0, c))
            .boxed()
    } else {
        (nonzero_rational(), 0u32..=2, prop::bool::ANY)
            .prop_map(move |(c, k, shift)| {
                let a = ParamFraction::param(nparams, 0);
                let base = ParamFraction::from_rational(nparams, c);
                let pk = a.pow(k);
                if shift {
                    &base * &(&pk + &ParamFraction::one(nparams))
                } else {
                    &base * &pk
                }
            })
            .boxed()
    }
}

/// Up to `max_terms` terms of degree at most `max_exp` in each variable.
pub fn polynomial(
    ctx: Arc<VarContext>,
    ord: MonomialOrder,
    max_terms: usize,
    max_exp: u32,
) -> impl Strategy<Value = Polynomial> {
    let n = ctx.nvars();
    let np = ctx.nparams();
    prop::collection::vec((monomial(n, max_exp), coefficient(np)), 0..=max_terms)
        .prop_map(move |ts| Polynomial::from_terms(&ctx, ord, ts))
}

pub fn nonzero_polynomial(
    ctx: Arc<VarContext>,
    ord: MonomialOrder,
    max_terms: usize,
    max_exp: u32,
) -> impl Strategy<Value = Polynomial> {
    polynomial(ctx, ord, max_terms, max_exp).prop_filter("nonzero", |p| !p.is_zero())
}

/// Exponents at most `max_exp` each and at most `max_deg` in total.
pub fn bounded_monomial(nvars: usize, max_exp: u32, max_deg: u32) -> impl Strategy<Value = Monomial> {
    monomial(nvars, max_exp).prop_filter("total degree", move |m| m.degree() <= max_deg)
}

/// One to three generators over Q in `x, y, z`, each with at most three terms
/// of total degree at most three. Lex bases of denser cubics and quartics can
/// take seconds, which the suites cannot afford per case.
pub fn system(ord: MonomialOrder) -> impl Strategy<Value = Vec<Polynomial>> {
    let generator = prop::collection::vec((bounded_monomial(3, 2, 3), nonzero_rational()), 1..=3)
        .prop_map(move |ts| {
            let ts: Vec<_> = ts
                .into_iter()
                .map(|(m, c)| (m, ParamFraction::from_rational(0, c)))
                .collect();
            Polynomial::from_terms(&xyz(), ord, ts)
        })
        .prop_filter("nonzero", |p| !p.is_zero());
    prop::collection::vec(generator, 1..=3)
}

/// A dividend and one to three divisors over Q(a), all under one random order.
pub fn division_case() -> impl Strategy<Value = (Polynomial, Vec<Polynomial>)> {
    order().prop_flat_map(|ord| {
        (
            nonzero_polynomial(xyz_a(), ord, 5, 3),
            prop::collection::vec(nonzero_polynomial(xyz_a(), ord, 3, 2), 1..=3),
        )
    })
}
