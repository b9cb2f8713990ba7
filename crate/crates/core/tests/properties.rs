mod common;

use common::properties;
use common::strategies::*;
use gbsurf::cli::{parse_expression, render, RenderMode};
use gbsurf::numeric::rat;
use gbsurf::MonomialOrder;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn division_reconstructs_dividend((f, divs) in division_case()) {
        properties::division(&f, &divs)?;
    }

    #[test]
    fn monomial_orders_are_admissible(
        ord in order(),
        u in monomial(3, 4), v in monomial(3, 4), w in monomial(3, 4),
    ) {
        properties::order_axioms(ord, &u, &v, &w)?;
    }

    #[test]
    fn reduced_basis_is_invariant(
        gens in system(MonomialOrder::Lex),
        perm in prop::collection::vec(0usize..3, 3),
        scales in prop::collection::vec(nonzero_rational(), 3),
    ) {
        properties::basis_invariance(&gens, &perm, &scales)?;
    }

    #[test]
    fn graded_reduced_basis_is_invariant(
        gens in system(MonomialOrder::DegRevLex),
        perm in prop::collection::vec(0usize..3, 3),
        scales in prop::collection::vec(nonzero_rational(), 3),
    ) {
        properties::basis_invariance(&gens, &perm, &scales)?;
    }

    #[test]
    fn normal_form_is_linear(
        gens in system(MonomialOrder::Lex),
        f in polynomial(xyz(), MonomialOrder::Lex, 4, 3),
        g in polynomial(xyz(), MonomialOrder::Lex, 4, 3),
        alpha in nonzero_rational(),
        beta in nonzero_rational(),
    ) {
        properties::normal_form_linearity(&gens, &f, &g, &alpha, &beta)?;
    }

    #[test]
    fn render_then_parse_is_identity(p in polynomial(xyz_a(), MonomialOrder::Lex, 6, 3)) {
        let ctx = p.context().clone();
        for mode in [RenderMode::Monic, RenderMode::Cleared] {
            let text = render(&p, mode);
            let back = parse_expression(&text, &ctx, MonomialOrder::Lex).unwrap();
            if mode == RenderMode::Monic {
                prop_assert_eq!(&back, &p);
            } else {
                prop_assert_eq!(back, p.clear_denominators());
            }
        }
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        f in polynomial(xyz_a(), MonomialOrder::Lex, 4, 2),
        g in polynomial(xyz_a(), MonomialOrder::Lex, 4, 2),
        r in polynomial(xyz_a(), MonomialOrder::Lex, 3, 2),
        var in 0usize..3,
    ) {
        let s = |p: &gbsurf::Polynomial| p.substitute(var, &r).unwrap();
        prop_assert_eq!(s(&(&f + &g)), &s(&f) + &s(&g));
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
    }

    #[test]
    fn evaluation_commutes_with_multiplication(
        f in polynomial(xyz(), MonomialOrder::Lex, 4, 3),
        g in polynomial(xyz(), MonomialOrder::Lex, 4, 3),
        pt in prop::collection::vec(-3i64..=3, 3),
    ) {
        let pt: Vec<_> = pt.into_iter().map(rat).collect();
        let prod = (&f * &g).eval(&pt, &[]).unwrap();
        prop_assert_eq!(prod, f.eval(&pt, &[]).unwrap() * g.eval(&pt, &[]).unwrap());
    }

    #[test]
    fn clear_denominators_is_a_nonzero_multiple(p in nonzero_polynomial(xyz_a(), MonomialOrder::Lex, 5, 2)) {
        let c = p.clear_denominators();
        let lambda = c.leading_coefficient().unwrap() / p.leading_coefficient().unwrap();
        prop_assert!(!lambda.is_zero());
        prop_assert_eq!(p.scale(&lambda), c.clone());
        prop_assert!(c.terms().iter().all(|t| t.coeff.denom().is_one()));
    }
}
