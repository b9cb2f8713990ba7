//! Property checks shared by the proptest suites and the acceptance runner.

use std::cmp::Ordering;

use gbsurf::division::{multivariate_divide, normal_form};
use gbsurf::groebner::{is_groebner, reduced_groebner_basis, IdealSpec};
use gbsurf::numeric::ParamFraction;
use gbsurf::{Monomial, MonomialOrder, Polynomial, Rational};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// `f = Σ qᵢ gᵢ + r` and no term of `r` is divisible by any `LT(gᵢ)`.
pub fn division(f: &Polynomial, divisors: &[Polynomial]) -> Result<(), TestCaseError> {
    let d = multivariate_divide(f, divisors).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&d.reconstruct(), f);
    for t in d.remainder.terms() {
        for g in divisors {
            let lm = g.leading_monomial().unwrap();
            prop_assert!(
                !lm.divides(&t.monomial),
                "remainder term {:?} divisible by {:?}",
                t.monomial,
                lm
            );
        }
    }
    Ok(())
}

/// Totality, antisymmetry, transitivity, multiplicativity, and `1` minimal.
pub fn order_axioms(ord: MonomialOrder, u: &Monomial, v: &Monomial, w: &Monomial) -> Result<(), TestCaseError> {
    let uv = ord.cmp(u, v);
    prop_assert_eq!(uv, ord.cmp(v, u).reverse());
    prop_assert_eq!(uv == Ordering::Equal, u == v);
    if uv == Ordering::Less && ord.cmp(v, w) == Ordering::Less {
        prop_assert_eq!(ord.cmp(u, w), Ordering::Less);
    }
    prop_assert_eq!(ord.cmp(&u.mul(w), &v.mul(w)), uv);
    let one = Monomial::one(u.nvars());
    prop_assert_ne!(ord.cmp(u, &one), Ordering::Less);
    if !u.is_one() {
        prop_assert_eq!(ord.cmp(u, &one), Ordering::Greater);
    }
    Ok(())
}

/// The reduced basis ignores generator order and nonzero rescaling, is a
/// Gröbner basis, and reduces every generator to zero.
pub fn basis_invariance(gens: &[Polynomial], perm_seed: &[usize], scales: &[Rational]) -> Result<(), TestCaseError> {
    let ctx = gens[0].context().clone();
    let ord = gens[0].order();
    let reference = reduced_groebner_basis(&IdealSpec::new(&ctx, ord, gens.to_vec()).unwrap());
    prop_assert!(is_groebner(reference.elements(), ord));
    for g in gens {
        prop_assert!(
            normal_form(g, &reference).unwrap().is_zero(),
            "generator {} not in the ideal",
            g
        );
    }
    let mut shuffled = gens.to_vec();
    for (i, &k) in perm_seed.iter().enumerate().take(shuffled.len()) {
        let j = k % shuffled.len();
        shuffled.swap(i, j);
    }
    let rescaled: Vec<Polynomial> = shuffled
        .iter()
        .zip(scales.iter().cycle())
        .map(|(g, c)| g.scale(&ParamFraction::from_rational(ctx.nparams(), c.clone())))
        .collect();
    let other = reduced_groebner_basis(&IdealSpec::new(&ctx, ord, rescaled).unwrap());
    prop_assert_eq!(reference.elements(), other.elements());
    Ok(())
}

/// `NF(αf + βg) = α NF(f) + β NF(g)` modulo a reduced basis.
pub fn normal_form_linearity(
    gens: &[Polynomial],
    f: &Polynomial,
    g: &Polynomial,
    alpha: &Rational,
    beta: &Rational,
) -> Result<(), TestCaseError> {
    let ctx = gens[0].context().clone();
    let ord = gens[0].order();
    let basis = reduced_groebner_basis(&IdealSpec::new(&ctx, ord, gens.to_vec()).unwrap());
    prop_assert!(is_groebner(basis.elements(), ord));
    let k = |c: &Rational| ParamFraction::from_rational(ctx.nparams(), c.clone());
    let combo = &f.scale(&k(alpha)) + &g.scale(&k(beta));
    let lhs = normal_form(&combo, &basis).unwrap();
    let rhs = &normal_form(f, &basis).unwrap().scale(&k(alpha)) + &normal_form(g, &basis).unwrap().scale(&k(beta));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}
