//! Multivariate gcd over Q by recursive content / primitive-part splitting and
//! a primitive pseudo-remainder sequence in one parameter at a time.

use super::ParamPoly;

/// Greatest common divisor of two parameter polynomials, normalized to integer
/// coefficients with content 1 and a positive leading coefficient.
///
/// `gcd(p, 0)` is the normalized `p`; `gcd(0, 0)` is `0`.
pub fn param_poly_gcd(p: &ParamPoly, q: &ParamPoly) -> ParamPoly {
    assert_eq!(p.nparams(), q.nparams(), "parameter count mismatch");
    gcd_rec(p, q)
}

fn gcd_rec(p: &ParamPoly, q: &ParamPoly) -> ParamPoly {
    if p.is_zero() {
        return q.primitive();
    }
    if q.is_zero() {
        return p.primitive();
    }
    let n = p.nparams();
    if p.is_constant() || q.is_constant() {
        return ParamPoly::one(n);
    }
    if p.len() == 1 {
        return monomial_gcd(p, q);
    }
    if q.len() == 1 {
        return monomial_gcd(q, p);
    }
    if p == q {
        return p.primitive();
    }

    let Some(v) = (0..n).find(|&i| p.degree_in(i) > 0 || q.degree_in(i) > 0) else {
        return ParamPoly::one(n);
    };
    let (dp, dq) = (p.degree_in(v), q.degree_in(v));
    if dp == 0 {
        return gcd_rec(p, &content_in(q, v));
    }
    if dq == 0 {
        return gcd_rec(&content_in(p, v), q);
    }

    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let c = gcd_rec(&cp, &cq);
    let pp = p.exact_div(&cp).expect("content divides").primitive();
    let qp = q.exact_div(&cq).expect("content divides").primitive();

    let (mut a, mut b) = if dp >= dq { (pp, qp) } else { (qp, pp) };
    let g = loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            break b;
        }
        if r.degree_in(v) == 0 {
            break ParamPoly::one(n);
        }
        let cr = content_in(&r, v);
        a = b;
        b = r.exact_div(&cr).expect("content divides").primitive();
    };
    let g = g.exact_div(&content_in(&g, v)).expect("content divides");
    (&c * &g).primitive()
}

/// gcd of a single-term polynomial `m` with `q`: the power product of the
/// minimal exponents.
fn monomial_gcd(m: &ParamPoly, q: &ParamPoly) -> ParamPoly {
    let (me, _) = m.leading_term().expect("nonzero");
    let mut e = me.clone();
    for (qe, _) in q.terms() {
        for (x, &y) in e.iter_mut().zip(qe) {
            *x = (*x).min(y);
        }
    }
    ParamPoly::monomial(e, num_traits::One::one())
}

/// Content of `p` as a polynomial in parameter `v`: gcd of its coefficients.
fn content_in(p: &ParamPoly, v: usize) -> ParamPoly {
    let mut acc = ParamPoly::zero(p.nparams());
    for c in p.univariate_coeffs(v).into_iter().rev() {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Pseudo-remainder of `a` by `b` with respect to parameter `v`.
fn pseudo_remainder(a: &ParamPoly, b: &ParamPoly, v: usize) -> ParamPoly {
    let db = b.degree_in(v);
    let lb = b.univariate_coeffs(v).pop().expect("nonzero");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.univariate_coeffs(v).pop().expect("nonzero");
        r = &(&lb * &r) - &(&lr * &b.shift(v, dr - db));
    }
    r
}
