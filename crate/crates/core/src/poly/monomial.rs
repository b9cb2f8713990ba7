use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Power product `x₁^α₁ ⋯ xₙ^αₙ`, one exponent per context variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// True when the monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders. Lex follows the variable order of the context; the graded
/// orders break degree ties by lex and by reverse lex respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Lex,
    DegLex,
    DegRevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => u.0.cmp(&v.0),
            MonomialOrder::DegLex => u.degree().cmp(&v.degree()).then_with(|| u.0.cmp(&v.0)),
            MonomialOrder::DegRevLex => u.degree().cmp(&v.degree()).then_with(|| {
                for (a, b) in u.0.iter().zip(&v.0).rev() {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "grevlex",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "lex" | "plex" => Ok(MonomialOrder::Lex),
            "deglex" => Ok(MonomialOrder::DegLex),
            "grevlex" | "degrevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(Error::usage(format!("unknown monomial order `{other}`"))),
        }
    }
}

/// Compares two monomials of the same context under `ord`.
pub fn compare_monomials(u: &Monomial, v: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if u.nvars() != v.nvars() {
        return Err(Error::ContextMismatch);
    }
    Ok(ord.cmp(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_examples() {
        let ord = MonomialOrder::Lex;
        assert_eq!(compare_monomials(&m(&[2, 1]), &m(&[1, 3]), ord), Ok(Ordering::Greater));
        assert_eq!(
            compare_monomials(&m(&[1, 1, 1]), &m(&[1, 1, 1]), ord),
            Ok(Ordering::Equal)
        );
        assert_eq!(compare_monomials(&m(&[0, 5]), &m(&[1, 0]), ord), Ok(Ordering::Less));
        assert_eq!(
            compare_monomials(&m(&[1]), &m(&[1, 0]), ord),
            Err(Error::ContextMismatch)
        );
    }

    #[test]
    fn graded_orders_differ_from_lex() {
        // x vs y^5
        assert_eq!(MonomialOrder::DegLex.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
        // x z vs y^2 under grevlex (x > y > z)
        assert_eq!(
            MonomialOrder::DegRevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::DegLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(m(&[1, 1]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 0, 1]).lcm(&m(&[1, 3, 0])), m(&[2, 3, 1]));
        assert_eq!(m(&[2, 1]).checked_div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 3])));
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::DegLex),
            Just(MonomialOrder::DegRevLex)
        ]
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..6, 3).prop_map(Monomial::new)
    }

    proptest! {
        #[test]
        fn order_axioms(ord in orders(), u in mono(), v in mono(), w in mono()) {
            let c = ord.cmp(&u, &v);
            prop_assert_eq!(c, ord.cmp(&v, &u).reverse());
            prop_assert_eq!(c == Ordering::Equal, u == v);
            prop_assert_eq!(ord.cmp(&u.mul(&w), &v.mul(&w)), c);
            prop_assert_ne!(ord.cmp(&u, &Monomial::one(3)), Ordering::Less);
        }
    }
}
