use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{param_poly_gcd, ParamPoly, Rational};
use crate::error::{Error, Result};

/// Element of Q(parameters): a reduced ratio of two parameter polynomials.
///
/// Canonical form: numerator and denominator are coprime, the denominator is
/// monic under lex on the parameters (so its leading coefficient is positive),
/// and zero is `0/1`. Two fractions are equal as rational functions iff their
/// representations are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamFraction {
    num: ParamPoly,
    den: ParamPoly,
}

impl ParamFraction {
    pub fn zero(nparams: usize) -> Self {
        ParamFraction {
            num: ParamPoly::zero(nparams),
            den: ParamPoly::one(nparams),
        }
    }

    pub fn one(nparams: usize) -> Self {
        Self::from_rational(nparams, Rational::one())
    }

    pub fn from_rational(nparams: usize, c: Rational) -> Self {
        ParamFraction {
            num: ParamPoly::constant(nparams, c),
            den: ParamPoly::one(nparams),
        }
    }

    pub fn from_int(nparams: usize, c: i64) -> Self {
        Self::from_rational(nparams, super::rat(c))
    }

    pub fn param(nparams: usize, i: usize) -> Self {
        Self::from_poly(ParamPoly::param(nparams, i))
    }

    pub fn from_poly(num: ParamPoly) -> Self {
        let n = num.nparams();
        ParamFraction {
            num,
            den: ParamPoly::one(n),
        }
    }

    /// Canonical representative of `n / d`.
    pub fn new(n: ParamPoly, d: ParamPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        assert_eq!(n.nparams(), d.nparams(), "parameter count mismatch");
        Ok(Self::normalize(n, d))
    }

    fn normalize(n: ParamPoly, d: ParamPoly) -> Self {
        if n.is_zero() {
            return Self::zero(n.nparams());
        }
        if let Some(c) = d.as_constant() {
            return ParamFraction {
                num: n.scale(&c.recip()),
                den: ParamPoly::one(d.nparams()),
            };
        }
        let g = param_poly_gcd(&n, &d);
        let (n, d) = if g.is_one() {
            (n, d)
        } else {
            (
                n.exact_div(&g).expect("gcd divides numerator"),
                d.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = d.leading_coefficient().expect("nonzero").clone();
        if lc.is_one() {
            ParamFraction { num: n, den: d }
        } else {
            let inv = lc.recip();
            ParamFraction {
                num: n.scale(&inv),
                den: d.scale(&inv),
            }
        }
    }

    pub fn nparams(&self) -> usize {
        self.num.nparams()
    }

    pub fn numer(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denom(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The rational value of a fraction free of parameters.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// The fraction as a parameter polynomial, if its denominator is one.
    pub fn as_poly(&self) -> Option<&ParamPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        // powers of coprime polynomials stay coprime
        let num = self.num.pow(k);
        let den = self.den.pow(k);
        ParamFraction { num, den }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nparams());
        }
        ParamFraction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Evaluates at a rational parameter point; `None` if the denominator vanishes.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Replaces parameter `i` by a rational value.
    pub fn substitute_param(&self, i: usize, value: &Rational) -> Result<Self> {
        Self::new(self.num.substitute_param(i, value), self.den.substitute_param(i, value))
    }

    /// Moves to a larger or permuted parameter list, see [`ParamPoly::remap`].
    pub fn remap(&self, nparams: usize, map: &[usize]) -> Self {
        Self::normalize(self.num.remap(nparams, map), self.den.remap(nparams, map))
    }
}

impl Add for &ParamFraction {
    type Output = ParamFraction;
    fn add(self, rhs: &ParamFraction) -> ParamFraction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ParamFraction::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return ParamFraction::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        ParamFraction::normalize(num, &self.den * &rhs.den)
    }
}

impl Sub for &ParamFraction {
    type Output = ParamFraction;
    fn sub(self, rhs: &ParamFraction) -> ParamFraction {
        self + &(-rhs)
    }
}

impl Mul for &ParamFraction {
    type Output = ParamFraction;
    fn mul(self, rhs: &ParamFraction) -> ParamFraction {
        if self.is_zero() || rhs.is_zero() {
            return ParamFraction::zero(self.nparams());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ParamFraction::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel so the product is already reduced
        let g1 = param_poly_gcd(&self.num, &rhs.den);
        let g2 = param_poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading_coefficient().expect("nonzero").clone();
        if lc.is_one() {
            ParamFraction { num, den }
        } else {
            let inv = lc.recip();
            ParamFraction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

/// Panics on division by the zero fraction; use [`ParamFraction::checked_div`]
/// for a fallible variant.
impl Div for &ParamFraction {
    type Output = ParamFraction;
    fn div(self, rhs: &ParamFraction) -> ParamFraction {
        self.checked_div(rhs).expect("division by zero fraction")
    }
}

impl Neg for &ParamFraction {
    type Output = ParamFraction;
    fn neg(self) -> ParamFraction {
        ParamFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for ParamFraction {
    type Output = ParamFraction;
    fn neg(self) -> ParamFraction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ParamFraction {
            type Output = ParamFraction;
            fn $m(self, rhs: ParamFraction) -> ParamFraction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Debug for ParamFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "({:?})", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, ratio};
    use proptest::prelude::*;

    fn pa() -> ParamPoly {
        ParamPoly::param(2, 0)
    }
    fn pb() -> ParamPoly {
        ParamPoly::param(2, 1)
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let x = ParamFraction::new(pa(), pb()).unwrap();
        let y = ParamFraction::new(pb(), pa()).unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn constant_fractions_add() {
        let x = ParamFraction::from_rational(2, ratio(1, 2));
        let y = ParamFraction::from_rational(2, ratio(1, 3));
        assert_eq!(&x + &y, ParamFraction::from_rational(2, ratio(5, 6)));
    }

    #[test]
    fn difference_of_squares_cancels() {
        let n = &pa().pow(2) - &pb().pow(2);
        let d = &pa() + &pb();
        let f = ParamFraction::new(n, d).unwrap();
        assert_eq!(f, ParamFraction::from_poly(&pa() - &pb()));
        // independent check: multiply back
        assert_eq!(f.numer() * &(&pa() + &pb()), &pa().pow(2) - &pb().pow(2));
    }

    #[test]
    fn normalize_examples() {
        let f = ParamFraction::new(pa().scale(&rat(2)), ParamPoly::constant(2, rat(4))).unwrap();
        assert_eq!(f.numer(), &pa().scale(&ratio(1, 2)));
        assert!(f.denom().is_one());

        let z = ParamFraction::new(ParamPoly::zero(2), &pa().pow(2) * &pb()).unwrap();
        assert!(z.is_zero());
        assert!(z.denom().is_one());

        let sq = &(&pa().pow(2) + &(&pa() * &pb()).scale(&rat(2))) + &pb().pow(2);
        let f = ParamFraction::new(sq, &pa() + &pb()).unwrap();
        assert_eq!(f, ParamFraction::from_poly(&pa() + &pb()));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(ParamFraction::new(pa(), ParamPoly::zero(2)), Err(Error::DivisionByZero));
        assert_eq!(ParamFraction::zero(2).inv(), Err(Error::DivisionByZero));
        let one = ParamFraction::one(2);
        assert!(one.checked_div(&ParamFraction::zero(2)).is_err());
    }

    #[test]
    fn denominator_sign_is_canonical() {
        let f = ParamFraction::new(pa(), -pb()).unwrap();
        let g = ParamFraction::new(-pa(), pb()).unwrap();
        assert_eq!(f, g);
        assert!(f.denom().leading_coefficient().unwrap() > &rat(0));
    }

    fn small_poly() -> impl Strategy<Value = ParamPoly> {
        prop::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..4)
            .prop_map(|ts| ParamPoly::from_terms(2, ts.into_iter().map(|((i, j), c)| (vec![i, j], rat(c)))))
    }

    fn small_fraction() -> impl Strategy<Value = ParamFraction> {
        (small_poly(), small_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| ParamFraction::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn field_axioms(x in small_fraction(), y in small_fraction(), z in small_fraction()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert!((&x - &x).is_zero());
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn normalization_ignores_common_factor(n in small_poly(), d in small_poly(), k in small_poly()) {
            prop_assume!(!d.is_zero() && !k.is_zero());
            let lhs = ParamFraction::new(&n * &k, &d * &k).unwrap();
            let rhs = ParamFraction::new(n, d).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
