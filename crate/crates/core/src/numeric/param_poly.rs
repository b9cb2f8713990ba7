use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Sparse polynomial in the parameters with rational coefficients.
///
/// Terms are keyed by exponent vectors; the natural `Vec<u32>` ordering is lex on
/// the parameter list, so the last entry of the map is the leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    nparams: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl ParamPoly {
    pub fn zero(nparams: usize) -> Self {
        ParamPoly {
            nparams,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nparams: usize) -> Self {
        Self::constant(nparams, Rational::one())
    }

    pub fn constant(nparams: usize, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nparams], c);
        }
        ParamPoly { nparams, terms }
    }

    /// The polynomial consisting of the single parameter with index `i`.
    pub fn param(nparams: usize, i: usize) -> Self {
        assert!(i < nparams, "parameter index {i} out of range");
        let mut e = vec![0; nparams];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let nparams = exponents.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        ParamPoly { nparams, terms }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(nparams: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = ParamPoly::zero(nparams);
        for (e, c) in terms {
            assert_eq!(e.len(), nparams, "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * x^e * other`
    fn add_scaled_shifted(&mut self, other: &ParamPoly, c: &Rational, e: &[u32]) {
        for (oe, oc) in &other.terms {
            let ne: Vec<u32> = oe.iter().zip(e).map(|(a, b)| a + b).collect();
            self.add_term(ne, oc * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero(self.nparams);
        }
        ParamPoly {
            nparams: self.nparams,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> ParamPoly {
        let mut base = self.clone();
        let mut acc = ParamPoly::one(self.nparams);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nparams);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces parameter `i` by the rational `value`.
    pub fn substitute_param(&self, i: usize, value: &Rational) -> ParamPoly {
        let mut out = ParamPoly::zero(self.nparams);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = std::mem::replace(&mut ne[i], 0);
            out.add_term(ne, c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    /// Re-indexes the parameters: parameter `i` of `self` becomes parameter
    /// `map[i]` of a polynomial with `nparams` parameters.
    pub fn remap(&self, nparams: usize, map: &[usize]) -> ParamPoly {
        assert_eq!(map.len(), self.nparams);
        let mut out = ParamPoly::zero(nparams);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nparams];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &ParamPoly) -> Option<ParamPoly> {
        assert_eq!(self.nparams, d.nparams);
        let (dm, dc) = d.leading_term()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero(self.nparams);
        let neg_inv = -dc.recip();
        while let Some((rm, rc)) = rem.leading_term() {
            if !rm.iter().zip(dm).all(|(a, b)| a >= b) {
                return None;
            }
            let qe: Vec<u32> = rm.iter().zip(dm).map(|(a, b)| a - b).collect();
            let qc = rc * &neg_inv;
            rem.add_scaled_shifted(d, &qc, &qe);
            quot.add_term(qe, -qc);
        }
        Some(quot)
    }

    /// Factor `c` such that `self / c` has integer coefficients with gcd 1 and a
    /// positive leading coefficient. Zero for the zero polynomial.
    pub fn rational_content(&self) -> Rational {
        let Some(lc) = self.leading_coefficient() else {
            return Rational::zero();
        };
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let content = Rational::new(num, den);
        if lc.is_negative() {
            -content
        } else {
            content
        }
    }

    /// Primitive integer representative: integer coefficients, gcd 1, positive
    /// leading coefficient.
    pub fn primitive(&self) -> ParamPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.rational_content();
        if c.is_one() {
            return self.clone();
        }
        self.scale(&c.recip())
    }

    /// Polynomial with a leading coefficient of one.
    pub fn monic(&self) -> ParamPoly {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Coefficients of `self` viewed as a polynomial in parameter `v`, indexed by degree.
    pub(crate) fn univariate_coeffs(&self, v: usize) -> Vec<ParamPoly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![ParamPoly::zero(self.nparams); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = std::mem::replace(&mut ne[v], 0) as usize;
            out[k].add_term(ne, c.clone());
        }
        out
    }

    pub(crate) fn shift(&self, v: usize, k: u32) -> ParamPoly {
        if k == 0 {
            return self.clone();
        }
        ParamPoly {
            nparams: self.nparams,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne[v] += k;
                    (ne, c.clone())
                })
                .collect(),
        }
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        assert_eq!(self.nparams, rhs.nparams, "parameter count mismatch");
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c.clone());
        }
        big
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        assert_eq!(self.nparams, rhs.nparams, "parameter count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        assert_eq!(self.nparams, rhs.nparams, "parameter count mismatch");
        let mut out = ParamPoly::zero(self.nparams);
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        for (e, c) in &self.terms {
            out.add_scaled_shifted(rhs, c, e);
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            nparams: self.nparams,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ParamPoly {
            type Output = ParamPoly;
            fn $m(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*p{i}")?,
                    _ => write!(f, "*p{i}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, ratio};

    fn a() -> ParamPoly {
        ParamPoly::param(2, 0)
    }
    fn b() -> ParamPoly {
        ParamPoly::param(2, 1)
    }

    #[test]
    fn exact_division_of_difference_of_squares() {
        let n = &a().pow(2) - &b().pow(2);
        let d = &a() + &b();
        assert_eq!(n.exact_div(&d), Some(&a() - &b()));
        assert_eq!(d.exact_div(&(&a() - &b())), None);
    }

    #[test]
    fn primitive_clears_rational_content() {
        let p = &a().scale(&ratio(-2, 3)) + &ParamPoly::constant(2, ratio(4, 9));
        assert_eq!(p.primitive(), &a().scale(&rat(3)) - &ParamPoly::constant(2, rat(2)));
    }

    #[test]
    fn substitute_and_eval_agree() {
        let p = &(&a().pow(3) * &b()) - &a().scale(&rat(5));
        let s = p.substitute_param(0, &rat(2));
        assert_eq!(s, &b().scale(&rat(8)) - &ParamPoly::constant(2, rat(10)));
        assert_eq!(p.eval(&[rat(2), rat(3)]), rat(14));
    }
}
