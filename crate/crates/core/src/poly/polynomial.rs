use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, VarContext};
use crate::error::{Error, Result};
use crate::numeric::{param_poly_gcd, ParamFraction, ParamPoly, Rational};

/// `coeff · monomial` with a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: ParamFraction,
    pub monomial: Monomial,
}

/// `LT(p) = LC(p) · LM(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingParts {
    pub term: Term,
    pub monomial: Monomial,
    pub coefficient: ParamFraction,
}

/// Canonical multivariate polynomial.
///
/// Terms are stored strictly descending under the polynomial's monomial order,
/// with distinct monomials and nonzero coefficients; zero is the empty list.
/// The stored form is the arranged form, so the leading term is `terms[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ctx: Arc<VarContext>,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ctx: &Arc<VarContext>, order: MonomialOrder) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Arc<VarContext>, order: MonomialOrder, c: ParamFraction) -> Self {
        Self::from_terms(ctx, order, [(Monomial::one(ctx.nvars()), c)])
    }

    pub fn one(ctx: &Arc<VarContext>, order: MonomialOrder) -> Self {
        Self::constant(ctx, order, ParamFraction::one(ctx.nparams()))
    }

    /// The variable with index `i`.
    pub fn var(ctx: &Arc<VarContext>, order: MonomialOrder, i: usize) -> Self {
        Self::from_terms(
            ctx,
            order,
            [(Monomial::var(ctx.nvars(), i), ParamFraction::one(ctx.nparams()))],
        )
    }

    /// The variable called `name`.
    pub fn var_named(ctx: &Arc<VarContext>, order: MonomialOrder, name: &str) -> Result<Self> {
        let i = ctx
            .var_index(name)
            .ok_or_else(|| Error::usage(format!("unknown variable `{name}`")))?;
        Ok(Self::var(ctx, order, i))
    }

    /// The parameter called `name`, as a constant polynomial.
    pub fn param_named(ctx: &Arc<VarContext>, order: MonomialOrder, name: &str) -> Result<Self> {
        let i = ctx
            .param_index(name)
            .ok_or_else(|| Error::usage(format!("unknown parameter `{name}`")))?;
        Ok(Self::constant(ctx, order, ParamFraction::param(ctx.nparams(), i)))
    }

    /// Builds a canonical polynomial from arbitrary terms (unsorted, repeated, zero).
    pub fn from_terms(
        ctx: &Arc<VarContext>,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, ParamFraction)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, ParamFraction> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ctx.nvars(), "monomial length mismatch");
            assert_eq!(c.nparams(), ctx.nparams(), "coefficient parameter mismatch");
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coeff)| Term { coeff, monomial })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial {
            ctx: ctx.clone(),
            order,
            terms,
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn nparams(&self) -> usize {
        self.ctx.nparams()
    }

    /// Same polynomial arranged under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial {
            ctx: self.ctx.clone(),
            order,
            terms,
        }
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        self.order == other.order && (Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Leading term, monomial and coefficient under `ord`.
    pub fn leading_parts(&self, ord: MonomialOrder) -> Result<LeadingParts> {
        let term = if ord == self.order {
            self.terms.first()
        } else {
            self.terms.iter().max_by(|a, b| ord.cmp(&a.monomial, &b.monomial))
        }
        .ok_or(Error::NoLeadingTerm)?
        .clone();
        Ok(LeadingParts {
            monomial: term.monomial.clone(),
            coefficient: term.coeff.clone(),
            term,
        })
    }

    /// Leading term under the polynomial's own order.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coefficient(&self) -> Option<&ParamFraction> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Exact coefficient of `m`; zero when absent.
    pub fn coefficient_of(&self, m: &Monomial) -> ParamFraction {
        self.terms
            .iter()
            .find(|t| &t.monomial == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(|| ParamFraction::zero(self.nparams()))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.monomial.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.monomial.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    /// Value of a variable-free polynomial (zero included).
    pub fn as_constant(&self) -> Option<ParamFraction> {
        match self.terms.as_slice() {
            [] => Some(ParamFraction::zero(self.nparams())),
            [t] if t.monomial.is_one() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    fn merge(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let take_b = |t: &Term| {
            if negate_other {
                Term {
                    coeff: -&t.coeff,
                    monomial: t.monomial.clone(),
                }
            } else {
                t.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].monomial, &b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(take_b(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a[i].monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(take_b));
        Polynomial {
            ctx: self.ctx.clone(),
            order: ord,
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ctx, self.order));
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return Ok(self.mul_term(&t.coeff, &t.monomial));
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return Ok(other.mul_term(&t.coeff, &t.monomial));
        }
        let products = self.terms.iter().flat_map(|s| {
            other
                .terms
                .iter()
                .map(move |o| (s.monomial.mul(&o.monomial), &s.coeff * &o.coeff))
        });
        Ok(Polynomial::from_terms(&self.ctx, self.order, products))
    }

    /// `c · m · self`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, c: &ParamFraction, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx, self.order);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    monomial: t.monomial.mul(m),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &ParamFraction) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ctx.nvars()))
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    /// `self - c · m · f`, the elementary reduction step.
    pub(crate) fn sub_mul_term(&self, c: &ParamFraction, m: &Monomial, f: &Polynomial) -> Polynomial {
        self.merge(&f.mul_term(c, m), true)
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ctx, self.order);
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

    /// Scales to a leading coefficient of one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Substitutes `replacement` for variable `var`, expanding fully.
    pub fn substitute(&self, var: usize, replacement: &Polynomial) -> Result<Polynomial> {
        self.check_ring(replacement)?;
        if var >= self.ctx.nvars() {
            return Err(Error::usage("substitution variable out of range"));
        }
        let deg = self.degree_in(var) as usize;
        let mut powers = Vec::with_capacity(deg + 1);
        powers.push(Polynomial::one(&self.ctx, self.order));
        for k in 1..=deg {
            let next = &powers[k - 1] * replacement;
            powers.push(next);
        }
        let mut groups: HashMap<usize, Vec<(Monomial, ParamFraction)>> = HashMap::new();
        for t in &self.terms {
            let mut e = t.monomial.exponents().to_vec();
            let k = std::mem::replace(&mut e[var], 0) as usize;
            groups.entry(k).or_default().push((Monomial::new(e), t.coeff.clone()));
        }
        let mut acc = Vec::new();
        let mut keys: Vec<usize> = groups.keys().copied().collect();
        keys.sort_unstable();
        for k in keys {
            let cofactor = Polynomial::from_terms(&self.ctx, self.order, groups.remove(&k).unwrap());
            acc.extend((&cofactor * &powers[k]).terms);
        }
        Ok(Polynomial::from_terms(
            &self.ctx,
            self.order,
            acc.into_iter().map(|t| (t.monomial, t.coeff)),
        ))
    }

    /// Substitutes by variable name.
    pub fn substitute_named(&self, var: &str, replacement: &Polynomial) -> Result<Polynomial> {
        let i = self
            .ctx
            .var_index(var)
            .ok_or_else(|| Error::usage(format!("unknown variable `{var}`")))?;
        self.substitute(i, replacement)
    }

    /// Rational value at a point; `None` if a coefficient's denominator vanishes.
    pub fn eval(&self, vars: &[Rational], params: &[Rational]) -> Option<Rational> {
        assert_eq!(vars.len(), self.ctx.nvars());
        let mut acc = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.eval(params)?;
            for (x, &k) in vars.iter().zip(t.monomial.exponents()) {
                if k > 0 {
                    v *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += v;
        }
        Some(acc)
    }

    /// Replaces parameter `i` by a rational value in every coefficient.
    pub fn substitute_param(&self, i: usize, value: &Rational) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.monomial.clone(), t.coeff.substitute_param(i, value)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(&self.ctx, self.order, terms))
    }

    /// `λ · self` for the nonzero `λ` that makes every coefficient a parameter
    /// polynomial, removes their common content (polynomial and rational), and
    /// gives the leading coefficient a positive leading rational.
    pub fn clear_denominators(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let n = self.nparams();
        let mut lcm = ParamPoly::one(n);
        for t in &self.terms {
            let d = t.coeff.denom();
            if d.is_one() {
                continue;
            }
            let g = param_poly_gcd(&lcm, d);
            lcm = &lcm * &d.exact_div(&g).expect("gcd divides");
        }
        let nums: Vec<ParamPoly> = self
            .terms
            .iter()
            .map(|t| {
                let cof = lcm.exact_div(t.coeff.denom()).expect("lcm is a multiple");
                t.coeff.numer() * &cof
            })
            .collect();
        let mut g = ParamPoly::zero(n);
        for p in &nums {
            g = param_poly_gcd(&g, p);
            if g.is_one() {
                break;
            }
        }
        let nums: Vec<ParamPoly> = if g.is_one() {
            nums
        } else {
            nums.iter().map(|p| p.exact_div(&g).expect("content divides")).collect()
        };
        let mut cnum = BigInt::zero();
        let mut cden = BigInt::one();
        for p in &nums {
            for (_, c) in p.terms() {
                cnum = cnum.gcd(c.numer());
                cden = cden.lcm(c.denom());
            }
        }
        let mut content = Rational::new(cnum, cden);
        if nums[0].leading_coefficient().expect("nonzero").is_negative() {
            content = -content;
        }
        let inv = content.recip();
        Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .zip(nums)
                .map(|(t, p)| Term {
                    coeff: ParamFraction::from_poly(p.scale(&inv)),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    /// Moves the polynomial into another context, matching names. Variables
    /// map to variables; a parameter may map to a parameter or be promoted to a
    /// variable, provided it does not occur in any denominator. Names missing
    /// from the target are only an error if they actually occur.
    pub fn recontext(&self, target: &Arc<VarContext>, order: MonomialOrder) -> Result<Polynomial> {
        #[derive(Clone, Copy)]
        enum Slot {
            Param(usize),
            Var(usize),
            Missing,
        }
        let var_map: Vec<Option<usize>> = self.ctx.variables().iter().map(|v| target.var_index(v)).collect();
        let param_map: Vec<Slot> = self
            .ctx
            .parameters()
            .iter()
            .map(|p| match (target.param_index(p), target.var_index(p)) {
                (Some(i), _) => Slot::Param(i),
                (None, Some(i)) => Slot::Var(i),
                _ => Slot::Missing,
            })
            .collect();
        let missing = |name: &str| Error::usage(format!("`{name}` does not exist in the target context"));
        let (tp, tv) = (target.nparams(), target.nvars());
        let mut out = Vec::new();
        for t in &self.terms {
            let mut base = vec![0u32; tv];
            for (i, &k) in t.monomial.exponents().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = var_map[i].ok_or_else(|| missing(&self.ctx.variables()[i]))?;
                base[j] += k;
            }
            let mut den_terms = Vec::new();
            for (e, c) in t.coeff.denom().terms() {
                let mut pe = vec![0u32; tp];
                for (j, &k) in e.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    match param_map[j] {
                        Slot::Param(i) => pe[i] += k,
                        Slot::Var(_) => {
                            return Err(Error::usage(format!(
                                "parameter `{}` occurs in a denominator and cannot become a variable",
                                self.ctx.parameters()[j]
                            )))
                        }
                        Slot::Missing => return Err(missing(&self.ctx.parameters()[j])),
                    }
                }
                den_terms.push((pe, c.clone()));
            }
            let den = ParamPoly::from_terms(tp, den_terms);
            for (e, c) in t.coeff.numer().terms() {
                let mut pe = vec![0u32; tp];
                let mut ve = base.clone();
                for (j, &k) in e.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    match param_map[j] {
                        Slot::Param(i) => pe[i] += k,
                        Slot::Var(i) => ve[i] += k,
                        Slot::Missing => return Err(missing(&self.ctx.parameters()[j])),
                    }
                }
                let coeff = ParamFraction::new(ParamPoly::monomial(pe, c.clone()), den.clone())?;
                out.push((Monomial::new(ve), coeff));
            }
        }
        Ok(Polynomial::from_terms(target, order, out))
    }
}

macro_rules! impl_op {
    ($tr:ident, $m:ident, $try:ident) => {
        /// Panics if the operands live in different rings; the `try_*` methods
        /// report that as [`Error::ContextMismatch`] instead.
        impl $tr for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomials from different rings")
            }
        }
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
impl_op!(Add, add, try_add);
impl_op!(Sub, sub, try_sub);
impl_op!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
