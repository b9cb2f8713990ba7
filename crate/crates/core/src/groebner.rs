//! S-polynomials, Buchberger's algorithm and reduced Gröbner bases.

use std::sync::Arc;

use crate::division::remainder;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarContext};

/// Generators of an ideal together with the ring they live in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    generators: Vec<Polynomial>,
    ctx: Arc<VarContext>,
    order: MonomialOrder,
}

impl IdealSpec {
    /// Zero generators are dropped; every generator is re-arranged under `order`.
    pub fn new(ctx: &Arc<VarContext>, order: MonomialOrder, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.context() != ctx {
                return Err(Error::ContextMismatch);
            }
            if !g.is_zero() {
                gens.push(g.with_order(order));
            }
        }
        Ok(IdealSpec {
            generators: gens,
            ctx: ctx.clone(),
            order,
        })
    }

    /// Builds the spec from the context and order of the first generator.
    pub fn from_generators(generators: Vec<Polynomial>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::usage("an ideal needs at least one generator"))?;
        let (ctx, order) = (first.context().clone(), first.order());
        Self::new(&ctx, order, generators)
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }
}

/// A list of polynomials generating an ideal, with the order it is a basis under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    /// Wraps elements claimed to form a Gröbner basis; nothing is checked
    /// (see [`is_groebner`]).
    pub fn new(elements: Vec<Polynomial>, order: MonomialOrder) -> Self {
        GroebnerBasis {
            elements: elements.into_iter().map(|p| p.with_order(order)).collect(),
            order,
            reduced: false,
        }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis contains a nonzero constant, i.e. the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| !g.is_zero() && g.is_constant())
    }
}

/// `S(f, g) = (L / LT f)·f − (L / LT g)·g` with `L = lcm(LM f, LM g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if !f.same_ring(g) {
        return Err(Error::ContextMismatch);
    }
    let (ft, gt) = match (f.leading_term(), g.leading_term()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::usage("S-polynomial of the zero polynomial")),
    };
    let lcm = ft.monomial.lcm(&gt.monomial);
    let fm = lcm.checked_div(&ft.monomial).expect("lcm is a multiple");
    let gm = lcm.checked_div(&gt.monomial).expect("lcm is a multiple");
    let left = f.mul_term(&ft.coeff.inv()?, &fm);
    Ok(left.sub_mul_term(&gt.coeff.inv()?, &gm, g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Skip pairs whose leading monomials are coprime (Buchberger's first criterion).
    pub coprime_criterion: bool,
    /// Gebauer-Möller pruning by the chain criterion: a new pair is dropped when
    /// another new pair has an lcm dividing its own, and a queued pair is dropped
    /// when the new leading monomial properly divides its lcm.
    pub chain_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            coprime_criterion: true,
            chain_criterion: true,
        }
    }
}

struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

struct Buchberger {
    basis: Vec<Polynomial>,
    /// False once a later element's leading monomial divides this one's.
    active: Vec<bool>,
    queue: Vec<Pair>,
    options: BuchbergerOptions,
}

impl Buchberger {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().expect("nonzero")
    }

    fn insert(&mut self, h: Polynomial) {
        let j = self.basis.len();
        self.basis.push(h);
        self.active.push(true);
        let hm = self.lm(j).clone();
        let mut candidates: Vec<(Pair, bool)> = (0..j)
            .filter(|&i| self.active[i])
            .map(|i| {
                (
                    Pair {
                        lcm: self.lm(i).lcm(&hm),
                        i,
                        j,
                    },
                    self.lm(i).is_coprime(&hm),
                )
            })
            .collect();
        if self.options.chain_criterion {
            let mut kept: Vec<(Pair, bool)> = Vec::new();
            while !candidates.is_empty() {
                let (p, coprime) = candidates.remove(0);
                let covered = |q: &(Pair, bool)| q.0.lcm.divides(&p.lcm);
                if coprime || !(candidates.iter().any(covered) || kept.iter().any(covered)) {
                    kept.push((p, coprime));
                }
            }
            candidates = kept;
            let basis = &self.basis;
            let lm = |i: usize| basis[i].leading_monomial().expect("nonzero");
            self.queue
                .retain(|p| !(hm.divides(&p.lcm) && lm(p.i).lcm(&hm) != p.lcm && lm(p.j).lcm(&hm) != p.lcm));
        }
        let coprime_criterion = self.options.coprime_criterion;
        self.queue.extend(
            candidates
                .into_iter()
                .filter(|(_, coprime)| !(coprime_criterion && *coprime))
                .map(|(p, _)| p),
        );
        for i in 0..j {
            if self.active[i] && hm.divides(self.lm(i)) {
                self.active[i] = false;
            }
        }
    }

    /// Active elements, smallest leading monomial first.
    fn reducers(&self, ord: MonomialOrder) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = (0..self.basis.len())
            .filter(|&i| self.active[i])
            .map(|i| self.basis[i].clone())
            .collect();
        out.sort_by(|a, b| {
            ord.cmp(
                a.leading_monomial().expect("nonzero"),
                b.leading_monomial().expect("nonzero"),
            )
        });
        out
    }
}

/// Replaces each generator by its monic remainder modulo the earlier ones,
/// dropping zeros, until nothing changes.
fn interreduce(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut current: Vec<Polynomial> = gens.to_vec();
    loop {
        let mut next: Vec<Polynomial> = Vec::with_capacity(current.len());
        for (i, p) in current.iter().enumerate() {
            let r = remainder(p, &current[..i]).expect("same ring, nonzero divisors");
            if !r.is_zero() {
                next.push(r.monic());
            }
        }
        if next == current {
            return next;
        }
        current = next;
    }
}

/// Buchberger's algorithm with Gebauer-Möller pair updates and the normal
/// selection strategy: the pair with the smallest lcm under the order goes
/// first, ties broken by indices. S-polynomials are reduced by the elements
/// whose leading monomial is not a multiple of a later one's, smallest leading
/// monomial first. The generators are interreduced before the pairs are
/// formed. The output lists the input generators followed by the interreduced
/// generators and the nonzero S-polynomial remainders.
pub fn buchberger(ideal: &IdealSpec, options: BuchbergerOptions) -> GroebnerBasis {
    let ord = ideal.order();
    let mut state = Buchberger {
        basis: Vec::new(),
        active: Vec::new(),
        queue: Vec::new(),
        options,
    };
    let mut gens = interreduce(ideal.generators());
    gens.sort_by(|a, b| {
        ord.cmp(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    for g in gens {
        state.insert(g);
    }
    while !state.queue.is_empty() {
        let next = (0..state.queue.len())
            .min_by(|&a, &b| {
                let (p, q) = (&state.queue[a], &state.queue[b]);
                ord.cmp(&p.lcm, &q.lcm).then((p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let Pair { i, j, .. } = state.queue.swap_remove(next);
        let s = s_polynomial(&state.basis[i], &state.basis[j]).expect("same ring, nonzero");
        let h = remainder(&s, &state.reducers(ord)).expect("same ring, nonzero divisors");
        if !h.is_zero() {
            state.insert(h.monic());
        }
    }
    let mut elements = ideal.generators().to_vec();
    for g in state.basis {
        if !elements.contains(&g) {
            elements.push(g);
        }
    }
    GroebnerBasis {
        elements,
        order: ord,
        reduced: false,
    }
}

/// Makes every element monic and drops elements whose leading monomial is a
/// multiple of another element's (keeping the earliest of equal ones).
pub fn minimalize(basis: &GroebnerBasis) -> GroebnerBasis {
    let elems: Vec<Polynomial> = basis
        .elements
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    let mut keep = Vec::new();
    for (i, g) in elems.iter().enumerate() {
        let lm = g.leading_monomial().expect("nonzero");
        let redundant = elems.iter().enumerate().any(|(j, h)| {
            if i == j {
                return false;
            }
            let hm = h.leading_monomial().expect("nonzero");
            hm.divides(lm) && (hm != lm || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    GroebnerBasis {
        elements: keep,
        order: basis.order,
        reduced: false,
    }
}

/// Reduces a minimal basis: each element is replaced by its remainder modulo
/// the others, then the list is sorted descending by leading monomial.
pub fn reduce_basis(basis: &GroebnerBasis) -> GroebnerBasis {
    let mut elems = basis.elements.clone();
    for i in 0..elems.len() {
        let others: Vec<Polynomial> = elems
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        elems[i] = remainder(&elems[i], &others)
            .expect("same ring, nonzero divisors")
            .monic();
    }
    let ord = basis.order;
    elems.sort_by(|a, b| {
        ord.cmp(
            b.leading_monomial().expect("nonzero"),
            a.leading_monomial().expect("nonzero"),
        )
    });
    GroebnerBasis {
        elements: elems,
        order: ord,
        reduced: true,
    }
}

/// The unique reduced Gröbner basis of the ideal. The zero ideal gives an empty basis.
pub fn reduced_groebner_basis(ideal: &IdealSpec) -> GroebnerBasis {
    reduced_groebner_basis_with(ideal, BuchbergerOptions::default())
}

pub fn reduced_groebner_basis_with(ideal: &IdealSpec, options: BuchbergerOptions) -> GroebnerBasis {
    let g = buchberger(ideal, options);
    if g.elements.iter().any(|p| p.is_constant()) {
        let one = Polynomial::one(ideal.context(), ideal.order());
        return GroebnerBasis {
            elements: vec![one],
            order: ideal.order(),
            reduced: true,
        };
    }
    reduce_basis(&minimalize(&g))
}

/// Buchberger's criterion: every pairwise S-polynomial leaves remainder zero.
pub fn is_groebner(elements: &[Polynomial], order: MonomialOrder) -> bool {
    let elems: Vec<Polynomial> = elements.iter().map(|p| p.with_order(order)).collect();
    for j in 0..elems.len() {
        for i in 0..j {
            let Ok(s) = s_polynomial(&elems[i], &elems[j]) else {
                return false;
            };
            match remainder(&s, &elems) {
                Ok(r) if r.is_zero() => {}
                _ => return false,
            }
        }
    }
    true
}
