//! Planarity of the intersection of surfaces in three variables.
//!
//! A plane `Ax + By + Cz + D` contains every common zero of the generators as
//! soon as it is a member of their ideal. [`scan_linear`] looks for such a
//! member directly inside the reduced basis, which only succeeds under extra
//! hypotheses on the leading-term ideal. [`detect_planes`] decides linear
//! membership outright: it reduces `x`, `y`, `z` and `1` to normal form and
//! solves for the linear combinations that vanish.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::division::normal_form;
use crate::error::{Error, Result};
use crate::groebner::{reduced_groebner_basis, GroebnerBasis, IdealSpec};
use crate::linalg::{nullspace, rref};
use crate::numeric::ParamFraction;
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarContext};

/// `Ax + By + Cz + D`, normalized so the first nonzero of `(A, B, C)` is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    pub a: ParamFraction,
    pub b: ParamFraction,
    pub c: ParamFraction,
    pub d: ParamFraction,
}

impl Plane {
    pub fn coefficients(&self) -> [&ParamFraction; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    fn from_vec(v: Vec<ParamFraction>) -> Self {
        let mut it = v.into_iter();
        Plane {
            a: it.next().unwrap(),
            b: it.next().unwrap(),
            c: it.next().unwrap(),
            d: it.next().unwrap(),
        }
    }

    /// The plane as a polynomial in a three-variable context.
    pub fn to_polynomial(&self, ctx: &Arc<VarContext>, order: MonomialOrder) -> Polynomial {
        let n = ctx.nvars();
        Polynomial::from_terms(
            ctx,
            order,
            [
                (Monomial::var(n, 0), self.a.clone()),
                (Monomial::var(n, 1), self.b.clone()),
                (Monomial::var(n, 2), self.c.clone()),
                (Monomial::one(n), self.d.clone()),
            ],
        )
    }
}

/// Basis of all linear members of an ideal with `(A, B, C) ≠ 0`, in reduced
/// echelon form. One plane means the variety is planar; two means it lies on a
/// line; three means it is at most a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneFamily {
    pub planes: Vec<Plane>,
}

impl PlaneFamily {
    pub fn dimension(&self) -> usize {
        self.planes.len()
    }

    /// Whether `plane` lies in the span of the family.
    pub fn spans(&self, plane: &Plane) -> bool {
        let mut rows: Vec<Vec<ParamFraction>> = self
            .planes
            .iter()
            .map(|p| p.coefficients().into_iter().cloned().collect())
            .collect();
        rows.push(plane.coefficients().into_iter().cloned().collect());
        rref(rows, 4).0.len() == self.planes.len()
    }
}

/// Which of the variables lie in the leading-term ideal of the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LtMembership {
    pub x: bool,
    pub y: bool,
    pub z: bool,
}

impl LtMembership {
    /// `y ∉ ⟨LT(I)⟩ ∧ z ∉ ⟨LT(I)⟩`: under this condition a plane with `A ≠ 0`
    /// in the ideal shows up as a reduced-basis element.
    pub fn admits_linear_basis_element(&self) -> bool {
        !self.y && !self.z
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanarityOutcome {
    Planes(PlaneFamily),
    /// No plane is a member of the ideal.
    None,
    /// The reduced basis is `{1}`: the system has no solutions at all.
    EmptyVariety,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityReport {
    pub basis: GroebnerBasis,
    pub lt_membership: LtMembership,
    pub scanned: Option<Polynomial>,
    pub outcome: PlanarityOutcome,
}

fn check_xyz(ctx: &VarContext, order: MonomialOrder) -> Result<()> {
    if ctx.nvars() != 3 {
        return Err(Error::usage(format!(
            "planarity needs exactly three variables, got {}",
            ctx.nvars()
        )));
    }
    if order != MonomialOrder::Lex {
        return Err(Error::usage("planarity is decided under the lex order"));
    }
    Ok(())
}

/// First basis element of total degree one in the variables, if any.
pub fn scan_linear(basis: &GroebnerBasis) -> Option<Polynomial> {
    basis.elements().iter().find(|g| g.total_degree() == 1).cloned()
}

pub fn lt_membership(basis: &GroebnerBasis) -> LtMembership {
    let has = |i: usize| {
        basis.elements().iter().any(|g| {
            g.leading_monomial().is_some_and(|m| {
                let n = m.nvars();
                m.is_one() || (i < n && m.divides(&Monomial::var(n, i)))
            })
        })
    };
    LtMembership {
        x: has(0),
        y: has(1),
        z: has(2),
    }
}

/// Computes the reduced basis and every plane in the ideal.
pub fn detect_planes(ideal: &IdealSpec) -> Result<PlanarityReport> {
    check_xyz(ideal.context(), ideal.order())?;
    let basis = reduced_groebner_basis(ideal);
    let lt = lt_membership(&basis);
    let scanned = scan_linear(&basis);
    if basis.is_unit_ideal() {
        return Ok(PlanarityReport {
            basis,
            lt_membership: lt,
            scanned,
            outcome: PlanarityOutcome::EmptyVariety,
        });
    }
    let ctx = ideal.context();
    let order = ideal.order();
    let np = ctx.nparams();
    let probes = [
        Polynomial::var(ctx, order, 0),
        Polynomial::var(ctx, order, 1),
        Polynomial::var(ctx, order, 2),
        Polynomial::one(ctx, order),
    ];
    let forms = probes
        .iter()
        .map(|p| normal_form(p, &basis))
        .collect::<Result<Vec<_>>>()?;
    let monomials: BTreeSet<Monomial> = forms
        .iter()
        .flat_map(|f| f.terms().iter().map(|t| t.monomial.clone()))
        .collect();
    let rows: Vec<Vec<ParamFraction>> = monomials
        .iter()
        .map(|m| forms.iter().map(|f| f.coefficient_of(m)).collect())
        .collect();
    let solutions = nullspace(rows, 4, np);
    let (echelon, _) = rref(solutions, 4);
    let planes: Vec<Plane> = echelon
        .into_iter()
        .filter(|v| v[..3].iter().any(|c| !c.is_zero()))
        .map(Plane::from_vec)
        .collect();
    let outcome = if planes.is_empty() {
        PlanarityOutcome::None
    } else {
        PlanarityOutcome::Planes(PlaneFamily { planes })
    };
    Ok(PlanarityReport {
        basis,
        lt_membership: lt,
        scanned,
        outcome,
    })
}
