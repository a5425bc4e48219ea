//! Ideals, reduced Gröbner bases, membership, elimination and intersection.

mod engine;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialOrder, OrderKind, Polynomial, Var, VarSet};
use engine::OPoly;

/// The reduced monic Gröbner basis of an ideal under a fixed order,
/// listed by decreasing leading monomial. Unique for the ideal and order.
#[derive(Clone)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    vars: VarSet,
    engine: Vec<OPoly>,
}

impl GroebnerBasis {
    fn from_engine(engine: Vec<OPoly>, order: &MonomialOrder, vars: &VarSet) -> Self {
        GroebnerBasis {
            elements: engine.iter().map(|g| g.to_poly(order, vars)).collect(),
            order: order.clone(),
            vars: vars.clone(),
            engine,
        }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True iff the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.engine.len() == 1 && self.engine[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.engine.iter().map(|g| self.order.monomial(&g.lead().0)).collect()
    }

    /// Normal form of `f` with respect to this basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = OPoly::from_poly(f, &self.order)?;
        Ok(engine::reduce(&f, &self.engine, &self.order).to_poly(&self.order, &self.vars))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Least `n <= bound` with `f^n` in the ideal, found by reducing
    /// `f * NF(f^(n-1))` step by step.
    pub fn least_power_in(&self, f: &Polynomial, bound: u32) -> Result<Option<u32>> {
        let f = OPoly::from_poly(f, &self.order)?;
        let mut r = engine::reduce(&f, &self.engine, &self.order);
        for n in 1..=bound {
            if r.is_zero() {
                return Ok(Some(n));
            }
            if n < bound {
                r = engine::reduce(&r.mul(&f, &self.order), &self.engine, &self.order);
            }
        }
        Ok(None)
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.elements.iter().map(|g| crate::parser::print_poly(g, &self.order)))
            .finish()
    }
}

/// A finitely generated ideal together with the monomial order used for its
/// Gröbner basis. The basis is computed on first use and cached.
#[derive(Clone)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    vars: VarSet,
    order: MonomialOrder,
    gb: OnceLock<GroebnerBasis>,
}

impl Ideal {
    /// The ideal generated by `gens` in the ring of `order`'s variables.
    /// Zero generators are dropped.
    pub fn new(gens: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        let vars = order.varset();
        let generators = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                if let Some(v) = g.support().iter().find(|v| !vars.contains(v)) {
                    return Err(Error::VariableOutsideOrder(v.name().to_string()));
                }
                g.with_varset(&vars)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal { generators, vars, order, gb: OnceLock::new() })
    }

    /// Grevlex on the canonical sequence of `vars`.
    pub fn with_default_order(gens: Vec<Polynomial>, vars: &VarSet) -> Result<Self> {
        Self::new(gens, MonomialOrder::grevlex(vars))
    }

    pub fn unit(order: MonomialOrder) -> Self {
        let one = Polynomial::one(order.varset());
        Self::new(vec![one], order).expect("constant generator")
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn varset(&self) -> &VarSet {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Same generators under another order on the same variables.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ideal> {
        if order.varset() != self.vars {
            return Err(Error::VarSetMismatch);
        }
        if order == self.order {
            return Ok(self.clone());
        }
        Ideal::new(self.generators.clone(), order)
    }

    /// Adds generators; their variables must already belong to the ring.
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let gens = self.generators.iter().chain(extra).cloned().collect();
        Ideal::new(gens, self.order.clone())
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            let gens: Vec<OPoly> = self
                .generators
                .iter()
                .map(|g| OPoly::from_poly(g, &self.order).expect("generators checked"))
                .collect();
            GroebnerBasis::from_engine(engine::groebner(&gens, &self.order), &self.order, &self.vars)
        })
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner_basis().contains(f)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::parser::print_poly(g, &self.order))?;
        }
        write!(f, "> {:?}", self.order)
    }
}

/// Remainder of `f` on multivariate division by `divisors` (tried in
/// sequence order) under `order`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    Ok(divide(f, divisors, order)?.1)
}

/// Multivariate division: `f = sum q_i g_i + r` with no term of `r`
/// divisible by any leading monomial of the divisors.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let vars = divisors.iter().fold(f.varset().clone(), |acc, g| acc.union(g.varset()));
    let f = OPoly::from_poly(f, order)?;
    let gs = divisors
        .iter()
        .map(|g| OPoly::from_poly(g, order))
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&OPoly> = gs.iter().collect();
    let (qs, r) = engine::divide(&f, &refs, order, true);
    let qs = qs
        .into_iter()
        .map(|terms| {
            Polynomial::from_terms(terms.into_iter().map(|(e, c)| (order.monomial(&e), c)), vars.clone())
        })
        .collect();
    Ok((qs, r.to_poly(order, &vars)))
}

/// `lcm/LT(f) * f - lcm/LT(g) * g` with monic leading terms.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vars = f.varset().union(g.varset());
    let s = engine::s_polynomial(&OPoly::from_poly(f, order)?, &OPoly::from_poly(g, order)?, order);
    Ok(s.to_poly(order, &vars))
}

pub fn groebner_basis(a: &Ideal) -> &GroebnerBasis {
    a.groebner_basis()
}

pub fn is_member(f: &Polynomial, a: &Ideal) -> Result<bool> {
    a.contains(f)
}

/// Equality of ideals in the same ring, decided by comparing reduced bases
/// under `a`'s order.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.varset() != b.varset() {
        return Err(Error::VarSetMismatch);
    }
    let b = b.with_order(a.order().clone())?;
    Ok(a.groebner_basis() == b.groebner_basis())
}

/// The contraction `a ∩ F[keep]`, computed with an elimination order. The
/// result's order is `a`'s base order restricted to `keep`, and its cached
/// basis is the kept part of the elimination basis.
pub fn eliminate(a: &Ideal, keep: &VarSet) -> Result<Ideal> {
    if !keep.is_subset(a.varset()) {
        return Err(Error::NotASuperset);
    }
    let seq = a.order().vars();
    let elim: Vec<Var> = seq.iter().filter(|v| !keep.contains(v)).cloned().collect();
    let kept: Vec<Var> = seq.iter().filter(|v| keep.contains(v)).cloned().collect();
    let block = MonomialOrder::elimination(a.order().kind(), &elim, &kept)?;
    let full = a.with_order(block)?;
    let retained: Vec<Polynomial> = full
        .groebner_basis()
        .elements()
        .iter()
        .filter(|g| g.support().is_subset(keep))
        .map(|g| g.clone().with_varset(keep))
        .collect::<Result<_>>()?;

    let order = a.order().restricted(keep);
    let engine = retained
        .iter()
        .map(|g| OPoly::from_poly(g, &order))
        .collect::<Result<Vec<_>>>()?;
    let gb = GroebnerBasis::from_engine(engine::interreduce(engine, &order), &order, keep);
    let out = Ideal::new(retained, order)?;
    out.gb.set(gb).ok().expect("fresh ideal");
    Ok(out)
}

/// `a ∩ b` by eliminating `w` from `w·a + (1 - w)·b`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.varset() != b.varset() {
        return Err(Error::VarSetMismatch);
    }
    let vars = a.varset();
    let w = vars.fresh();
    let wp = Polynomial::var(&w);
    let one_minus_w = &Polynomial::one(VarSet::empty()) - &wp;
    let gens: Vec<Polynomial> = a
        .generators()
        .iter()
        .map(|f| &wp * f)
        .chain(b.generators().iter().map(|g| &one_minus_w * g))
        .collect();
    let order = a.order().extended(&VarSet::new([w]));
    eliminate(&Ideal::new(gens, order)?, vars)
}

/// Ideal generated by the given polynomials under grevlex on their union ring.
pub fn ideal_of(gens: Vec<Polynomial>) -> Ideal {
    let vars = gens.iter().fold(VarSet::empty(), |acc, g| acc.union(g.varset()));
    Ideal::with_default_order(gens, &vars).expect("ring covers generators")
}

/// The reduced basis of `a` re-read under `kind` on the same sequence.
pub fn basis_under(a: &Ideal, kind: OrderKind) -> Result<GroebnerBasis> {
    Ok(a.with_order(a.order().with_kind(kind))?.groebner_basis().clone())
}
