//! Decision procedures around the Nullstellensatz: solvability, radical
//! membership, point ideals, recovery of points from maximal ideals,
//! vanishing ideals of finite point sets and rational zero-dimensional
//! solving.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, NotCheckableReason, Result};
use crate::groebner::{eliminate, ideal_equal, intersect, Ideal};
use crate::ring::{OrderKind, Polynomial, Scalar, UniPoly, Var, VarSet};

pub use crate::ring::Point;

/// Default exponent bound for the power oracle.
pub const DEFAULT_POWER_BOUND: u32 = 12;

/// Outcome of [`variety_points`].
#[derive(Clone, Debug, PartialEq)]
pub enum VarietyResult {
    /// The ideal is the unit ideal.
    Empty,
    /// Every point of the variety, all rational.
    Points(Vec<Point>),
    /// Some coordinate is a root of this polynomial, which has no rational
    /// root.
    NonRational(Polynomial),
    NotZeroDimensional,
}

/// `⟨v - x_v : v ∈ vars⟩`.
pub fn point_ideal(x: &Point, vars: &VarSet) -> Result<Ideal> {
    x.check_total(vars)?;
    let gens = vars
        .iter()
        .map(|v| {
            let c = Polynomial::constant(x.get(v).expect("total").clone(), vars.clone());
            &Polynomial::var(v) - &c
        })
        .collect();
    Ideal::with_default_order(gens, vars)
}

/// Whether the ideal has a common zero over the algebraic closure, that is,
/// whether it is proper.
pub fn solvable(a: &Ideal) -> bool {
    !a.is_unit()
}

fn check_support(f: &Polynomial, a: &Ideal) -> Result<()> {
    match f.support().iter().find(|v| !a.varset().contains(v)) {
        Some(v) => Err(Error::VariableOutsideOrder(v.name().to_string())),
        None => Ok(()),
    }
}

/// `f ∈ √a`, decided by testing `1 ∈ a + ⟨1 - w·f⟩` with a fresh `w`.
pub fn radical_member(f: &Polynomial, a: &Ideal) -> Result<bool> {
    check_support(f, a)?;
    let w = a.varset().fresh();
    let ext = a.varset().with(w.clone());
    let order = a.order().with_kind(OrderKind::GrevLex).extended(&ext);
    let one = Polynomial::one(ext.clone());
    let rab = &one - &(&Polynomial::var(&w) * f);
    let gens = a.generators().iter().cloned().chain([rab]).collect();
    Ok(Ideal::new(gens, order)?.is_unit())
}

/// Least `n <= bound` with `f^n ∈ a`, if any.
pub fn least_power(f: &Polynomial, a: &Ideal, bound: u32) -> Result<Option<u32>> {
    check_support(f, a)?;
    a.groebner_basis().least_power_in(f, bound)
}

/// The points of `V(a)`, provided the ideal is zero-dimensional and every
/// coordinate is rational. Points are sorted by their coordinates along the
/// ideal's variable sequence.
pub fn variety_points(a: &Ideal) -> VarietyResult {
    if a.is_unit() {
        return VarietyResult::Empty;
    }
    let lex = a.with_order(a.order().with_kind(OrderKind::Lex)).expect("same ring");
    let gb = lex.groebner_basis();
    let seq: Vec<Var> = lex.order().vars().to_vec();
    let leads = gb.leading_monomials();
    let zero_dim = seq.iter().all(|v| {
        leads.iter().any(|m| m.vars().count() == 1 && m.exponent(v) > 0)
    });
    if !zero_dim {
        return VarietyResult::NotZeroDimensional;
    }

    let mut partial = vec![Point::new()];
    for k in (0..seq.len()).rev() {
        let v = &seq[k];
        let tail: VarSet = seq[k..].iter().cloned().collect();
        let eliminants: Vec<&Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| g.support().is_subset(&tail))
            .collect();
        let mut next = Vec::new();
        for x in &partial {
            let mut h = UniPoly::zero();
            let mut consistent = true;
            for g in &eliminants {
                let u = UniPoly::from_polynomial(&g.partial_eval(x), v).expect("univariate after substitution");
                if u.is_constant() && !u.is_zero() {
                    consistent = false;
                    break;
                }
                h = h.gcd(&u);
            }
            if !consistent {
                continue;
            }
            let mut rest = h.squarefree();
            let roots = rest.rational_roots();
            for r in &roots {
                rest = rest.div_rem(&UniPoly::linear(r)).expect("nonzero").0;
            }
            if !rest.is_constant() {
                return VarietyResult::NonRational(rest.monic().to_polynomial(v));
            }
            for r in roots {
                let mut y = x.clone();
                y.insert(v.clone(), r);
                next.push(y);
            }
        }
        partial = next;
    }

    for x in &partial {
        for g in a.generators() {
            assert!(g.eval(x).expect("total point").is_zero(), "recovered point is not a zero");
        }
    }
    partial.sort_by(|x, y| cmp_along(&seq, x, y));
    VarietyResult::Points(partial)
}

fn cmp_along(seq: &[Var], x: &Point, y: &Point) -> Ordering {
    seq.iter()
        .map(|v| x.get(v).cmp(&y.get(v)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// `I(X)`, the intersection of the point ideals of `points`. With
/// `allow_empty`, the empty set yields the unit ideal.
pub fn vanishing_ideal(points: &[Point], vars: &VarSet, allow_empty: bool) -> Result<Ideal> {
    let Some((first, rest)) = points.split_first() else {
        if allow_empty {
            return Ideal::with_default_order(vec![Polynomial::one(vars.clone())], vars);
        }
        return Err(Error::EmptyPointSet);
    };
    let mut acc = point_ideal(first, vars)?;
    for x in rest {
        acc = intersect(&acc, &point_ideal(x, vars)?)?;
    }
    Ok(acc)
}

/// The contraction of `m` to `v` if it is `⟨v - x⟩`, returning `x`.
fn linear_value(gens: &[Polynomial], v: &Var) -> Option<Scalar> {
    let [g] = gens else { return None };
    let u = UniPoly::from_polynomial(g, v).ok()?;
    (u.degree() == Some(1)).then(|| -&u.monic().coeffs()[0])
}

/// Recovers `x` from a maximal ideal of the form `m_x` with rational `x`.
pub fn maximal_point(m: &Ideal) -> Result<Point> {
    if m.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut x = Point::new();
    for v in m.order().vars() {
        let c = eliminate(m, &VarSet::new([v.clone()]))?;
        let value = linear_value(c.groebner_basis().elements(), v)
            .ok_or_else(|| Error::NotUnitContraction(v.name().to_string()))?;
        x.insert(v.clone(), value);
    }
    if !ideal_equal(m, &point_ideal(&x, m.varset())?)? {
        return Err(Error::NotMaximal);
    }
    Ok(x)
}

/// Whether `m ∩ F[subvars]` is `⟨t - x_t : t ∈ subvars⟩` for rational
/// `x_t`; on success also returns those values.
pub fn check_statement_f(m: &Ideal, subvars: &VarSet) -> Result<(bool, Option<Point>)> {
    let c = eliminate(m, subvars)?;
    let gb = c.groebner_basis().elements();
    if gb.len() != subvars.len() {
        return Ok((false, None));
    }
    let mut x = Point::new();
    for g in gb {
        let Some(v) = g.univariate_var() else { return Ok((false, None)) };
        match linear_value(std::slice::from_ref(g), &v) {
            Some(value) if x.get(&v).is_none() => x.insert(v, value),
            _ => return Ok((false, None)),
        }
    }
    Ok((true, Some(x)))
}

/// Certifies `I(V(a)) = √a` on a zero-dimensional ideal with rational
/// variety: every basis element of `I(V(a))` is in `√a`, and `a ⊆ I(V(a))`.
pub fn strong_nss_check(a: &Ideal) -> Result<bool> {
    let points = match variety_points(a) {
        VarietyResult::Points(p) => p,
        VarietyResult::Empty if a.is_unit() => return Ok(true),
        VarietyResult::Empty => {
            return Err(Error::NotCheckable(NotCheckableReason::EmptyVarietyProperIdeal))
        }
        VarietyResult::NonRational(_) => return Err(Error::NotCheckable(NotCheckableReason::NonRational)),
        VarietyResult::NotZeroDimensional => {
            return Err(Error::NotCheckable(NotCheckableReason::NotZeroDimensional))
        }
    };
    let b = vanishing_ideal(&points, a.varset(), false)?;
    for g in b.groebner_basis().elements() {
        if !radical_member(g, a)? {
            return Ok(false);
        }
    }
    for f in a.generators() {
        if !b.contains(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}
