//! Extension of ideals to larger polynomial rings, vanishing ideals of
//! cylinders over finite point sets, and two exact constructions with
//! checkable identities: the interpolation certificate and the linear
//! factorization of a split rational function.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{divide, intersect, Ideal};
use crate::nullstellensatz::{least_power, radical_member};
use crate::ring::{
    Monomial, MonomialOrder, Point, Polynomial, RationalFunction, Scalar, UniPoly, Var, VarSet,
};

/// The ideal generated by `a`'s generators in the ring on `vars`. New
/// variables are appended to `a`'s order as the smallest ones.
pub fn extend_ideal(a: &Ideal, vars: &VarSet) -> Result<Ideal> {
    if !a.varset().is_subset(vars) {
        return Err(Error::NotASuperset);
    }
    Ideal::new(a.generators().to_vec(), a.order().extended(vars))
}

/// Probes radical membership in the extension `aF[J]` against `a` itself.
///
/// For probes over `a`'s own variables the two verdicts must agree. For
/// every probe, a power in the extension found within `bound` must come
/// with a positive radical verdict. A positive verdict with no power up to
/// `bound` is inconclusive and not counted as a failure.
pub fn corollary_check(a: &Ideal, vars: &VarSet, probes: &[Polynomial], bound: u32) -> Result<bool> {
    let u = extend_ideal(a, vars)?;
    for f in probes {
        let in_ext = radical_member(f, &u)?;
        if f.support().is_subset(a.varset()) && in_ext != radical_member(f, a)? {
            return Ok(false);
        }
        if !in_ext && least_power(f, &u, bound)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn ring_of(polys: &[&Polynomial]) -> VarSet {
    polys.iter().fold(VarSet::empty(), |acc, f| acc.union(f.varset()))
}

/// Monic (under grevlex) greatest common divisor, computed as `f·g / lcm`
/// with the lcm read off the principal ideal `⟨f⟩ ∩ ⟨g⟩`.
pub fn poly_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let vars = ring_of(&[f, g]);
    let order = MonomialOrder::grevlex(&vars);
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Ok(Polynomial::zero(vars)),
        (true, false) => return g.monic(&order),
        (false, true) => return f.monic(&order),
        _ => {}
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(vars));
    }
    let fi = Ideal::new(vec![f.clone()], order.clone())?;
    let gi = Ideal::new(vec![g.clone()], order.clone())?;
    let l = intersect(&fi, &gi)?;
    let [lcm] = l.groebner_basis().elements() else {
        unreachable!("intersection of principal ideals is principal")
    };
    let (q, r) = divide(&(f * g), std::slice::from_ref(lcm), &order)?;
    debug_assert!(r.is_zero());
    q[0].monic(&order)
}

/// Squarefree part `h / gcd(h, ∂h/∂t_1, …, ∂h/∂t_n)` of a multivariate
/// polynomial, monic under grevlex.
pub fn squarefree_multivariate(h: &Polynomial) -> Result<Polynomial> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let order = MonomialOrder::grevlex(h.varset());
    let mut d = h.clone();
    for v in h.support().iter() {
        d = poly_gcd(&d, &h.derivative(v))?;
    }
    let (q, r) = divide(h, &[d], &order)?;
    debug_assert!(r.is_zero());
    q[0].monic(&order)
}

/// Exact check of `√(⟨h⟩F[J]) = ⟨s⟩F[J]` for the squarefree part `s` of `h`:
/// `s` lies in the radical, `h` lies in `⟨s⟩`, and `s` is squarefree, so
/// `⟨s⟩` is radical and sits between the extension and its radical.
pub fn principal_extension_check(h: &Polynomial, vars: &VarSet) -> Result<bool> {
    if !h.varset().is_subset(vars) {
        return Err(Error::NotASuperset);
    }
    let order = MonomialOrder::grevlex(vars);
    let s = squarefree_multivariate(h)?;
    let u = Ideal::new(vec![h.clone()], order.clone())?;
    let r = Ideal::new(vec![s.clone()], order)?;
    for g in r.groebner_basis().elements() {
        if !radical_member(g, &u)? {
            return Ok(false);
        }
    }
    if !r.contains(h)? {
        return Ok(false);
    }
    let mut d = s.clone();
    for v in s.support().iter() {
        d = poly_gcd(&d, &s.derivative(v))?;
    }
    Ok(d.is_constant())
}

/// `⟨squarefree(h)⟩` in the ring on `vars`.
pub fn principal_radical(h: &Polynomial, vars: &VarSet) -> Result<Ideal> {
    let s = squarefree_multivariate(h)?.with_varset(vars)?;
    Ideal::with_default_order(vec![s], vars)
}

/// Whether `f` vanishes on the cylinder `X × F^(J∖I)`: every partial
/// evaluation at a point of `X` is the zero polynomial.
pub fn cylinder_membership(f: &Polynomial, points: &[Point], vars: &VarSet) -> Result<bool> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyPointSet);
    };
    let base = first.vars();
    for x in points {
        if x.vars() != base {
            return Err(Error::VarSetMismatch);
        }
    }
    if !base.is_subset(vars) {
        return Err(Error::NotASuperset);
    }
    if let Some(v) = f.support().iter().find(|v| !vars.contains(v)) {
        return Err(Error::VariableOutsideOrder(v.name().to_string()));
    }
    Ok(points.iter().all(|x| f.partial_eval(x).is_zero()))
}

/// One point `z` of the interpolation certificate with its multiplier and
/// the pair `(m, g)` satisfying `m + (t - z)·g = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Claim5Entry {
    pub z: Scalar,
    pub lambda: Scalar,
    pub m: Polynomial,
    pub g: Polynomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Claim5Certificate {
    pub var: Var,
    pub entries: Vec<Claim5Entry>,
}

fn linear(t: &Var, z: &Scalar, vars: &VarSet) -> Polynomial {
    &Polynomial::var(t) - &Polynomial::constant(z.clone(), vars.clone())
}

impl Claim5Certificate {
    fn ring(&self) -> VarSet {
        self.entries
            .iter()
            .fold(VarSet::new([self.var.clone()]), |acc, e| acc.union(e.m.varset()).union(e.g.varset()))
    }

    /// Checks every invariant of the certificate.
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidCertificate(msg));
        if self.entries.is_empty() {
            return invalid("no entries".into());
        }
        let vars = self.ring();
        let mut seen = BTreeSet::new();
        let mut sum = Polynomial::zero(vars.clone());
        for (p, e) in self.entries.iter().enumerate() {
            if !seen.insert(&e.z) {
                return invalid(format!("point {} repeated", e.z));
            }
            if e.lambda.is_zero() {
                return invalid(format!("multiplier of entry {p} is zero"));
            }
            let one = &e.m + &(&linear(&self.var, &e.z, &vars) * &e.g);
            if one != Polynomial::one(vars.clone()) {
                return invalid(format!("entry {p} violates m + (t - z)*g = 1"));
            }
            sum = &sum + &e.g.scale(&e.lambda);
        }
        if !sum.is_zero() {
            return invalid("sum of lambda*g is not zero".into());
        }
        Ok(())
    }
}

/// Builds `g = Σ_p λ_p ∏_{q≠p} (t - z_q)` from a validated certificate and
/// confirms `g = Σ_p [λ_p ∏_{q≠p} (t - z_q)]·m_p` and
/// `g(z_1) = λ_1 ∏_{q≥2} (z_1 - z_q) ≠ 0`.
pub fn claim5_construct(cert: &Claim5Certificate) -> Result<Polynomial> {
    cert.validate()?;
    let vars = cert.ring();
    let t = &cert.var;
    let coefficient = |p: usize| -> Polynomial {
        cert.entries
            .iter()
            .enumerate()
            .filter(|(q, _)| *q != p)
            .fold(Polynomial::constant(cert.entries[p].lambda.clone(), vars.clone()), |acc, (_, e)| {
                &acc * &linear(t, &e.z, &vars)
            })
    };
    let mut g = Polynomial::zero(vars.clone());
    let mut rearranged = Polynomial::zero(vars.clone());
    for (p, e) in cert.entries.iter().enumerate() {
        let c = coefficient(p);
        rearranged = &rearranged + &(&c * &e.m);
        g = &g + &c;
    }
    if g != rearranged {
        return Err(Error::InvalidCertificate("rearrangement identity fails".into()));
    }
    let first = &cert.entries[0];
    let expected = cert.entries[1..]
        .iter()
        .fold(first.lambda.clone(), |acc, e| acc * (&first.z - &e.z));
    let at_z1 = g.eval(&Point::from_pairs([(t.clone(), first.z.clone())]))?;
    if at_z1 != expected || at_z1.is_zero() {
        return Err(Error::InvalidCertificate("g(z_1) does not match".into()));
    }
    Ok(g)
}

/// `λ ∏ (s - a)^k` with distinct roots `a` and nonzero integer exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactorization {
    pub var: Var,
    pub scale: Scalar,
    pub factors: BTreeMap<Scalar, i32>,
}

impl LinearFactorization {
    pub fn reconstruct(&self) -> RationalFunction {
        let mut acc = RationalFunction::constant(self.var.clone(), self.scale.clone());
        for (a, k) in &self.factors {
            let f = RationalFunction::polynomial(self.var.clone(), UniPoly::linear(a));
            acc = &acc * &f.pow(*k).expect("linear factor is nonzero");
        }
        acc
    }
}

fn split_roots(p: &UniPoly) -> Result<Vec<(Scalar, u32)>> {
    let roots: Vec<(Scalar, u32)> =
        p.rational_roots().into_iter().map(|a| { let k = p.multiplicity(&a); (a, k) }).collect();
    let total: usize = roots.iter().map(|(_, k)| *k as usize).sum();
    if Some(total) != p.degree() {
        return Err(Error::NonSplit);
    }
    Ok(roots)
}

/// Factors a rational function into linear factors over the rationals.
pub fn claim3_factor(r: &RationalFunction) -> Result<LinearFactorization> {
    if r.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let num = r.numerator();
    let den = r.denominator();
    let mut factors = BTreeMap::new();
    for (a, k) in split_roots(num)? {
        factors.insert(a, k as i32);
    }
    for (a, k) in split_roots(den)? {
        factors.insert(a, -(k as i32));
    }
    let scale = num.lead().expect("nonzero") / den.lead().expect("nonzero");
    Ok(LinearFactorization { var: r.var().clone(), scale, factors })
}

/// `(f, g)` with `f = λ ∏_{k>0} (t - a)^k` over `{t}` and
/// `g = ∏_{k<0} u_a^{-k}`, where `u_a` is the variable assigned to root `a`.
/// Substituting `t ↦ s`, `u_a ↦ 1/(s - a)` sends `f·g` to the factored
/// function; this is checked before returning.
pub fn claim3_preimage(
    fac: &LinearFactorization,
    t: &Var,
    var_of_root: &BTreeMap<Scalar, Var>,
) -> Result<(Polynomial, Polynomial)> {
    let tv = VarSet::new([t.clone()]);
    let mut f = Polynomial::constant(fac.scale.clone(), tv.clone());
    let mut g_pairs = Vec::new();
    for (a, &k) in &fac.factors {
        if k > 0 {
            f = &f * &linear(t, a, &tv).pow(k as u32);
        } else {
            let u = var_of_root.get(a).ok_or_else(|| Error::MissingRootVariable(a.to_string()))?;
            if u == t {
                return Err(Error::DuplicateVariable(u.name().to_string()));
            }
            g_pairs.push((u.clone(), k.unsigned_abs()));
        }
    }
    let gvars: VarSet = g_pairs.iter().map(|(u, _)| u.clone()).collect();
    if gvars.len() != g_pairs.len() {
        let mut seen = BTreeSet::new();
        let dup = g_pairs.iter().find(|(u, _)| !seen.insert(u)).expect("duplicate exists");
        return Err(Error::DuplicateVariable(dup.0.name().to_string()));
    }
    let g = Polynomial::from_terms([(Monomial::from_pairs(g_pairs), Scalar::one())], gvars);
    let image = claim3_substitute(&(&f * &g), t, &fac.var, var_of_root)?;
    assert_eq!(image, fac.reconstruct(), "substitution does not reproduce the factorization");
    Ok((f, g))
}

/// The image of `p` under `t ↦ s`, `u_a ↦ 1/(s - a)`.
pub fn claim3_substitute(
    p: &Polynomial,
    t: &Var,
    s: &Var,
    var_of_root: &BTreeMap<Scalar, Var>,
) -> Result<RationalFunction> {
    let mut images: BTreeMap<&Var, RationalFunction> = BTreeMap::new();
    images.insert(t, RationalFunction::polynomial(s.clone(), UniPoly::linear(&Scalar::zero())));
    for (a, u) in var_of_root {
        let lin = RationalFunction::polynomial(s.clone(), UniPoly::linear(a));
        images.insert(u, lin.inv()?);
    }
    let mut acc = RationalFunction::constant(s.clone(), Scalar::zero());
    for (m, c) in p.terms() {
        let mut term = RationalFunction::constant(s.clone(), c.clone());
        for (v, e) in m.iter() {
            let img = images.get(v).ok_or_else(|| Error::UnknownVariable(v.name().to_string()))?;
            term = &term * &img.pow(*e as i32)?;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}
