use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Pow, Zero};

use super::{Monomial, MonomialOrder, Point, Scalar, Var, VarSet};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Equality compares the polynomial itself; the ambient variable set is
/// carried along but is not part of the value.
#[derive(Clone)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Scalar>,
    vars: VarSet,
}

impl Polynomial {
    pub fn zero(vars: VarSet) -> Self {
        Polynomial { terms: BTreeMap::new(), vars }
    }

    pub fn constant(c: Scalar, vars: VarSet) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms, vars }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(Scalar::one(), vars)
    }

    /// The polynomial `v` over the ring `{v}`.
    pub fn var(v: &Var) -> Self {
        Self::monomial(Monomial::var(v.clone()), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        Self::from_terms([(m, c)], VarSet::empty())
    }

    /// Collects like terms. The variable set is widened to cover the support.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I, vars: VarSet) -> Self {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_insert_with(Scalar::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let support: VarSet = map.keys().flat_map(|m| m.vars().cloned()).collect();
        Polynomial { terms: map, vars: vars.union(&support) }
    }

    pub fn varset(&self) -> &VarSet {
        &self.vars
    }

    /// Same polynomial over a larger ring.
    pub fn with_varset(mut self, vars: &VarSet) -> Result<Self> {
        if !self.support().is_subset(vars) {
            return Err(Error::NotASuperset);
        }
        self.vars = vars.clone();
        Ok(self)
    }

    pub(crate) fn widen(mut self, vars: &VarSet) -> Self {
        self.vars = self.vars.union(vars);
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Scalar> {
        self.is_constant()
            .then(|| self.coefficient(&Monomial::one()))
    }

    /// Variables that actually occur.
    pub fn support(&self) -> VarSet {
        self.terms.keys().flat_map(|m| m.vars().cloned()).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
            vars: self.vars.clone(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        Polynomial::from_terms(
            self.terms.iter().map(|(u, x)| (u * m, x * c)),
            self.vars.clone(),
        )
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.vars.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Largest monomial of the support under `order`, with its coefficient.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Scalar)> {
        let mut best: Option<(&Monomial, Vec<u32>)> = None;
        for m in self.terms.keys() {
            let e = order.exponents(m)?;
            match &best {
                Some((_, be)) if order.cmp_exponents(&e, be).is_le() => {}
                _ => best = Some((m, e)),
            }
        }
        let (m, _) = best.ok_or(Error::ZeroPolynomial)?;
        Ok((m.clone(), self.terms[m].clone()))
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Result<Polynomial> {
        let (_, c) = self.leading_term(order)?;
        Ok(self.scale(&c.recip()))
    }

    /// Substitutes the assigned variables; the result lives over the
    /// remaining variables. Assignments to variables outside the ring are
    /// ignored.
    pub fn partial_eval(&self, point: &Point) -> Polynomial {
        let rest = self.vars.difference(&point.vars());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut coeff = c.clone();
            let mut kept = Vec::new();
            for (v, e) in m.iter() {
                match point.get(v) {
                    Some(x) => coeff *= Pow::pow(x, *e),
                    None => kept.push((v.clone(), *e)),
                }
            }
            (Monomial::from_pairs(kept), coeff)
        });
        Polynomial::from_terms(terms, rest)
    }

    /// Full evaluation; every variable of the support must be assigned.
    pub fn eval(&self, point: &Point) -> Result<Scalar> {
        point.check_total(&self.support())?;
        Ok(self
            .partial_eval(point)
            .constant_value()
            .expect("all support variables assigned"))
    }

    pub fn derivative(&self, v: &Var) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let (rest, e) = m.split_off(v);
            (e > 0).then(|| {
                let m = &rest * &Monomial::var_pow(v.clone(), e - 1);
                (m, c * Scalar::from_integer(e.into()))
            })
        });
        Polynomial::from_terms(terms, self.vars.clone())
    }

    /// The single variable of a non-constant univariate polynomial.
    pub fn univariate_var(&self) -> Option<Var> {
        let s = self.support();
        (s.len() == 1).then(|| s.as_slice()[0].clone())
    }

    /// Substitutes polynomials for variables.
    pub fn compose(&self, images: &BTreeMap<Var, Polynomial>) -> Polynomial {
        let mut vars = self.vars.difference(&images.keys().cloned().collect());
        for p in images.values() {
            vars = vars.union(p.varset());
        }
        let mut acc = Polynomial::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone(), vars.clone());
            for (v, e) in m.iter() {
                let f = match images.get(v) {
                    Some(p) => p.pow(*e),
                    None => Polynomial::monomial(Monomial::var_pow(v.clone(), *e), Scalar::one()),
                };
                t = &t * &f;
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints under grevlex on the canonical variable sequence.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = MonomialOrder::grevlex(&self.vars.union(&self.support()));
        f.write_str(&crate::parser::print_poly(self, &order))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let e = terms.entry(m.clone()).or_insert_with(Scalar::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Polynomial { terms, vars: self.vars.union(&rhs.vars) }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            vars: self.vars.clone(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                *terms.entry(a * b).or_insert_with(Scalar::zero) += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { terms, vars: self.vars.union(&rhs.vars) }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { (&self).$f(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial { (&self).$f(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Squarefree part `f / gcd(f, f')` of a univariate polynomial, made monic.
/// Nonzero constants have squarefree part one.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let Some(v) = f.univariate_var() else {
        if f.is_constant() {
            return Ok(Polynomial::one(f.varset().clone()));
        }
        return Err(Error::NotUnivariate);
    };
    let u = super::UniPoly::from_polynomial(f, &v)?;
    Ok(u.squarefree().to_polynomial(&v).widen(f.varset()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;

    fn p(s: &str) -> Polynomial {
        parse_poly(s, &VarSet::from_names(&["x", "y", "z"])).unwrap()
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n.into(), d.into())
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(p("x+1") * p("x-1"), p("x^2-1"));
        assert_eq!(p("x*y+3") + Polynomial::zero(VarSet::empty()), p("x*y+3"));
        assert!((p("x") - p("x")).is_zero());
    }

    #[test]
    fn binomial_cube_matches_repeated_multiplication() {
        // oracle: three explicit multiplications, coefficients collected by hand: 1 3 3 1
        let s = p("x+y");
        let expanded = &(&s * &s) * &s;
        assert_eq!(expanded, p("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
        assert_eq!(s.pow(3), expanded);
    }

    #[test]
    fn leading_terms() {
        let vars = VarSet::from_names(&["x", "y"]);
        let f = p("x^2 + y^3");
        let lex = MonomialOrder::lex(&vars);
        let grlex = MonomialOrder::grlex(&vars);
        assert_eq!(f.leading_term(&lex).unwrap(), (Monomial::var_pow("x".into(), 2), q(1, 1)));
        assert_eq!(f.leading_term(&grlex).unwrap(), (Monomial::var_pow("y".into(), 3), q(1, 1)));
        let g = p("3*x*y - 2*x");
        let xy = Monomial::from_pairs([("x".into(), 1), ("y".into(), 1)]);
        assert_eq!(g.leading_term(&lex).unwrap(), (xy, q(3, 1)));
        assert_eq!(p("0").leading_term(&lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn partial_evaluation() {
        let x = Var::new("x");
        let y = Var::new("y");
        let at = |pairs: &[(&Var, i64)]| {
            Point::from_pairs(pairs.iter().map(|(v, c)| ((*v).clone(), q(*c, 1))))
        };
        assert_eq!(p("x*y + y^2").partial_eval(&at(&[(&x, 1)])), p("y + y^2"));
        let full = p("x^2 + y").partial_eval(&at(&[(&x, 2), (&y, 3)]));
        assert_eq!(full.constant_value(), Some(q(7, 1)));
        assert!(p("(x-1)*z").partial_eval(&at(&[(&x, 1)])).is_zero());
        assert_eq!(p("x*y").eval(&at(&[(&x, 1)])), Err(Error::PartialPoint("y".into())));
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(&p("x^2*(x-1)")).unwrap(), p("x^2 - x"));
        assert_eq!(squarefree_part(&p("x^2+1")).unwrap(), p("x^2+1"));
        assert_eq!(squarefree_part(&p("(x-2)^3")).unwrap(), p("x-2"));
        assert_eq!(squarefree_part(&p("4*(y-2)^2")).unwrap(), p("y-2"));
        assert_eq!(squarefree_part(&p("0")), Err(Error::ZeroPolynomial));
        assert_eq!(squarefree_part(&p("x*y")), Err(Error::NotUnivariate));
    }

    #[test]
    fn derivative_and_compose() {
        let x = Var::new("x");
        assert_eq!(p("x^3*y + x + 5").derivative(&x), p("3*x^2*y + 1"));
        let mut images = BTreeMap::new();
        images.insert(x.clone(), p("y+1"));
        assert_eq!(p("x^2 - z").compose(&images), p("y^2 + 2*y + 1 - z"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly() -> impl Strategy<Value = Polynomial> {
            prop::collection::vec(((0u32..3, 0u32..3), -5i64..6), 0..5).prop_map(|ts| {
                Polynomial::from_terms(
                    ts.into_iter().map(|((a, b), c)| {
                        (
                            Monomial::from_pairs([("x".into(), a), ("y".into(), b)]),
                            Scalar::from_integer(c.into()),
                        )
                    }),
                    VarSet::from_names(&["x", "y"]),
                )
            })
        }

        proptest! {
            #[test]
            fn partial_eval_commutes(f in small_poly(), a in -3i64..4, b in -3i64..4) {
                let px = Point::from_pairs([("x".into(), q(a, 1))]);
                let py = Point::from_pairs([("y".into(), q(b, 2))]);
                prop_assert_eq!(f.partial_eval(&Point::new()), f.clone());
                prop_assert_eq!(
                    f.partial_eval(&px).partial_eval(&py),
                    f.partial_eval(&py).partial_eval(&px)
                );
            }

            #[test]
            fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
                prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
                prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
                prop_assert_eq!(&f * &g, &g * &f);
            }
        }
    }
}
