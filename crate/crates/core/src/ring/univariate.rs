//! Dense univariate polynomials over Q, used for gcds, squarefree parts,
//! rational root extraction and rational functions.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Scalar, Var};
use crate::error::{Error, Result};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    /// `s - a`
    pub fn linear(a: &Scalar) -> Self {
        UniPoly(vec![-a, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.0.last()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.0.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => UniPoly::zero(),
        }
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let z = Scalar::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        (0..n).fold(UniPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?.clone();
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            if !c.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    r[k + i] -= &c * di;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b nonzero");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// `f / gcd(f, f')`, monic. The zero polynomial maps to zero.
    pub fn squarefree(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("gcd nonzero").0.monic()
    }

    /// Distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        if self.is_constant() {
            return Vec::new();
        }
        let g = self.squarefree();
        let n = g.degree().expect("nonconstant");
        // Integer coefficients a_k, then the monic integer polynomial
        // h(y) = a_n^(n-1) g(y / a_n) whose integer roots are a_n * roots of g.
        let den = g.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let a: Vec<BigInt> = g.0.iter().map(|c| (c * Scalar::from_integer(den.clone())).to_integer()).collect();
        let an = a[n].clone();
        let h: Vec<BigInt> = (0..=n)
            .map(|k| if k == n { BigInt::one() } else { &a[k] * num_traits::pow(an.clone(), n - 1 - k) })
            .collect();
        let mut roots: Vec<Scalar> = integer_roots_monic(&h)
            .into_iter()
            .map(|y| Scalar::new(y, an.clone()))
            .collect();
        roots.sort();
        roots
    }

    /// Exponent of `(s - a)` in this polynomial (nonzero polynomial).
    pub fn multiplicity(&self, a: &Scalar) -> u32 {
        let lin = UniPoly::linear(a);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, r) = p.div_rem(&lin).expect("nonzero divisor");
            if !r.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }

    pub fn from_polynomial(f: &Polynomial, v: &Var) -> Result<UniPoly> {
        let mut coeffs = Vec::new();
        for (m, c) in f.terms() {
            let (rest, e) = m.split_off(v);
            if !rest.is_one() {
                return Err(Error::NotUnivariate);
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Scalar::zero());
            }
            coeffs[e] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_polynomial(&self, v: &Var) -> Polynomial {
        Polynomial::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var_pow(v.clone(), i as u32), c.clone())),
            super::VarSet::new([v.clone()]),
        )
    }
}

/// Integer roots of a squarefree monic integer polynomial (constant term
/// first). Real roots are isolated with a Sturm sequence evaluated at
/// half-integers, which are never roots of a monic integer polynomial.
fn integer_roots_monic(h: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut coeffs = h.to_vec();
    if coeffs[0].is_zero() {
        out.push(BigInt::zero());
        coeffs.remove(0);
    }
    if coeffs.len() <= 1 {
        return out;
    }
    let p = UniPoly::new(coeffs.iter().cloned().map(Scalar::from_integer).collect());
    let chain = sturm_chain(&p);
    let bound: BigInt = coeffs.iter().map(|c: &BigInt| c.abs()).max().expect("nonempty") + 1;
    let half = Scalar::new(BigInt::one(), BigInt::from(2));
    let variations = |k: &BigInt| -> usize {
        // at k + 1/2
        let x = Scalar::from_integer(k.clone()) + &half;
        sign_variations(&chain, &x)
    };
    // Integers in [lo, hi] are isolated by the interval (lo - 1/2, hi + 1/2).
    let mut stack = vec![(-&bound, bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations(&(&lo - 1)) - variations(&hi);
        if count == 0 {
            continue;
        }
        if lo == hi {
            if p.eval(&Scalar::from_integer(lo.clone())).is_zero() {
                out.push(lo);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid + 1, hi));
    }
    out
}

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn sign_variations(chain: &[UniPoly], x: &Scalar) -> usize {
    let signs: Vec<Ordering> = chain
        .iter()
        .map(|q| q.eval(x).cmp(&Scalar::zero()))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n.into(), d.into())
    }

    fn from_roots(roots: &[Scalar], lead: Scalar) -> UniPoly {
        roots
            .iter()
            .fold(UniPoly::constant(lead), |acc, r| acc.mul(&UniPoly::linear(r)))
    }

    #[test]
    fn gcd_and_division() {
        let f = from_roots(&[q(1, 1), q(2, 1), q(3, 1)], q(5, 1));
        let g = from_roots(&[q(2, 1), q(3, 1), q(-7, 1)], q(-2, 1));
        assert_eq!(f.gcd(&g), from_roots(&[q(2, 1), q(3, 1)], q(1, 1)));
        let (quo, rem) = f.div_rem(&g).unwrap();
        assert_eq!(quo.mul(&g).add(&rem), f);
        assert!(f.div_rem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn rational_roots_found_exactly() {
        let roots = [q(-3, 2), q(0, 1), q(2, 7), q(5, 1), q(1000003, 3)];
        let f = from_roots(&roots, q(7, 3)).mul(&UniPoly::new(vec![q(2, 1), q(0, 1), q(1, 1)]));
        let mut expected = roots.to_vec();
        expected.sort();
        assert_eq!(f.rational_roots(), expected);
        // repeated roots count once
        let g = from_roots(&[q(1, 2), q(1, 2), q(-1, 1)], q(1, 1));
        assert_eq!(g.rational_roots(), vec![q(-1, 1), q(1, 2)]);
        assert_eq!(g.multiplicity(&q(1, 2)), 2);
        assert!(UniPoly::new(vec![q(-2, 1), q(0, 1), q(1, 1)]).rational_roots().is_empty());
    }

    #[test]
    fn close_roots_are_separated() {
        let f = from_roots(&[q(1, 1000), q(1, 999), q(-1, 1000)], q(1, 1));
        assert_eq!(f.rational_roots(), vec![q(-1, 1000), q(1, 1000), q(1, 999)]);
    }
}
