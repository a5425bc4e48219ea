//! Buchberger's algorithm on exponent vectors.
//!
//! Polynomials are lists of `(exponents, coefficient)` sorted ascending under
//! the active order, so the leading term is the last element.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};

use crate::error::Result;
use crate::ring::{MonomialOrder, Polynomial, Scalar, VarSet};

pub(crate) type Exps = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OPoly {
    pub terms: Vec<(Exps, Scalar)>,
}

impl OPoly {
    pub fn zero() -> Self {
        OPoly { terms: Vec::new() }
    }

    pub fn from_poly(f: &Polynomial, order: &MonomialOrder) -> Result<Self> {
        let mut terms = f
            .terms()
            .map(|(m, c)| Ok((order.exponents(m)?, c.clone())))
            .collect::<Result<Vec<_>>>()?;
        terms.sort_by(|a, b| order.cmp_exponents(&a.0, &b.0));
        Ok(OPoly { terms })
    }

    pub fn to_poly(&self, order: &MonomialOrder, vars: &VarSet) -> Polynomial {
        Polynomial::from_terms(
            self.terms.iter().map(|(e, c)| (order.monomial(e), c.clone())),
            vars.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &(Exps, Scalar) {
        self.terms.last().expect("nonzero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.lead().0.iter().all(|&e| e == 0)
    }

    pub fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `self * c * x^m`
    pub fn mul_term(&self, m: &[u32], c: &Scalar) -> OPoly {
        OPoly {
            terms: self.terms.iter().map(|(e, x)| (add(e, m), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &OPoly, order: &MonomialOrder) -> OPoly {
        let mut acc = OPoly::zero();
        for (e, c) in &other.terms {
            acc = acc.sub_scaled(&(-c), e, self, order);
        }
        acc
    }

    /// `self - c * x^m * g`, merged in order.
    pub fn sub_scaled(&self, c: &Scalar, m: &[u32], g: &OPoly, order: &MonomialOrder) -> OPoly {
        let a = &self.terms;
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<Exps> = b.first().map(|t| add(&t.0, m));
        while i < a.len() || j < b.len() {
            let ord = match (&shifted, a.get(i)) {
                (None, _) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some(s), Some(t)) => order.cmp_exponents(&t.0, s),
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let s = shifted.take().expect("pending");
                    out.push((s, -(c * &b[j].1)));
                    j += 1;
                    shifted = b.get(j).map(|t| add(&t.0, m));
                }
                Ordering::Equal => {
                    let s = shifted.take().expect("pending");
                    let v = &a[i].1 - c * &b[j].1;
                    if !v.is_zero() {
                        out.push((s, v));
                    }
                    i += 1;
                    j += 1;
                    shifted = b.get(j).map(|t| add(&t.0, m));
                }
            }
        }
        OPoly { terms: out }
    }
}

fn add(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Multivariate division. Divisors are tried in sequence order; returns the
/// quotient terms per divisor and the remainder.
pub(crate) fn divide(
    f: &OPoly,
    divisors: &[&OPoly],
    order: &MonomialOrder,
    track: bool,
) -> (Vec<Vec<(Exps, Scalar)>>, OPoly) {
    let mut quotients = vec![Vec::new(); if track { divisors.len() } else { 0 }];
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((lm, lc)) = p.terms.last() {
        let hit = divisors
            .iter()
            .position(|g| !g.is_zero() && divides(&g.lead().0, lm));
        match hit {
            Some(k) => {
                let (glm, glc) = divisors[k].lead();
                let m = sub(lm, glm);
                let c = lc / glc;
                p = p.sub_scaled(&c, &m, divisors[k], order);
                if track {
                    quotients[k].push((m, c));
                }
            }
            None => rem.push(p.terms.pop().expect("nonempty")),
        }
    }
    rem.reverse();
    (quotients, OPoly { terms: rem })
}

pub(crate) fn reduce(f: &OPoly, basis: &[OPoly], order: &MonomialOrder) -> OPoly {
    let refs: Vec<&OPoly> = basis.iter().collect();
    divide(f, &refs, order, false).1
}

pub(crate) fn s_polynomial(f: &OPoly, g: &OPoly, order: &MonomialOrder) -> OPoly {
    let (fl, fc) = f.lead();
    let (gl, gc) = g.lead();
    let l = lcm(fl, gl);
    let a = f.mul_term(&sub(&l, fl), &fc.recip());
    a.sub_scaled(&gc.recip(), &sub(&l, gl), g, order)
}

/// Pending S-pairs `(i, j)` with `i < j`, queued by lcm degree.
#[derive(Default)]
struct Pairs {
    queue: BTreeSet<(u64, usize, usize)>,
    members: HashSet<(usize, usize)>,
}

impl Pairs {
    fn add_element(&mut self, basis: &mut Vec<OPoly>, g: OPoly) {
        let k = basis.len();
        for (i, f) in basis.iter().enumerate() {
            let deg = lcm(&f.lead().0, &g.lead().0).iter().map(|&e| e as u64).sum();
            self.queue.insert((deg, k, i));
            self.members.insert((i, k));
        }
        basis.push(g);
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let (_, j, i) = self.queue.pop_first()?;
        self.members.remove(&(i, j));
        Some((i, j))
    }

    fn contains(&self, i: usize, j: usize) -> bool {
        self.members.contains(&(i, j))
    }
}

fn unit_basis(n: usize) -> Vec<OPoly> {
    vec![OPoly { terms: vec![(vec![0; n], Scalar::one())] }]
}

/// Reduced monic Gröbner basis, sorted by decreasing leading monomial.
pub(crate) fn groebner(gens: &[OPoly], order: &MonomialOrder) -> Vec<OPoly> {
    let n = order.vars().len();
    let mut basis: Vec<OPoly> = Vec::new();
    let mut pending = Pairs::default();

    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut g = g.clone();
        g.make_monic();
        if g.is_constant() {
            return unit_basis(n);
        }
        pending.add_element(&mut basis, g);
    }

    // normal strategy: smallest lcm degree first, ties by index
    while let Some((i, j)) = pending.pop() {
        let li = &basis[i].lead().0;
        let lj = &basis[j].lead().0;
        let skip = coprime(li, lj) || {
            let l = lcm(li, lj);
            (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && divides(&basis[k].lead().0, &l)
                    && !pending.contains(i.min(k), i.max(k))
                    && !pending.contains(j.min(k), j.max(k))
            })
        };
        if skip {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let mut r = reduce(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        if r.is_constant() {
            return unit_basis(n);
        }
        pending.add_element(&mut basis, r);
    }

    interreduce(basis, order)
}

/// Minimal basis followed by tail reduction; input must be a Gröbner basis
/// of monic polynomials.
pub(crate) fn interreduce(basis: Vec<OPoly>, order: &MonomialOrder) -> Vec<OPoly> {
    let mut minimal: Vec<OPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = &g.lead().0;
        let redundant = basis.iter().enumerate().any(|(h, other)| {
            let lo = &other.lead().0;
            h != k && divides(lo, lg) && (lo != lg || h < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    for k in 0..minimal.len() {
        let others: Vec<&OPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(h, _)| *h != k)
            .map(|(_, g)| g)
            .collect();
        let (_, mut r) = divide(&minimal[k], &others, order, false);
        r.make_monic();
        minimal[k] = r;
    }
    minimal.sort_by(|a, b| order.cmp_exponents(&b.lead().0, &a.lead().0));
    minimal
}
