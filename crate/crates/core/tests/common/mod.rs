//! Oracles and seeded generators shared by the integration tests.
//!
//! The oracles avoid the Gröbner engine: membership is decided by linear
//! algebra on a Macaulay matrix, reduction by a plain textbook loop over
//! `Polynomial` arithmetic.

#![allow(dead_code)]

pub mod golden;

use std::collections::BTreeMap;

use nss_core::ring::Monomial;
use nss_core::{MonomialOrder, Point, Polynomial, Scalar, Var, VarSet};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

pub fn vars(names: &[&str]) -> VarSet {
    VarSet::from_names(names)
}

pub const NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn first_vars(n: usize) -> VarSet {
    VarSet::from_names(&NAMES[..n])
}

/// Small nonzero rational with numerator in [-5, 5] and denominator in [1, 3].
pub fn small_nonzero(rng: &mut Rng8) -> Scalar {
    loop {
        let n: i64 = rng.gen_range(-5..=5);
        if n != 0 {
            return q(n, rng.gen_range(1..=3));
        }
    }
}

pub fn small_rational(rng: &mut Rng8) -> Scalar {
    q(rng.gen_range(-4..=4), rng.gen_range(1..=2))
}

pub fn random_monomial(rng: &mut Rng8, vs: &VarSet, max_deg: u32) -> Monomial {
    let deg = rng.gen_range(0..=max_deg);
    let mut exps: BTreeMap<Var, u32> = BTreeMap::new();
    for _ in 0..deg {
        let v = vs.as_slice().choose(rng).expect("nonempty ring").clone();
        *exps.entry(v).or_default() += 1;
    }
    Monomial::from_pairs(exps)
}

/// Sparse random polynomial with up to `terms` terms of degree at most `max_deg`.
pub fn random_poly(rng: &mut Rng8, vs: &VarSet, max_deg: u32, terms: usize) -> Polynomial {
    let n = rng.gen_range(1..=terms);
    let ts: Vec<(Monomial, Scalar)> =
        (0..n).map(|_| (random_monomial(rng, vs, max_deg), small_nonzero(rng))).collect();
    Polynomial::from_terms(ts, vs.clone())
}

/// Random polynomial whose top-degree part has exactly degree `deg`.
pub fn random_poly_of_degree(rng: &mut Rng8, vs: &VarSet, deg: u32, terms: usize) -> Polynomial {
    loop {
        let mut f = random_poly(rng, vs, deg, terms);
        let lead = random_monomial_exact(rng, vs, deg);
        f = &f + &Polynomial::monomial(lead, small_nonzero(rng)).widen_to(vs);
        if f.total_degree() == Some(deg) {
            return f;
        }
    }
}

pub fn random_monomial_exact(rng: &mut Rng8, vs: &VarSet, deg: u32) -> Monomial {
    let mut exps: BTreeMap<Var, u32> = BTreeMap::new();
    for _ in 0..deg {
        let v = vs.as_slice().choose(rng).expect("nonempty ring").clone();
        *exps.entry(v).or_default() += 1;
    }
    Monomial::from_pairs(exps)
}

pub fn random_point(rng: &mut Rng8, vs: &VarSet) -> Point {
    Point::from_pairs(vs.iter().map(|v| (v.clone(), small_rational(rng))))
}

/// `f - f(p)`, so the result vanishes at `p`.
pub fn shift_to_vanish(f: &Polynomial, p: &Point) -> Polynomial {
    let c = f.eval(p).expect("total point");
    f - &Polynomial::constant(c, f.varset().clone())
}

pub trait Widen {
    fn widen_to(self, vs: &VarSet) -> Polynomial;
}

impl Widen for Polynomial {
    fn widen_to(self, vs: &VarSet) -> Polynomial {
        let all = vs.union(self.varset());
        self.with_varset(&all).expect("superset")
    }
}

pub fn constant(c: Scalar, vs: &VarSet) -> Polynomial {
    Polynomial::constant(c, vs.clone())
}

pub fn linear(v: &Var, a: &Scalar, vs: &VarSet) -> Polynomial {
    &Polynomial::var(v).widen_to(vs) - &constant(a.clone(), vs)
}

// ---------------------------------------------------------------------------
// Macaulay matrix membership

type Row = BTreeMap<Vec<u32>, Scalar>;

fn exps_of(m: &Monomial, vs: &VarSet) -> Vec<u32> {
    vs.iter().map(|v| m.exponent(v)).collect()
}

fn row_of(f: &Polynomial, vs: &VarSet) -> Row {
    f.terms().map(|(m, c)| (exps_of(m, vs), c.clone())).collect()
}

fn monomials_up_to(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for e in 0..=deg {
        for mut rest in monomials_up_to(n - 1, deg - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Row echelon basis keyed by each row's largest column.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<Vec<u32>, Row>,
}

impl Echelon {
    fn reduce(&self, mut row: Row) -> Row {
        loop {
            let Some((pivot, c)) = row.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                return row;
            };
            let Some(base) = self.rows.get(&pivot) else {
                // the pivot survives; reduce the remaining tail separately
                let (head_k, head_c) = row.pop_last().expect("nonempty");
                let mut tail = self.reduce(row);
                tail.insert(head_k, head_c);
                return tail;
            };
            let factor = &c / &base[&pivot];
            for (k, b) in base {
                let v = row.entry(k.clone()).or_insert_with(Scalar::zero);
                *v -= &factor * b;
                if v.is_zero() {
                    row.remove(k);
                }
            }
        }
    }

    fn insert(&mut self, row: Row) {
        let row = self.reduce(row);
        if let Some(pivot) = row.keys().next_back().cloned() {
            self.rows.insert(pivot, row);
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// `f` lies in the span of `m·g` over all generators `g` and monomials `m`
/// with `deg(m·g) <= degree`. Exact when `f` has a representation of that
/// degree; decided as rank(M) = rank(M + f).
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial], vs: &VarSet, degree: u32) -> bool {
    let mut ech = Echelon::default();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().expect("nonzero");
        if dg > degree {
            continue;
        }
        let base = row_of(g, vs);
        for m in monomials_up_to(vs.len(), degree - dg) {
            let shifted: Row = base
                .iter()
                .map(|(e, c)| (e.iter().zip(&m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect();
            ech.insert(shifted);
        }
    }
    let before = ech.rank();
    ech.insert(row_of(f, vs));
    ech.rank() == before
}

// ---------------------------------------------------------------------------
// Textbook reduction, independent of the engine

pub fn lead(f: &Polynomial, order: &MonomialOrder) -> (Monomial, Scalar) {
    f.leading_term(order).expect("nonzero")
}

/// Full reduction of `f` by `basis` using only `Polynomial` arithmetic.
pub fn naive_reduce(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let mut p = f.clone();
    let mut r = Polynomial::zero(f.varset().clone());
    while !p.is_zero() {
        let (lm, lc) = lead(&p, order);
        let hit = basis.iter().find(|g| lead(g, order).0.divides(&lm));
        match hit {
            Some(g) => {
                let (gm, gc) = lead(g, order);
                let m = gm.quotient_of(&lm).expect("divides");
                p = &p - &g.mul_term(&m, &(&lc / &gc));
            }
            None => {
                let t = Polynomial::monomial(lm, lc);
                p = &p - &t;
                r = &r + &t;
            }
        }
    }
    r
}

pub fn naive_s_poly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = lead(f, order);
    let (gm, gc) = lead(g, order);
    let l = fm.lcm(&gm);
    let a = f.mul_term(&fm.quotient_of(&l).expect("lcm"), &fc.recip());
    let b = g.mul_term(&gm.quotient_of(&l).expect("lcm"), &gc.recip());
    &a - &b
}

/// Reduced: monic, and no term of any element is divisible by another
/// element's leading monomial.
pub fn is_reduced(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        lead(g, order).1.is_one()
            && basis.iter().enumerate().all(|(j, h)| {
                i == j || g.terms().all(|(m, _)| !lead(h, order).0.divides(m))
            })
    })
}

pub fn product(fs: &[Polynomial], vs: &VarSet) -> Polynomial {
    fs.iter().fold(Polynomial::one(vs.clone()), |acc, f| &acc * f)
}

pub fn scalar_one() -> Scalar {
    Scalar::one()
}
