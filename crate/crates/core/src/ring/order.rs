//! Monomial orders over an explicit variable sequence.
//!
//! The first variable of the sequence is the largest. Internally monomials
//! are compared as exponent vectors indexed by sequence position.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{Monomial, Var, VarSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GrLex => "grlex",
            OrderKind::GrevLex => "grevlex",
        }
    }

    fn compare(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            OrderKind::Lex => lex(a, b),
            OrderKind::GrLex => degree(a).cmp(&degree(b)).then_with(|| lex(a, b)),
            OrderKind::GrevLex => degree(a).cmp(&degree(b)).then_with(|| revlex(a, b)),
        }
    }
}

impl FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::GrLex),
            "grevlex" => Ok(OrderKind::GrevLex),
            _ => Err(Error::InvalidOrder(s.to_string())),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn degree(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

// Equal total degree assumed: the smaller exponent in the last differing
// position wins.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// A monomial order: a base kind over a variable sequence, optionally split
/// into an elimination block.
///
/// With a block of size `k`, the first `k` variables are eliminated: monomials
/// compare by total degree in the block, then by the base kind inside the
/// block, then by the base kind on the remaining variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    vars: Arc<[Var]>,
    block: Option<usize>,
}

impl MonomialOrder {
    pub fn new<I: IntoIterator<Item = Var>>(kind: OrderKind, vars: I) -> Result<Self> {
        let vars: Vec<Var> = vars.into_iter().collect();
        check_distinct(&vars)?;
        Ok(MonomialOrder { kind, vars: vars.into(), block: None })
    }

    /// The order of `kind` over `vars` in canonical sequence.
    pub fn canonical(kind: OrderKind, vars: &VarSet) -> Self {
        MonomialOrder { kind, vars: vars.as_slice().into(), block: None }
    }

    pub fn lex(vars: &VarSet) -> Self {
        Self::canonical(OrderKind::Lex, vars)
    }

    pub fn grlex(vars: &VarSet) -> Self {
        Self::canonical(OrderKind::GrLex, vars)
    }

    pub fn grevlex(vars: &VarSet) -> Self {
        Self::canonical(OrderKind::GrevLex, vars)
    }

    /// Elimination order: every monomial involving a variable of `eliminate`
    /// is larger than every monomial in `keep` alone.
    pub fn elimination(kind: OrderKind, eliminate: &[Var], keep: &[Var]) -> Result<Self> {
        let vars: Vec<Var> = eliminate.iter().chain(keep).cloned().collect();
        check_distinct(&vars)?;
        Ok(MonomialOrder { kind, vars: vars.into(), block: Some(eliminate.len()) })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Variable sequence, largest first.
    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn block_size(&self) -> Option<usize> {
        self.block
    }

    pub fn varset(&self) -> VarSet {
        VarSet::new(self.vars.iter().cloned())
    }

    pub fn position(&self, v: &Var) -> Option<usize> {
        self.vars.iter().position(|w| w == v)
    }

    /// Same sequence, different base kind, no block.
    pub fn with_kind(&self, kind: OrderKind) -> Self {
        MonomialOrder { kind, vars: self.vars.clone(), block: None }
    }

    /// Appends every variable of `extra` not already present, in canonical
    /// order, as the smallest variables.
    pub fn extended(&self, extra: &VarSet) -> Self {
        let mut vars: Vec<Var> = self.vars.to_vec();
        vars.extend(extra.iter().filter(|v| !self.vars.contains(v)).cloned());
        MonomialOrder { kind: self.kind, vars: vars.into(), block: self.block }
    }

    /// The base kind restricted to the variables of `keep`, sequence preserved.
    pub fn restricted(&self, keep: &VarSet) -> Self {
        let vars: Vec<Var> = self.vars.iter().filter(|v| keep.contains(v)).cloned().collect();
        MonomialOrder { kind: self.kind, vars: vars.into(), block: None }
    }

    /// Compares exponent vectors indexed by sequence position.
    pub fn cmp_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.block {
            None => self.kind.compare(a, b),
            Some(k) => {
                let (ae, ak) = a.split_at(k);
                let (be, bk) = b.split_at(k);
                degree(ae)
                    .cmp(&degree(be))
                    .then_with(|| self.kind.compare(ae, be))
                    .then_with(|| self.kind.compare(ak, bk))
            }
        }
    }

    pub fn exponents(&self, m: &Monomial) -> Result<Vec<u32>> {
        let mut out = vec![0; self.vars.len()];
        for (v, e) in m.iter() {
            let i = self
                .position(v)
                .ok_or_else(|| Error::VariableOutsideOrder(v.name().to_string()))?;
            out[i] = *e;
        }
        Ok(out)
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        Monomial::from_pairs(self.vars.iter().cloned().zip(exps.iter().copied()))
    }

    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        Ok(self.cmp_exponents(&self.exponents(u)?, &self.exponents(v)?))
    }
}

/// Compares two monomials under `order`.
pub fn monomial_cmp(order: &MonomialOrder, u: &Monomial, v: &Monomial) -> Result<Ordering> {
    order.compare(u, v)
}

fn check_distinct(vars: &[Var]) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(Error::DuplicateVariable(v.name().to_string()));
        }
    }
    Ok(())
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.kind, self.vars)?;
        if let Some(k) = self.block {
            write!(f, "/block{k}")?;
        }
        Ok(())
    }
}
