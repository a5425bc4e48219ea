//! Text formats: polynomial expressions, points and JSON ideal files.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' nat)?
//! base   := int ('/' int)? | ident | '(' expr ')'
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{
    is_valid_identifier, MonomialOrder, OrderKind, Point, Polynomial, Scalar, Var,
    VarSet,
};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(Scalar),
    Variable(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn to_polynomial(&self, vars: &VarSet) -> Result<Polynomial> {
        Ok(match self {
            Expr::Number(c) => Polynomial::constant(c.clone(), vars.clone()),
            Expr::Variable(name) => {
                let v = Var::new(name);
                if !vars.contains(&v) {
                    return Err(Error::UnknownVariable(name.clone()));
                }
                Polynomial::var(&v).with_varset(vars)?
            }
            Expr::Add(a, b) => a.to_polynomial(vars)? + b.to_polynomial(vars)?,
            Expr::Sub(a, b) => a.to_polynomial(vars)? - b.to_polynomial(vars)?,
            Expr::Mul(a, b) => a.to_polynomial(vars)? * b.to_polynomial(vars)?,
            Expr::Neg(a) => -a.to_polynomial(vars)?,
            Expr::Pow(a, n) => a.to_polynomial(vars)?.pow(*n),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let n = u32::try_from(n).map_err(|_| syntax(pos, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), n))
            }
            Tok::Minus => Err(Error::NegativeExponent(pos)),
            _ => Err(syntax(pos, "expected a natural-number exponent")),
        }
    }

    fn base(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(p) => {
                if *self.peek() != Tok::Slash {
                    return Ok(Expr::Number(Scalar::from_integer(p)));
                }
                self.bump();
                let qpos = self.pos();
                match self.bump() {
                    Tok::Int(q) if q.is_zero() => Err(syntax(qpos, "zero denominator")),
                    Tok::Int(q) => Ok(Expr::Number(Scalar::new(p, q))),
                    _ => Err(syntax(qpos, "expected an integer denominator")),
                }
            }
            Tok::Ident(name) => Ok(Expr::Variable(name)),
            Tok::LParen => {
                let e = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(e),
                    _ => Err(syntax(close, "expected `)`")),
                }
            }
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            t => Err(syntax(pos, format!("unexpected token {t:?}"))),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(text)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.pos(), "trailing input"));
    }
    Ok(e)
}

/// Parses `text` as a polynomial over `vars`.
pub fn parse_poly(text: &str, vars: &VarSet) -> Result<Polynomial> {
    parse_expr(text)?.to_polynomial(vars)
}

/// Terms in strictly decreasing order under `order`, e.g. `x^2 + 1/2*y*z - 1`.
/// Variables missing from the order are appended to it.
pub fn print_poly(f: &Polynomial, order: &MonomialOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let order = order.extended(&f.support());
    let mut terms: Vec<(Vec<u32>, &Scalar)> = f
        .terms()
        .map(|(m, c)| (order.exponents(m).expect("order covers support"), c))
        .collect();
    terms.sort_by(|a, b| order.cmp_exponents(&b.0, &a.0));

    let mut out = String::new();
    for (k, (exps, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let c = c.abs();
        let mono = print_monomial(&order, exps);
        if mono.is_empty() {
            write!(out, "{c}").unwrap();
        } else if c.is_one() {
            out.push_str(&mono);
        } else {
            write!(out, "{c}*{mono}").unwrap();
        }
    }
    out
}

fn print_monomial(order: &MonomialOrder, exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (v, &e) in order.vars().iter().zip(exps) {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

/// Parses `x=1,y=-2/3`. Every named variable must belong to `vars`.
pub fn parse_point(text: &str, vars: &VarSet) -> Result<Point> {
    let mut point = Point::new();
    let text = text.trim();
    if text.is_empty() {
        return Ok(point);
    }
    let mut offset = 0;
    for part in text.split(',') {
        let Some((name, value)) = part.split_once('=') else {
            return Err(syntax(offset, "expected `name=value`"));
        };
        let name = name.trim();
        let v = Var::new(name);
        if !vars.contains(&v) {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        if point.get(&v).is_some() {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        let value = parse_poly(value, &VarSet::empty())
            .map_err(|e| shift(e, offset + name.len() + 1))?
            .constant_value()
            .expect("no variables available");
        point.insert(v, value);
        offset += part.len() + 1;
    }
    Ok(point)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + by, msg },
        Error::NegativeExponent(pos) => Error::NegativeExponent(pos + by),
        e => e,
    }
}

/// The JSON ideal file: `{"vars": [...], "gens": [...], "order": "lex"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
}

impl IdealFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::IdealFile(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// Declared variables in file order, validated.
    pub fn variables(&self) -> Result<Vec<Var>> {
        let mut out: Vec<Var> = Vec::new();
        for name in &self.vars {
            if !is_valid_identifier(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            let v = Var::new(name);
            if out.contains(&v) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
            out.push(v);
        }
        Ok(out)
    }

    pub fn order_kind(&self) -> Result<OrderKind> {
        self.order.as_deref().map_or(Ok(OrderKind::GrevLex), str::parse)
    }
}

/// Builds the ideal declared by `file`. The declared variable sequence is the
/// order's sequence (first variable largest); the order defaults to grevlex.
pub fn load_ideal(file: &IdealFile) -> Result<Ideal> {
    let order = MonomialOrder::new(file.order_kind()?, file.variables()?)?;
    let vars = order.varset();
    let gens = file
        .gens
        .iter()
        .map(|g| parse_poly(g, &vars))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(gens, order)
}
