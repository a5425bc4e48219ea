//! Command-line front end.
//!
//! Exit codes: 0 on success or a "yes" verdict, 1 on a "no" verdict or a
//! mathematical error (for example a non-maximal ideal), 2 on usage, parse
//! and I/O errors. Errors are written to stderr as `error:<kind>: message`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::extension::{
    claim3_factor, claim3_preimage, claim5_construct, corollary_check, cylinder_membership,
    principal_extension_check, Claim5Certificate, Claim5Entry,
};
use crate::groebner::{eliminate, intersect, GroebnerBasis, Ideal};
use crate::nullstellensatz::{
    check_statement_f, least_power, maximal_point, point_ideal, radical_member, solvable,
    strong_nss_check, vanishing_ideal, variety_points, VarietyResult, DEFAULT_POWER_BOUND,
};
use crate::parser::{load_ideal, parse_point, parse_poly, print_poly, IdealFile};
use crate::ring::{
    is_valid_identifier, MonomialOrder, OrderKind, Point, Polynomial, RationalFunction, Scalar,
    Var, VarSet,
};

#[derive(Parser, Debug)]
#[command(name = "nss", about = "Exact Groebner bases and Nullstellensatz checks over Q")]
struct Cli {
    /// Monomial order, overriding the one in the ideal file.
    #[arg(long, global = true, value_parser = parse_order)]
    order: Option<OrderKind>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the reduced Groebner basis, one element per line.
    Gb { ideal: PathBuf },
    /// Ideal membership of --f. Exit 0 if member.
    Member {
        #[arg(long = "f")]
        f: String,
        ideal: PathBuf,
    },
    /// Basis of the contraction to the --keep variables.
    Eliminate {
        #[arg(long, value_delimiter = ',')]
        keep: Vec<String>,
        ideal: PathBuf,
    },
    /// Basis of the intersection of two ideals over the same variables.
    Intersect { first: PathBuf, second: PathBuf },
    /// Whether the ideal is proper. Exit 0 if solvable.
    Solvable { ideal: PathBuf },
    /// Radical membership of --f with the least power found up to --bound.
    Radmember {
        #[arg(long = "f")]
        f: String,
        #[arg(long, default_value_t = DEFAULT_POWER_BOUND)]
        bound: u32,
        ideal: PathBuf,
    },
    /// Rational points of a zero-dimensional ideal.
    Variety { ideal: PathBuf },
    /// Basis of the vanishing ideal of the given points.
    Vanish {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(required = true)]
        points: Vec<String>,
    },
    /// Basis of the ideal of one point.
    PointIdeal {
        #[command(flatten)]
        vars: VarsArg,
        point: String,
    },
    /// The point of a maximal ideal of the form <t - x>.
    MaximalPoint { ideal: PathBuf },
    /// Whether the contraction to --subvars is a point ideal. Exit 0 if so.
    StatementF {
        /// May be empty (`--subvars ""`).
        #[arg(long, value_delimiter = ',')]
        subvars: Vec<String>,
        ideal: PathBuf,
    },
    /// Certifies I(V(a)) = rad(a) for a zero-dimensional ideal. Exit 0 if it holds.
    StrongNss { ideal: PathBuf },
    /// Checks the extension of the ideal to --vars against probe polynomials.
    ExtendCheck {
        #[command(flatten)]
        vars: VarsArg,
        /// File with one probe polynomial per line.
        #[arg(long)]
        probes: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_POWER_BOUND)]
        bound: u32,
        ideal: PathBuf,
    },
    /// Whether --f vanishes on the cylinder over the points. Exit 0 if so.
    Cylinder {
        #[command(flatten)]
        vars: VarsArg,
        #[arg(long = "f")]
        f: String,
        #[arg(required = true)]
        points: Vec<String>,
    },
    /// Validates an interpolation certificate and prints the combined polynomial.
    Claim5 { certificate: PathBuf },
    /// Linear factorization of --num/--den and its polynomial preimage.
    Claim3 {
        #[arg(long, default_value = "s")]
        var: String,
        #[arg(long)]
        num: String,
        #[arg(long, default_value = "1")]
        den: String,
        /// Variable mapped to the rational function's variable.
        #[arg(long, default_value = "t")]
        t: String,
    },
}

#[derive(Args, Debug)]
struct VarsArg {
    /// Comma-separated ring variables.
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
}

fn parse_order(s: &str) -> std::result::Result<OrderKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `argv` (including the program name) and captures
/// its output.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let text = text.strip_prefix("error: ").unwrap_or(&text);
                Outcome { code: 2, stdout: String::new(), stderr: format!("error:usage: {text}") }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut out = String::new();
    match execute(&cli, &mut out) {
        Ok(yes) => Outcome { code: if yes { 0 } else { 1 }, stdout: out, stderr: String::new() },
        Err(e) => Outcome {
            code: if e.is_usage() { 2 } else { 1 },
            stdout: out,
            stderr: format!("error:{}: {}\n", e.kind(), e.message()),
        },
    }
}

/// An error from the library or from reading input files.
#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Lib(e) => e.kind(),
            CliError::Io(_) => "io",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Io(m) => m.clone(),
        }
    }

    fn is_usage(&self) -> bool {
        match self {
            CliError::Lib(e) => e.is_usage(),
            CliError::Io(_) => true,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn read(path: &Path) -> std::result::Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn ideal_from(path: &Path, order: Option<OrderKind>) -> std::result::Result<Ideal, CliError> {
    let file = IdealFile::from_json(&read(path)?)?;
    let a = load_ideal(&file)?;
    Ok(match order {
        Some(kind) => a.with_order(a.order().with_kind(kind))?,
        None => a,
    })
}

fn varset(names: &[String]) -> Result<VarSet> {
    let mut vars = Vec::new();
    for n in names {
        if !is_valid_identifier(n) {
            return Err(Error::InvalidVariableName(n.clone()));
        }
        let v = Var::new(n);
        if vars.contains(&v) {
            return Err(Error::DuplicateVariable(n.clone()));
        }
        vars.push(v);
    }
    Ok(VarSet::new(vars))
}

fn ordered(names: &[String], kind: Option<OrderKind>) -> Result<MonomialOrder> {
    varset(names)?;
    MonomialOrder::new(kind.unwrap_or(OrderKind::GrevLex), names.iter().map(|n| Var::new(n)))
}

fn write_basis(out: &mut String, gb: &GroebnerBasis) {
    for g in gb.elements() {
        writeln!(out, "{}", print_poly(g, gb.order())).expect("string write");
    }
}

fn verdict(out: &mut String, yes: bool, pos: &str, neg: &str) -> bool {
    writeln!(out, "{}", if yes { pos } else { neg }).expect("string write");
    yes
}

fn execute(cli: &Cli, out: &mut String) -> std::result::Result<bool, CliError> {
    let order = cli.order;
    match &cli.command {
        Command::Gb { ideal } => {
            write_basis(out, ideal_from(ideal, order)?.groebner_basis());
            Ok(true)
        }
        Command::Member { f, ideal } => {
            let a = ideal_from(ideal, order)?;
            let f = parse_poly(f, a.varset())?;
            Ok(verdict(out, a.contains(&f)?, "MEMBER", "NONMEMBER"))
        }
        Command::Eliminate { keep, ideal } => {
            let a = ideal_from(ideal, order)?;
            let keep = varset(keep)?;
            if !keep.is_subset(a.varset()) {
                return Err(Error::NotASuperset.into());
            }
            write_basis(out, eliminate(&a, &keep)?.groebner_basis());
            Ok(true)
        }
        Command::Intersect { first, second } => {
            let a = ideal_from(first, order)?;
            let b = ideal_from(second, order)?;
            write_basis(out, intersect(&a, &b)?.groebner_basis());
            Ok(true)
        }
        Command::Solvable { ideal } => {
            let a = ideal_from(ideal, order)?;
            Ok(verdict(out, solvable(&a), "SOLVABLE", "UNSOLVABLE"))
        }
        Command::Radmember { f, bound, ideal } => {
            let a = ideal_from(ideal, order)?;
            let f = parse_poly(f, a.varset())?;
            if !radical_member(&f, &a)? {
                return Ok(verdict(out, false, "", "NONMEMBER"));
            }
            match least_power(&f, &a, *bound)? {
                Some(n) => writeln!(out, "MEMBER exponent={n}"),
                None => writeln!(out, "MEMBER exponent>{bound}"),
            }
            .expect("string write");
            Ok(true)
        }
        Command::Variety { ideal } => {
            let a = ideal_from(ideal, order)?;
            match variety_points(&a) {
                VarietyResult::Empty => writeln!(out, "EMPTY"),
                VarietyResult::Points(ps) => {
                    ps.iter().try_for_each(|p| writeln!(out, "{}", point_text(p, a.order())))
                }
                VarietyResult::NonRational(w) => {
                    writeln!(out, "NONRATIONAL {}", print_poly(&w, &a.order().restricted(w.varset())))
                }
                VarietyResult::NotZeroDimensional => writeln!(out, "NOT-ZERO-DIMENSIONAL"),
            }
            .expect("string write");
            Ok(true)
        }
        Command::Vanish { vars, points } => {
            let order = ordered(&vars.vars, order)?;
            let vs = order.varset();
            let pts = points.iter().map(|p| parse_point(p, &vs)).collect::<Result<Vec<_>>>()?;
            let a = vanishing_ideal(&pts, &vs, false)?.with_order(order)?;
            write_basis(out, a.groebner_basis());
            Ok(true)
        }
        Command::PointIdeal { vars, point } => {
            let order = ordered(&vars.vars, order)?;
            let vs = order.varset();
            let a = point_ideal(&parse_point(point, &vs)?, &vs)?.with_order(order)?;
            write_basis(out, a.groebner_basis());
            Ok(true)
        }
        Command::MaximalPoint { ideal } => {
            let a = ideal_from(ideal, order)?;
            let x = maximal_point(&a)?;
            writeln!(out, "{}", point_text(&x, a.order())).expect("string write");
            Ok(true)
        }
        Command::StatementF { subvars, ideal } => {
            let a = ideal_from(ideal, order)?;
            let names: Vec<String> = subvars.iter().filter(|n| !n.is_empty()).cloned().collect();
            let sub = varset(&names)?;
            if !sub.is_subset(a.varset()) {
                return Err(Error::NotASuperset.into());
            }
            let (ok, x) = check_statement_f(&a, &sub)?;
            match x {
                Some(x) if ok => {
                    let text = point_text(&x, &a.order().restricted(&sub));
                    let line = if text.is_empty() { "TRUE".to_string() } else { format!("TRUE {text}") };
                    writeln!(out, "{line}").expect("string write");
                    Ok(true)
                }
                _ => Ok(verdict(out, false, "", "FALSE")),
            }
        }
        Command::StrongNss { ideal } => {
            let a = ideal_from(ideal, order)?;
            Ok(verdict(out, strong_nss_check(&a)?, "HOLDS", "FAILS"))
        }
        Command::ExtendCheck { vars, probes, bound, ideal } => {
            let a = ideal_from(ideal, order)?;
            let j = varset(&vars.vars)?;
            let probes = match probes {
                Some(path) => read(path)?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(|l| parse_poly(l, &j))
                    .collect::<Result<Vec<_>>>()?,
                None => Vec::new(),
            };
            let mut ok = corollary_check(&a, &j, &probes, *bound)?;
            writeln!(out, "PROBES {} {}", probes.len(), if ok { "OK" } else { "FAIL" }).expect("string write");
            if let [h] = a.generators() {
                let p = principal_extension_check(h, &j)?;
                writeln!(out, "PRINCIPAL {}", if p { "OK" } else { "FAIL" }).expect("string write");
                ok &= p;
            }
            Ok(verdict(out, ok, "HOLDS", "FAILS"))
        }
        Command::Cylinder { vars, f, points } => {
            let j = varset(&vars.vars)?;
            let f = parse_poly(f, &j)?;
            let pts = points
                .iter()
                .map(|p| point_over_own_vars(p, &j))
                .collect::<Result<Vec<_>>>()?;
            Ok(verdict(out, cylinder_membership(&f, &pts, &j)?, "MEMBER", "NONMEMBER"))
        }
        Command::Claim5 { certificate } => {
            let cert = certificate_from(&read(certificate)?)?;
            let g = claim5_construct(&cert)?;
            let vs = VarSet::new([cert.var.clone()]);
            let order = MonomialOrder::grevlex(&vs);
            let z1 = &cert.entries[0].z;
            let value = g.eval(&Point::from_pairs([(cert.var.clone(), z1.clone())]))?;
            writeln!(out, "g = {}", print_poly(&g, &order)).expect("string write");
            writeln!(out, "g({z1}) = {value}").expect("string write");
            writeln!(out, "IDENTITY OK").expect("string write");
            Ok(true)
        }
        Command::Claim3 { var, num, den, t } => {
            let s = single_var(var)?;
            let t = single_var(t)?;
            if s == t {
                return Err(Error::DuplicateVariable(t.name().to_string()).into());
            }
            let svs = VarSet::new([s.clone()]);
            let r = RationalFunction::from_polynomials(&s, &parse_poly(num, &svs)?, &parse_poly(den, &svs)?)?;
            let fac = claim3_factor(&r)?;
            writeln!(out, "SCALE {}", fac.scale).expect("string write");
            for (a, k) in &fac.factors {
                writeln!(out, "ROOT {a} EXP {k}").expect("string write");
            }
            let mut roots: BTreeMap<Scalar, Var> = BTreeMap::new();
            for (a, _) in fac.factors.iter().filter(|(_, k)| **k < 0) {
                let u = Var::new(&format!("u{}", roots.len()));
                writeln!(out, "VAR {} = 1/({})", u, print_poly(&linear_in(&s, a), &MonomialOrder::grevlex(&svs)))
                    .expect("string write");
                roots.insert(a.clone(), u);
            }
            if roots.values().any(|u| *u == t) {
                return Err(Error::DuplicateVariable(t.name().to_string()).into());
            }
            let (f, g) = claim3_preimage(&fac, &t, &roots)?;
            writeln!(out, "F {}", print_poly(&f, &MonomialOrder::grevlex(f.varset()))).expect("string write");
            writeln!(out, "G {}", print_poly(&g, &MonomialOrder::grevlex(g.varset()))).expect("string write");
            writeln!(out, "CHECK OK").expect("string write");
            Ok(true)
        }
    }
}

fn single_var(name: &str) -> Result<Var> {
    if !is_valid_identifier(name) {
        return Err(Error::InvalidVariableName(name.to_string()));
    }
    Ok(Var::new(name))
}

fn linear_in(s: &Var, a: &Scalar) -> Polynomial {
    let vs = VarSet::new([s.clone()]);
    &Polynomial::var(s) - &Polynomial::constant(a.clone(), vs)
}

/// Coordinates in the order's variable sequence.
fn point_text(x: &Point, order: &MonomialOrder) -> String {
    order
        .vars()
        .iter()
        .filter_map(|v| x.get(v).map(|c| format!("{v}={c}")))
        .collect::<Vec<_>>()
        .join(",")
}

/// A point whose variables are whatever it assigns, all inside `ring`.
fn point_over_own_vars(text: &str, ring: &VarSet) -> Result<Point> {
    let names: Vec<&str> = text.split(',').filter_map(|kv| kv.split_once('=')).map(|(k, _)| k.trim()).collect();
    let own: VarSet = names.iter().map(|n| Var::new(n)).filter(|v| ring.contains(v)).collect();
    parse_point(text, &own)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    var: String,
    #[serde(default)]
    vars: Vec<String>,
    entries: Vec<CertificateEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateEntry {
    z: String,
    lambda: String,
    m: String,
    g: String,
}

/// Certificate JSON: `{"var": "t", "vars": [...], "entries": [{"z", "lambda", "m", "g"}]}`.
/// `vars` lists extra variables that may occur in `m` and `g`.
fn certificate_from(text: &str) -> Result<Claim5Certificate> {
    let file: CertificateFile = serde_json::from_str(text).map_err(|e| Error::IdealFile(e.to_string()))?;
    let t = single_var(&file.var)?;
    let vars = varset(&file.vars)?.with(t.clone());
    let scalar = |s: &str| -> Result<Scalar> {
        Ok(parse_poly(s, &VarSet::empty())?.constant_value().unwrap_or_default())
    };
    let entries = file
        .entries
        .iter()
        .map(|e| {
            Ok(Claim5Entry {
                z: scalar(&e.z)?,
                lambda: scalar(&e.lambda)?,
                m: parse_poly(&e.m, &vars)?,
                g: parse_poly(&e.g, &vars)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Claim5Certificate { var: t, entries })
}
