//! Exact Gröbner-basis toolkit for deciding Nullstellensatz statements over
//! the rationals: radical membership, solvability, point recovery from
//! maximal ideals, elimination, and checkable identities for ideal
//! extensions.

pub mod cli;
pub mod error;
pub mod extension;
pub mod groebner;
pub mod nullstellensatz;
pub mod parser;
pub mod ring;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use ring::{Monomial, MonomialOrder, OrderKind, Point, Polynomial, Scalar, Var, VarSet};
