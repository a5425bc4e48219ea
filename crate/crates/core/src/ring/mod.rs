//! Exact rational scalars, variables, monomials, sparse polynomials,
//! monomial orders and univariate rational functions.

mod monomial;
mod order;
mod point;
mod poly;
mod ratfun;
mod univariate;
mod var;

pub use monomial::Monomial;
pub use order::{monomial_cmp, MonomialOrder, OrderKind};
pub use point::Point;
pub use poly::{squarefree_part, Polynomial};
pub use ratfun::RationalFunction;
pub use univariate::UniPoly;
pub use var::{is_valid_identifier, Var, VarSet};

/// Arbitrary-precision rational, always in lowest terms.
pub type Scalar = num_rational::BigRational;
