//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Why `strong_nss_check` could not decide an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotCheckableReason {
    NonRational,
    NotZeroDimensional,
    /// The variety came back empty although the ideal is proper.
    EmptyVarietyProperIdeal,
}

impl std::fmt::Display for NotCheckableReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NotCheckableReason::NonRational => "non-rational",
            NotCheckableReason::NotZeroDimensional => "not-zero-dimensional",
            NotCheckableReason::EmptyVarietyProperIdeal => "empty-variety-proper-ideal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("variable `{0}` is not covered by the monomial order")]
    VariableOutsideOrder(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("unknown monomial order `{0}`")]
    InvalidOrder(String),
    #[error("variable sets do not match")]
    VarSetMismatch,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent at position {0}")]
    NegativeExponent(usize),
    #[error("malformed ideal file: {0}")]
    IdealFile(String),

    #[error("point does not assign variable `{0}`")]
    PartialPoint(String),
    #[error("empty point set")]
    EmptyPointSet,
    #[error("the unit ideal has no point")]
    UnitIdeal,
    #[error("contraction to `{0}` is not of the form <t - x> with rational x")]
    NotUnitContraction(String),
    #[error("ideal is not maximal: it differs from the point ideal of its recovered point")]
    NotMaximal,
    #[error("strong Nullstellensatz check not applicable: {0}")]
    NotCheckable(NotCheckableReason),

    #[error("target variable set is not a superset of the ideal's variables")]
    NotASuperset,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("rational function does not split into linear factors over Q")]
    NonSplit,
    #[error("no variable assigned to denominator root {0}")]
    MissingRootVariable(String),
}

impl Error {
    /// Short machine-readable tag, used by the command line as `error:<kind>:`.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "zero-polynomial",
            Error::DivisionByZero => "division-by-zero",
            Error::NotUnivariate => "not-univariate",
            Error::VariableOutsideOrder(_) => "variable-outside-order",
            Error::DuplicateVariable(_) => "duplicate-variable",
            Error::InvalidVariableName(_) => "invalid-variable-name",
            Error::InvalidOrder(_) => "invalid-order",
            Error::VarSetMismatch => "varset-mismatch",
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable(_) => "unknown-variable",
            Error::NegativeExponent(_) => "negative-exponent",
            Error::IdealFile(_) => "ideal-file",
            Error::PartialPoint(_) => "partial-point",
            Error::EmptyPointSet => "empty-point-set",
            Error::UnitIdeal => "unit-ideal",
            Error::NotUnitContraction(_) => "not-unit-contraction",
            Error::NotMaximal => "not-maximal",
            Error::NotCheckable(_) => "not-checkable",
            Error::NotASuperset => "not-a-superset",
            Error::InvalidCertificate(_) => "invalid-certificate",
            Error::NonSplit => "non-split",
            Error::MissingRootVariable(_) => "missing-root-variable",
        }
    }

    /// Errors caused by malformed input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable(_)
                | Error::NegativeExponent(_)
                | Error::IdealFile(_)
                | Error::DuplicateVariable(_)
                | Error::InvalidVariableName(_)
                | Error::InvalidOrder(_)
                | Error::VariableOutsideOrder(_)
                | Error::VarSetMismatch
                | Error::NotASuperset
                | Error::PartialPoint(_)
                | Error::EmptyPointSet
        )
    }
}
