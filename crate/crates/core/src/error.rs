//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid variable name `{0}` (expected letters followed by optional digits)")]
    InvalidVariable(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("duplicate rule for variable `{0}`")]
    DuplicateRule(String),
    #[error("variable `{0}` is not bound to a value")]
    UnboundVariable(String),
    #[error("expected a univariate polynomial, found variables {0}")]
    NotUnivariate(String),
    #[error("the zero polynomial has no root count")]
    ZeroPolynomial,
    #[error("entry ({row},{col}) violates the lower Hessenberg zero pattern")]
    NotHessenberg { row: usize, col: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("enumeration bound exceeded: {what} = {got} is larger than {max}")]
    BoundExceeded {
        what: &'static str,
        got: usize,
        max: usize,
    },
    #[error("word is not a Stirling permutation of the given multiset")]
    InvalidWord,
    #[error("multiset is not of the restricted shape {{1,2,2,...,m,m}}")]
    NotRestrictedShape,
    #[error("statistic `{0}` is not defined for this word")]
    StatUnavailable(&'static str),
    #[error("not a signed permutation: {0}")]
    InvalidSignedPerm(String),
    #[error("invalid partition: parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("invalid standard Young tableau: {0}")]
    InvalidTableau(String),
    #[error("monomial `{0}` does not match the shape c^(n-l) * c_lambda")]
    BadExpansionShape(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
