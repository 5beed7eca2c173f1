use thiserror::Error;

/// Errors raised while validating knot data or evaluating invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameters must be positive, got ({0}, {1})")]
    NonPositive(i64, i64),

    #[error("gcd({0}, {1}) = {2}, expected coprime parameters")]
    NotCoprime(i64, i64, i64),

    #[error("generators {0:?} have gcd {1}, expected 1")]
    GeneratorsNotCoprime(Vec<i64>, i64),

    #[error("cable ({a}, {b}) of a genus {genus} knot is not an L-space knot: need {b} >= {a}*(2*{genus}-1)")]
    CablingCondition { a: i64, b: i64, genus: i64 },

    #[error("{0} is not a member of the semigroup")]
    NotMember(i64),

    #[error("set is not closed under addition: {0} + {1} is missing")]
    NotClosed(i64, i64),

    #[error("semigroup is not symmetric, so it has no staircase (first mismatch at {0})")]
    NotSymmetric(i64),

    #[error("invalid staircase {0:?}: {1}")]
    InvalidStaircase(Vec<i64>, &'static str),

    #[error("t = {0} is outside the open interval (0, 2)")]
    OutOfDomain(String),

    #[error("piecewise linear data: {0}")]
    InvalidPl(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("family member {index}: {reason}")]
    FamilyParam { index: usize, reason: String },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("in atom `{atom}`: {source}")]
    Atom { atom: String, source: Box<Error> },

    #[error("split rule inapplicable: interior entry {entry} exceeds {bound}")]
    SplitInapplicable { entry: i64, bound: i64 },

    #[error("certificate: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
