use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry {value} at ({row}, {col}) is out of range for order {order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table is not square: expected {expected} entries in row {row}, found {found}")]
    BadShape { row: usize, expected: usize, found: usize },
    #[error("element {zero} is not absorbing: {left} * {right} != {zero}")]
    NotAbsorbing { zero: usize, left: usize, right: usize },
    #[error("magma has no designated zero element")]
    MissingZero,
    #[error("{what} of size {size} exceeds the budget of {limit}")]
    SizeOverflow { what: &'static str, size: u64, limit: u64 },
    #[error("bad composition for ({left}, {right}): {reason}")]
    BadComposition { left: usize, right: usize, reason: String },
    #[error("composition is not associative on ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("bad identity at object {object}: {reason}")]
    BadIdentity { object: usize, reason: String },
    #[error("object {0} carries no morphism")]
    IsolatedObject(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("functor enumeration needs identities at every object")]
    NotACategory,
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("set-level and span checks disagree on {property}: {set} vs {span}")]
    OracleMismatch {
        property: &'static str,
        set: bool,
        span: bool,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
