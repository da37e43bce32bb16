use std::fmt;
use std::time::Duration;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which resource limit ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BudgetKind {
    /// Number of S-pair reductions.
    Steps,
    /// Wall-clock time.
    Time,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BudgetKind::Steps => f.write_str("step"),
            BudgetKind::Time => f.write_str("time"),
        }
    }
}

/// A Gröbner basis computation was stopped before completion.
///
/// No partial basis is ever returned in place of a finished one.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} budget exhausted after {steps} pair reductions ({elapsed:?})")]
pub struct BudgetExhausted {
    pub kind: BudgetKind,
    pub steps: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different rings, a map has the wrong arity, or a
    /// similar precondition of the calling contract does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
        expected: Vec<String>,
    },

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error(transparent)]
    Budget(#[from] BudgetExhausted),

    /// The center has not passed `verify_support`.
    #[error("center is not verified: {0}")]
    UnverifiedCenter(String),

    #[error("determinant is not a unit: normal form `{0}` is not a nonzero constant")]
    NonUnitDeterminant(String),

    #[error("invalid Brieskorn exponents: {0}")]
    InvalidBrieskorn(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
