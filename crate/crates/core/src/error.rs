use serde::Serialize;
use thiserror::Error;

/// Statistics captured when a Gröbner computation hits its resource budget.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BudgetStats {
    pub pairs_processed: usize,
    pub pairs_pending: usize,
    pub basis_size: usize,
    pub max_coeff_bits: u64,
    pub elapsed_ms: u128,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("too many variables: {0} (at most {max} supported)", max = crate::algebra::MAX_VARS)]
    TooManyVariables(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("input is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("singular linear change of variables")]
    SingularChange,

    #[error("budget exhausted ({reason}): {stats:?}")]
    BudgetExhausted { reason: String, stats: BudgetStats },

    #[error("insufficient genericity: {0}; retry with another seed or a larger coefficient pool")]
    Genericity(String),

    #[error("route mismatch for AV_{{X,{j}}}({m}): direct = {direct}, gin colon = {gin_colon}")]
    RouteMismatch {
        j: usize,
        m: usize,
        direct: i64,
        gin_colon: i64,
    },

    #[error("degree cap {cap} too small, need at least {needed}")]
    CapTooSmall { cap: usize, needed: usize },

    #[error("Hilbert function did not stabilize up to degree {0}")]
    NotStabilized(usize),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// Errors caused by resource limits or randomness rather than by bad input.
    pub fn is_budget_or_genericity(&self) -> bool {
        matches!(
            self,
            Error::BudgetExhausted { .. } | Error::Genericity(_) | Error::NotStabilized(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
