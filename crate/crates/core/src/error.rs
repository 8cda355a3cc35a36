use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("cannot retruncate a series of order {have} to larger order {want}")]
    RetruncateUp { have: usize, want: usize },

    #[error("constant term is not a unit of the coefficient ring")]
    NonUnitConstant,

    #[error("{op} requires constant term {expected}")]
    ConstantTerm { op: &'static str, expected: &'static str },

    #[error("{what} = {value} exceeds the guard bound {bound}")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },

    #[error("window too short: need exponents {need_lo}..={need_hi}, have {have_lo}..={have_hi}")]
    WindowTooShort { need_lo: i64, need_hi: i64, have_lo: i64, have_hi: i64 },

    #[error("criterion hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OrderMismatch { .. } => "order_mismatch",
            Error::RetruncateUp { .. } => "retruncate_up",
            Error::NonUnitConstant => "non_unit_constant",
            Error::ConstantTerm { .. } => "constant_term",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::WindowTooShort { .. } => "window_too_short",
            Error::Hypothesis(_) => "hypothesis_violated",
            Error::Invalid(_) => "invalid_input",
            Error::Parse(_) => "parse_error",
        }
    }
}
