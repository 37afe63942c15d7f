use thiserror::Error;

/// Errors raised by evaluation, validation and parsing.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero base raised to a non-positive exponent")]
    ZeroPower,

    /// Exact arithmetic cannot represent the requested power.
    #[error("exponent {0} is not an integer; switch to float mode")]
    InexactPower(String),

    #[error("invalid q: {0}")]
    InvalidQ(String),

    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A series representation was requested outside its convergence domain.
    #[error("divergence guard: {0}")]
    Divergence(String),

    #[error("tail bound {bound:e} exceeds tolerance {tolerance:e} at {terms} terms")]
    TailBound {
        bound: f64,
        tolerance: f64,
        terms: usize,
    },

    #[error("lattice of {terms} terms exceeds the cap of {cap}")]
    TermCap { terms: u128, cap: u64 },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse {
            what,
            input: input.to_owned(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
