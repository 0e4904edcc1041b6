use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable x{index} at byte {pos} is outside x1..x{n}")]
    VariableOutOfRange { index: usize, n: usize, pos: usize },

    #[error("the ambient ring needs at least one variable")]
    NoVariables,

    #[error("ambient variable counts differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("monomial has {got} exponents, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("the smaller ideal is not contained in the larger one")]
    NotContained,

    #[error("the quotient is zero (empty characteristic poset); its depth invariants are undefined")]
    EmptyPoset,

    #[error("generator index {index} out of range (ideal has {len} generators)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("monomial {0} is not regular on the quotient (shares a variable with a generator)")]
    NotRegular(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} is {got}, above the cap of {cap}")]
    TooLarge { what: &'static str, got: usize, cap: usize },

    #[error("a proved identity failed: {0}")]
    Contradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Parse-level errors, as opposed to domain or resource errors.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::VariableOutOfRange { .. })
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}
