use thiserror::Error;

/// Errors raised by the algebra and locus routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable not present: {0}")]
    VariableNotPresent(String),
    #[error("degree too small: {0}")]
    DegreeTooSmall(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("not symmetric")]
    NotSymmetric,
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular curve: {0}")]
    Singular(String),
    #[error("J2 vanishes; absolute invariants i1, i2, i3 are undefined")]
    J2Vanishes,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("identity check failed: {0}")]
    Identity(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::VariableNotPresent(_) => 2,
            Error::Identity(_) => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
