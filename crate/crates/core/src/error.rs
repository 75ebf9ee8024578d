use thiserror::Error;

/// Errors raised by the numerical routines and the verification layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A series or closed form diverges for the requested arguments.
    #[error("divergence: {0}")]
    Divergence(String),
    /// An iterative method did not reach its tolerance.
    #[error("no convergence: {0}")]
    Convergence(String),
    /// A theorem bound was requested for parameters outside its hypotheses.
    #[error("inadmissible parameters (p = {p}, q = {q}): the bounds are unproven here")]
    Inadmissible { p: f64, q: f64 },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
