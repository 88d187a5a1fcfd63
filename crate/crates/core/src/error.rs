use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `location` names the offending token or line.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// Input is well formed but outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("vertex or side out of bounds: {0}")]
    OutOfBounds(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A search or enumeration hit its configured limit before finishing.
    /// Never to be read as an absence certificate.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("time budget exhausted after {0} ms")]
    Budget(u64),

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("random generation failed: {0}")]
    Generation(String),

    /// An outcome that would contradict a proven theorem; always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
