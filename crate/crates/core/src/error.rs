use crate::exactnum::Rational;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid angle {0}: expected a rational strictly between 0 and 1/2")]
    InvalidAngle(Rational),
    #[error("{k} is not coprime to the conductor {m}")]
    NotCoprime { k: i64, m: u64 },
    #[error("element is not fixed by complex conjugation")]
    NotReal,
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate configuration: {0}")]
    DegenerateConfig(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An exact identity that must hold did not; never expected in practice.
    #[error("internal arithmetic inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code: 3 for an internal inconsistency, 2 for anything the
    /// caller can fix (bad parameters, unreadable files).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Inconsistent(_) => 3,
            _ => 2,
        }
    }
}
