//! Error type shared by all modules.

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iteration failed to reach the requested tolerance; carries the
    /// best estimate obtained so far.
    #[error("accuracy error: {msg} (best estimate {best:e})")]
    Accuracy { msg: String, best: f64 },

    /// Invalid geometric data (irregular parametrization, self-intersection,
    /// overlapping components, pole irregularity, ...).
    #[error("geometry error: {0}")]
    Geometry(String),

    /// A body or curve required to be convex is not.
    #[error("convexity error: {0}")]
    Convexity(String),

    /// An operation was called in a state where it is undefined
    /// (e.g. eigenfunction of a non-discrete spectrum point).
    #[error("state error: {0}")]
    State(String),

    /// An asserted inequality was violated beyond tolerance.
    #[error("validation failure: {0}")]
    Validation(String),

    /// A geometry or config file failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Bad command-line or configuration input.
    #[error("usage error: {0}")]
    Usage(String),

    /// A condition the solver guarantees internally was violated.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code associated with the error: 2 for validation
    /// failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
