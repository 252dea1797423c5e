use thiserror::Error;

/// Error type shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An index or table lookup outside the constructed range.
    #[error("out of range: {0}")]
    Range(String),

    /// Arguments outside the mathematical domain of an operation
    /// (empty support, missing parameter, value outside support).
    #[error("domain error: {0}")]
    Domain(String),

    /// A guard tripped: support too large, rejection retry cap exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Numerical failure (step underflow, non-finite intermediate).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Two routes that must agree exactly disagreed.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// Invalid experiment configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI: 2 for config errors, 3 for
    /// resource/numeric failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Resource(_) | Error::Numeric(_) => 3,
            _ => 1,
        }
    }
}
