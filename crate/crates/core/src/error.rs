use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph or rotation data handed to a constructor.
    #[error("invalid input: {0}")]
    Input(String),

    /// A text file that does not follow its line format.
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    /// The operation exists for this input only up to a configured size.
    #[error("{what} {requested} exceeds the supported maximum of {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The rotation budget ran out before the search completed.
    #[error("rotation budget of {budget} exhausted after {visited} rotations (best bound so far: {best:?})")]
    Budget {
        budget: u64,
        visited: u64,
        best: Option<u32>,
    },

    /// Two independent routes to the same quantity disagreed.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
