use thiserror::Error;

/// Errors produced while building or querying finite structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input that does not describe a valid structure. `line` is 1-based when
    /// the input came from a text file.
    #[error("{}{message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Malformed { line: Option<usize>, message: String },

    /// An operation was called on an argument outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A size cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A computed result failed a postcondition that must hold for every
    /// finite structure.
    #[error("assertion failed: {0}")]
    Assertion(String),
}

impl Error {
    pub fn malformed(message: impl Into<String>) -> Self {
        Error::Malformed {
            line: None,
            message: message.into(),
        }
    }

    pub fn malformed_at(line: usize, message: impl Into<String>) -> Self {
        Error::Malformed {
            line: Some(line),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
