use thiserror::Error;

/// Errors produced by graph parsing, fan construction and verification.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph text. `line` is 1-based; `offset` is a byte offset
    /// within that line when it is known.
    #[error("format error at line {line}{}: {message}", offset.map(|o| format!(", offset {o}")).unwrap_or_default())]
    Format {
        line: usize,
        offset: Option<usize>,
        message: String,
    },

    #[error("capacity exceeded: {what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    /// An operation was called outside its precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The fan failed a structural check (nonsingularity, simplicity,
    /// completeness, flagness, or the two-cone wall geometry).
    #[error("fan integrity failure: {0}")]
    FanIntegrity(String),

    /// The fan classification and the graph classification differ.
    #[error("classification disagreement on graph {graph6}: fan says {fan}, graph says {graph}")]
    Disagreement {
        graph6: String,
        fan: String,
        graph: String,
    },

    /// A computed result failed its own post-condition check.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            offset: None,
            message: message.into(),
        }
    }
}
