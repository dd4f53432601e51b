use thiserror::Error;

/// A syntax error in a graph file; `line` is 1-based, 0 for an empty input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] homtool_core::Error),
    #[error("{0}")]
    Usage(String),
}
