//! Errors that end a run with exit code 2.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("section `{section}`: {message}")]
    Section { section: String, message: String },

    #[error("unknown fixture `{0}` (known: {known})", known = crate::catalog::NAMES.join(", "))]
    UnknownFixture(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] rota_core::Error),
}
