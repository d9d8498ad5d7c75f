use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid rational {0:?}: expected `n` or `p/q`")]
    Rational(String),
    #[error("invalid polynomial {0:?}: {1}")]
    Polynomial(String, String),
    #[error("unknown object label {0:?}")]
    Label(String),
    #[error("invalid region {0:?}: expected `blo:bhi,alo:ahi`")]
    Region(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: malformed JSON: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("derivation graph does not cover {0}")]
    Uncovered(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
