use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("index error: {0}")]
    Index(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("label error: {0}")]
    Label(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("arity error: {0}")]
    Arity(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("duplicate output: {0}")]
    Duplicate(String),
}

impl Error {
    /// True for errors that indicate a bug or an oracle disagreement
    /// rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Inconsistency(_) | Error::Invariant(_) | Error::Duplicate(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
