use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bracket parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("xml ingestion error: {0}")]
    Xml(String),

    #[error("input too large for oracle: {what} is {actual}, limit {limit}")]
    OracleGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid shape parameters: {0}")]
    InvalidShape(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
