use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        #[source]
        source: rted_core::Error,
    },
    #[error(transparent)]
    Core(#[from] rted_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 for usage, input and I/O problems, 3 when an
    /// oracle refuses an input that is too large, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Input { source, .. } | CliError::Core(source) => Some(source),
            _ => None,
        };
        match (self, core) {
            (_, Some(rted_core::Error::OracleGuard { .. })) => 3,
            (CliError::Usage(_) | CliError::Io { .. } | CliError::Input { .. }, _) => 2,
            (_, Some(_)) => 2,
            _ => 1,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io {
            path: PathBuf::from("<stdout>"),
            source: e,
        }
    }
}
