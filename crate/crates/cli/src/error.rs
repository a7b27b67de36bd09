use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{line}:{column}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{context}: {source}")]
    Kernel {
        context: String,
        #[source]
        source: bicoh::Error,
    },
}

impl CliError {
    /// `2` for input problems, `3` for an exhausted budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Kernel { source: bicoh::Error::BudgetExceeded { .. }, .. } => 3,
            _ => 2,
        }
    }
}

impl From<bicoh::Error> for CliError {
    fn from(source: bicoh::Error) -> Self {
        CliError::Kernel { context: "error".into(), source }
    }
}

pub trait Context<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError>;
}

impl<T> Context<T> for bicoh::Result<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T, CliError> {
        self.map_err(|source| CliError::Kernel { context: what(), source })
    }
}
