use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    NoSplitting(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Core(duadic::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 0 ok, 1 usage or input errors, 2 no splitting, 3 verification failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::NoSplitting(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Usage(_) | CliError::Core(_) | CliError::Io { .. } => 1,
        }
    }
}

impl From<duadic::Error> for CliError {
    fn from(e: duadic::Error) -> Self {
        match e {
            duadic::Error::NoSplitting(msg) => CliError::NoSplitting(format!("no splitting: {msg}")),
            other => CliError::Core(other),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
