use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ellrot::Error),

    #[error("cannot parse `{0}` as a number or comma-separated list of numbers")]
    BadNumber(String),

    #[error("{0}")]
    InvalidArguments(String),

    #[error("trace needs at least 2 steps, got {0}")]
    TooFewSteps(usize),

    #[error("malformed matrix document: {0}")]
    BadDocument(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.name(),
            CliError::BadNumber(_) => "BadNumber",
            CliError::InvalidArguments(_) => "InvalidArguments",
            CliError::TooFewSteps(_) => "TooFewSteps",
            CliError::BadDocument(_) => "BadDocument",
            CliError::Io { .. } => "Io",
        }
    }

    /// 3 for residuals above tolerance, 2 for everything the user can fix.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_numerical() => 3,
            _ => 2,
        }
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> CliError {
    CliError::InvalidArguments(msg.into())
}
