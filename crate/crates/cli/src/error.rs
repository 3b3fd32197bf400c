use std::fmt;

/// CLI failure, split by exit code: parse errors exit 2, domain errors exit 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    pub fn domain(err: horospinor::Error) -> Self {
        CliError::Domain(format!("{err:?}: {err}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "ParseError: {msg}"),
            CliError::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<horospinor::Error> for CliError {
    fn from(err: horospinor::Error) -> Self {
        CliError::domain(err)
    }
}
