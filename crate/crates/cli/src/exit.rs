use std::fmt;
use std::process::ExitCode;

/// Failure classes and their process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Config = 1,
    Numerical = 2,
    Verification = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub kind: Kind,
    pub error: anyhow::Error,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

impl CliError {
    pub fn code(&self) -> ExitCode {
        ExitCode::from(self.kind as u8)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn config_error(msg: impl fmt::Display) -> CliError {
    CliError { kind: Kind::Config, error: anyhow::anyhow!("config error: {msg}") }
}

pub fn numerical_error(msg: impl fmt::Display) -> CliError {
    CliError { kind: Kind::Numerical, error: anyhow::anyhow!("numerical failure: {msg}") }
}

pub fn verification_error(msg: impl fmt::Display) -> CliError {
    CliError { kind: Kind::Verification, error: anyhow::anyhow!("verification failed: {msg}") }
}

/// I/O trouble writing results counts as a numerical-stage failure.
pub fn io_error(path: &std::path::Path, e: impl fmt::Display) -> CliError {
    CliError { kind: Kind::Numerical, error: anyhow::anyhow!("cannot write {}: {e}", path.display()) }
}
