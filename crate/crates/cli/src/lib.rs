//! Command implementations and verification suites behind the `kgroth`
//! binary.

pub mod commands;
pub mod expr;
pub mod json;
pub mod suites;

/// Errors surfaced by the command line; verification failures are reported
/// through suite results instead.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] kgroth::Error),
}

impl CliError {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
