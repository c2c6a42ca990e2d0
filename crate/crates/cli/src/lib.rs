//! Command implementations behind the `chebkit` binary.
//!
//! Every command renders into a `String` so output can be compared byte for
//! byte; `main` only decides where it goes.

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

use thiserror::Error;

pub use commands::run;
pub use config::{Command, Method, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] chebkit_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for usage and parse errors, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

/// Rendered command output plus whether it counts as success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome {
            text,
            success: true,
        }
    }

    /// 0 on success, 1 on a failed verification.
    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}
