use std::io;
use std::path::{Path, PathBuf};

use pfp_core::harness::HarnessError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}: {message}", path.display())]
    Input { path: PathBuf, message: String },
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    // 2 matches what clap uses for its own argument errors
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Input { .. } => 3,
            CliError::Compute(_) => 4,
        }
    }

    pub fn io(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
        move |source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn harness(path: &Path) -> impl FnOnce(HarnessError) -> CliError + '_ {
        move |e| match e {
            HarnessError::Invalid(m) => CliError::Usage(m),
            HarnessError::Io(source) => CliError::Io {
                path: path.to_path_buf(),
                source,
            },
            HarnessError::Csv(e) => CliError::Io {
                path: path.to_path_buf(),
                source: e.into(),
            },
            other => CliError::Compute(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
