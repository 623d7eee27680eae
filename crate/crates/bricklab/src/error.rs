use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERDICT_FAIL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAPACITY: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CensusError {
    #[error(transparent)]
    Core(#[from] bricklab_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CensusError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> CensusError {
        CensusError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CensusError::Core(bricklab_core::Error::Capacity(_)) => exit::CAPACITY,
            _ => exit::USAGE,
        }
    }
}

pub type Result<T, E = CensusError> = std::result::Result<T, E>;
