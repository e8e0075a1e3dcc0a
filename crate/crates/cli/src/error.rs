use std::path::PathBuf;

use ofn_core::OfnError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("invalid document: {0}")]
    Document(String),
    #[error("unknown base tag {0:?}")]
    UnknownBase(String),
    #[error(transparent)]
    Core(#[from] OfnError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0} demo row(s) failed")]
    DemoFailed(usize),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 parse, 3 type, 4 math, 5 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Document(_) => 2,
            CliError::UnknownBase(_) => 3,
            CliError::Core(e) => match e {
                OfnError::MixedType { .. } | OfnError::InvalidBase { .. } | OfnError::FamilyMismatch(..) => 3,
                OfnError::NodeOutOfRange { .. } | OfnError::InvalidNumber(_) | OfnError::InvalidPiecewise(_) => 2,
                _ => 4,
            },
            CliError::Io { .. } => 5,
            CliError::DemoFailed(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
