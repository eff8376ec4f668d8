use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,

    #[error("color class empty: no point has color {color}")]
    ColorClassEmpty { color: usize },

    #[error("color {color} out of range 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("instance too large for enumeration: {work} candidates exceeds cap {cap}")]
    TooLargeForEnumeration { work: u128, cap: u64 },

    #[error("DP state space too large: {states} states exceeds cap {cap}")]
    DpStateSpaceTooLarge { states: u128, cap: u64 },

    #[error("circle does not span all colors: color {color} missing")]
    CircleNotSpanning { color: usize },

    #[error("invalid tour: {0}")]
    InvalidTour(String),

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for refusals caused by a configured size cap.
    pub fn is_cap_refusal(&self) -> bool {
        matches!(
            self,
            Error::TooLargeForEnumeration { .. } | Error::DpStateSpaceTooLarge { .. }
        )
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
