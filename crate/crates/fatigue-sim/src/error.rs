//! Crate-wide error type. Display output is a single line so the CLI can
//! forward it verbatim.

use thiserror::Error;

use crate::experiment::Channel;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A motion spec or run config failed validation.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A measurement file could not be parsed. `line` is 1-based and counts
    /// the header.
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    /// The requested channel accumulated no momentum, so no rate can be
    /// estimated from it.
    #[error("{channel} channel non-estimable: {reason}")]
    NonEstimable { channel: Channel, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }
}
