//! Standard-library companion to `relform-core`: dataset parsing and
//! serialization, filters, the two experiment drivers, and CSV/SVG
//! rendering. The `relform` binary in this crate exposes all of it on the
//! command line.

pub mod csv;
pub mod experiments;
pub mod ingest;
pub mod svg;

/// Errors from file handling and dataset parsing; structural errors from
/// the core crate pass through.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] relform_core::Error),
}

pub type Result<T> = std::result::Result<T, AppError>;

impl AppError {
    /// Exit-code contract: 0 success, 1 I/O or data, 2 usage (owned by
    /// the argument parser), 3 resource caps.
    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Core(
                relform_core::Error::FaceCapExceeded { .. }
                | relform_core::Error::CliqueCapExceeded { .. }
                | relform_core::Error::DimensionCapExceeded { .. },
            ) => 3,
            _ => 1,
        }
    }
}
