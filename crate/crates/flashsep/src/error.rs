use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped so callers (notably the CLI) can distinguish
/// input-validation failures from runtime failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid image: {0}")]
    InvalidImage(String),

    #[error("invalid raw frame: {0}")]
    InvalidRaw(String),

    /// Two frames that must agree (dimensions, CFA, levels) do not.
    #[error("frame mismatch: {0}")]
    Mismatch(String),

    #[error("invalid scene: {0}")]
    InvalidScene(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("dataset split cannot honor proportions: {0}")]
    Split(String),

    #[error("manifest: {0}")]
    Manifest(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    /// Malformed file content (FRAW/PFM/PPM/config parsing).
    #[error("format error in {path}: {message}")]
    Format { path: String, message: String },

    #[error("empty input: {0}")]
    Empty(String),

    #[error("non-finite loss at epoch {epoch}, step {step} (value {value}); aborting")]
    NonFiniteLoss {
        epoch: usize,
        step: usize,
        value: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by bad inputs rather than runtime failures.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::NonFiniteLoss { .. })
    }

    pub(crate) fn format(path: impl AsRef<std::path::Path>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.as_ref().display().to_string(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
