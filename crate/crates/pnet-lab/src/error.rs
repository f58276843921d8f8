use std::fmt;
use std::io;

/// Crate-wide error type.
#[derive(Debug)]
pub enum Error {
    /// Tensor or layer shapes do not line up.
    Shape(String),
    /// An argument violates a documented precondition.
    Param(String),
    /// A binary or text artifact is malformed; `offset` is the byte position
    /// at which decoding failed.
    Format { offset: u64, msg: String },
    /// Training diverged (non-finite loss) at the given epoch.
    Diverged { epoch: usize },
    /// A dataset could not be read or is inconsistent.
    Data(String),
    /// A config file is missing keys or has invalid values.
    Config(String),
    Io(io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(msg) => write!(f, "shape error: {msg}"),
            Error::Param(msg) => write!(f, "parameter error: {msg}"),
            Error::Format { offset, msg } => {
                write!(f, "format error at byte {offset}: {msg}")
            }
            Error::Diverged { epoch } => {
                write!(f, "training diverged (non-finite loss) at epoch {epoch}")
            }
            Error::Data(msg) => write!(f, "data error: {msg}"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(e: io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
