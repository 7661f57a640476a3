use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the watermarking library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: expected {expected_cols}x{expected_rows}, found {found_cols}x{found_rows}")]
    DimensionMismatch {
        what: &'static str,
        expected_cols: usize,
        expected_rows: usize,
        found_cols: usize,
        found_rows: usize,
    },
    #[error("{what} must be square, found {cols}x{rows}")]
    NotSquare {
        what: &'static str,
        cols: usize,
        rows: usize,
    },
    #[error("dimensions must be non-zero, found {cols}x{rows}")]
    EmptyDimensions { cols: usize, rows: usize },
    #[error("buffer length {found} does not match {expected} samples")]
    BufferLength { expected: usize, found: usize },
    #[error("bit matrix cell must be 0 or 1, found {0}")]
    InvalidBit(u8),
    #[error("malformed key file: {0}")]
    MalformedKeyFile(String),
    #[error("unsupported image: {0}")]
    Unsupported(String),
    #[error("lossy container refused: {}", .0.display())]
    LossyContainer(PathBuf),
    #[error("{param} = {value} is out of range ({range})")]
    OutOfRange {
        param: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("metric undefined: {0}")]
    Degenerate(&'static str),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Image(#[from] image::ImageError),
}

impl Error {
    /// True for errors caused by invalid input rather than an environment
    /// or I/O failure.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Image(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
