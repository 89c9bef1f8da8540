//! Crate-wide error type.

use std::io;

/// Errors produced by any stage of the pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// File system failure (missing file, unwritable directory, ...).
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),

    /// Malformed file contents: bad magic, unsupported maxval, truncated
    /// payload, unknown layer tag, ...
    #[error("format error: {0}")]
    Format(String),

    /// A parameter is outside its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two rasters that must share dimensions do not.
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    /// Fewer than two row or column positions survived detection; no cell
    /// can be formed.
    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),

    /// Tensor shapes do not chain through the network.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A training or fitting operation received no samples.
    #[error("empty dataset")]
    EmptyDataset,

    /// A sheet specification violates its geometric constraints.
    #[error("sheet spec error: {0}")]
    SpecError(String),

    /// A metric's denominator is zero.
    #[error("undefined metric: {0}")]
    UndefinedMetric(String),

    /// Bad pipeline configuration (unknown key, value out of range).
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
