use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures while reading or writing binary PGM files.
#[derive(Debug, Error)]
pub enum PgmError {
    #[error("file not found: {0}")]
    NotFound(PathBuf),
    #[error("unsupported PGM variant {0:?} (only binary P5 is accepted)")]
    UnsupportedVariant(String),
    #[error("malformed PGM header: {0}")]
    MalformedHeader(String),
    #[error("unsupported maxval {0} (only 255 is accepted)")]
    UnsupportedMaxval(u32),
    #[error("truncated pixel data: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Pgm(#[from] PgmError),
    #[error("invalid image dimensions {width}x{height}")]
    InvalidDimensions { width: usize, height: usize },
    #[error("sample count {found} does not match {width}x{height}")]
    SampleCount {
        width: usize,
        height: usize,
        found: usize,
    },
    #[error("edge column {edge_x} outside 0..={width}")]
    EdgeOutOfRange { edge_x: usize, width: usize },
    #[error("window n={n} must be at least 2")]
    WindowTooSmall { n: usize },
    #[error(
        "{n}x{n} window centered at ({center_x}, {center_y}) does not fit a {width}x{height} image"
    )]
    WindowOutOfBounds {
        center_x: usize,
        center_y: usize,
        n: usize,
        width: usize,
        height: usize,
    },
    #[error("noise sigma must be finite and >= 0, got {0}")]
    InvalidSigma(f64),
    #[error("invalid optical configuration: {0}")]
    InvalidOptics(String),
    #[error("lens displacement must be finite, got {0}")]
    InvalidLens(f64),
    #[error("blur radius must be finite and >= 0, got {0}")]
    NegativeRadius(f64),
    #[error("supersample factor must be >= 1")]
    InvalidSupersample,
    #[error("{size}x{size} kernel does not fit a {width}x{height} image")]
    KernelTooLarge {
        size: usize,
        width: usize,
        height: usize,
    },
    #[error(
        "edge profile half-span {half_span} px is below 3x the blur radius ({radius_px:.3} px)"
    )]
    SpanTooSmall { half_span: usize, radius_px: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
