use std::path::PathBuf;

/// Errors produced by the `aquawave` library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed image {path}: {reason}")]
    Format { path: PathBuf, reason: String },

    #[error("unsupported image {path}: {reason}")]
    Unsupported { path: PathBuf, reason: String },

    #[error("invalid dimensions: {0}")]
    Dimensions(String),

    #[error("unknown basis {name:?}; supported bases: {supported}")]
    UnknownBasis { name: String, supported: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("frequency must be positive (got {0} kHz)")]
    NonPositiveFrequency(f64),

    #[error("sweep requires reference image")]
    SweepWithoutReference,

    #[error("missing threshold for level {level} {orientation}")]
    MissingThreshold {
        level: usize,
        orientation: &'static str,
    },

    #[error("whitening filter unstable (reflection coefficient {reflection} at stage {stage})")]
    UnstableWhitening { stage: usize, reflection: f64 },

    #[error("NMSE undefined: reference image has zero energy")]
    NmseUndefined,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
