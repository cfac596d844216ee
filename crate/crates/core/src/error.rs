use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A `normalized` constructor got amplitudes whose squared norm is off by
    /// more than [`crate::NORM_TOLERANCE`].
    #[error("state is not normalized: squared norm {norm_sq} (allowed deviation {tolerance})")]
    Normalization { norm_sq: f64, tolerance: f64 },

    #[error("invalid angle {0}: theta must be finite")]
    InvalidAngle(f64),

    #[error("invalid grid step {step}: must satisfy 0 < step <= {max}")]
    InvalidStep { step: f64, max: f64 },

    #[error("invalid sample count {0}: at least 1 sample is required")]
    InvalidSamples(usize),

    #[error("protocol violation: {0}")]
    ProtocolViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
