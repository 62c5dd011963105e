use thiserror::Error;

use crate::physcore::Dimension;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: Dimension, right: Dimension },

    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("material `{material}` has no `{parameter}`")]
    MissingParameter { material: String, parameter: &'static str },

    #[error("spectrum carries units {found}, expected {expected}")]
    SpectrumUnits { found: String, expected: String },

    #[error("mechanism `{mechanism}` not applicable: {reason}")]
    Inapplicable { mechanism: String, reason: String },

    #[error("no applicable heating mechanism for this scenario")]
    NoMechanism,

    #[error("unknown material `{0}`")]
    UnknownMaterial(String),

    #[error("unknown mechanism `{name}` (registered: {registered})")]
    UnknownMechanism { name: String, registered: String },

    #[error("{0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Coarse error classes, used by the CLI for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Config,
    Io,
    NoMechanism,
}

impl ErrorCategory {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCategory::Config => "config",
            ErrorCategory::Io => "io",
            ErrorCategory::NoMechanism => "no_mechanism",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ErrorCategory::Config => 1,
            ErrorCategory::Io => 2,
            ErrorCategory::NoMechanism => 3,
        }
    }
}

impl Error {
    pub(crate) fn invalid(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.into(),
            reason: reason.into(),
        }
    }

    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Io(_) => ErrorCategory::Io,
            Error::NoMechanism | Error::Inapplicable { .. } => ErrorCategory::NoMechanism,
            _ => ErrorCategory::Config,
        }
    }
}

/// Rejects non-finite or non-positive values.
pub(crate) fn require_positive(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::invalid(name, format!("must be positive and finite, got {value}")))
    }
}

pub(crate) fn require_non_negative(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::invalid(name, format!("must be non-negative and finite, got {value}")))
    }
}
