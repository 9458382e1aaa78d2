//! Error types shared across the crate.
//!
//! Every fallible public operation returns [`Result<T>`] with a typed
//! [`Error`].  Domain violations (poles, unsupported parameter ranges,
//! malformed input) are reported as errors, never as NaN or silent zeros.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// The argument lies outside the mathematical domain of the function
    /// (e.g. a pole of the Gamma function, a branch violation).
    #[error("domain error in {function}: {message}")]
    Domain {
        /// Name of the function that rejected the argument.
        function: &'static str,
        /// Human-readable description of the violation.
        message: String,
    },

    /// A quadrature routine failed to reach the requested tolerance.
    #[error("quadrature did not converge in {function}: {message}")]
    QuadratureNonConvergence {
        /// Name of the routine.
        function: &'static str,
        /// Description: subdivision budget, achieved error, target.
        message: String,
    },

    /// The requested combination of parameters is mathematically meaningful
    /// but deliberately not implemented (documented restriction).
    #[error("unsupported in {function}: {message}")]
    Unsupported {
        /// Name of the function.
        function: &'static str,
        /// Which restriction was hit and what is supported instead.
        message: String,
    },

    /// Malformed input data (config files, fixtures, CLI arguments).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Guard rails for the exhaustive finite-group computations.
    #[error("finite-group model too large: {0}")]
    ModelTooLarge(String),

    /// I/O error wrapper.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization error wrapper.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    /// CSV (de)serialization error wrapper.
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Convenience constructor for domain errors.
    pub fn domain(function: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            function,
            message: message.into(),
        }
    }

    /// Convenience constructor for unsupported-parameter errors.
    pub fn unsupported(function: &'static str, message: impl Into<String>) -> Self {
        Error::Unsupported {
            function,
            message: message.into(),
        }
    }
}
