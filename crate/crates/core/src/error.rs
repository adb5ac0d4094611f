//! Error type shared across the simulation crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input fell outside a model's validity range.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter block failed validation.
    #[error("configuration error: {0}")]
    Config(String),

    /// A numerical routine failed to bracket or converge.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// A requested run would exceed the configured in-memory event budget.
    #[error("resource error: {0}; generate the stream in time chunks instead")]
    Resource(String),

    /// Least-squares fit did not converge.
    #[error("fit error: {0}")]
    Fit(String),

    /// Not enough statistics for the requested estimator.
    #[error("statistics error: {0}")]
    Stats(String),

    /// Calibration goal not reachable within the knob bounds.
    #[error("calibration error: {0}")]
    Calibration(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
