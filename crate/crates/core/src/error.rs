use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The objective produced NaN or an infinity.
    #[error("objective returned non-finite value {value} at {position:?}")]
    NonFinite { position: Vec<f64>, value: f64 },

    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    /// A configuration value is out of range; the message names the field.
    #[error("{0}")]
    InvalidConfig(String),

    #[error("unknown benchmark `{name}`; available: {available}")]
    UnknownBenchmark { name: String, available: String },

    #[error("invalid TSP instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for range-check failures in config validation.
pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidConfig(msg()))
    }
}
