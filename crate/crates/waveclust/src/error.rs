/// Errors surfaced by the library.
///
/// The three variants map onto the distinct failure classes callers need to
/// tell apart: bad data, bad configuration, and arithmetic breakdown.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The input data violates a precondition (shape, range, emptiness).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A configuration value is out of its admissible range.
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    /// Arithmetic produced non-finite values or a factorization failed.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid_input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn invalid_config<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidConfig(msg.into()))
}
