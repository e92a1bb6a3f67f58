use thiserror::Error;

/// Errors produced by the sphere-size and bound routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("radius t = {t} outside 0..={max}")]
    RadiusOutOfRange { t: usize, max: usize },

    #[error("bisection did not converge after {iterations} iterations (rho = {rho})")]
    NoConvergence { iterations: usize, rho: f64 },

    #[error("computation too large: {0}")]
    Infeasible(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
