use thiserror::Error;

/// Errors raised by the solvers, constructions and translations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A certificate (marking sequence, arrangement, decomposition) does not
    /// fit the instance it is checked against.
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    /// An exact solver was asked to handle an instance above its size cap.
    #[error("{what} is {value}, above the cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    /// The input violates the precondition of an operation.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A bound that the underlying combinatorial argument guarantees was not
    /// met. Seeing this means there is a bug in the translation code.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::ResourceLimit { what, value, cap })
    } else {
        Ok(())
    }
}
