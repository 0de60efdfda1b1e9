use crate::freegroup::FreeWord;

/// Errors raised by the library.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("NotInImage: {0} is not a palindromization value")]
    NotInImage(FreeWord),

    #[error("NotCentral: {0} is not a central word")]
    NotCentral(String),

    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("bound exceeded: {what} = {value} > {max}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
