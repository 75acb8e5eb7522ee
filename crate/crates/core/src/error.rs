use thiserror::Error;

/// Errors raised by matroid constructors and the algebraic operations built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {what} supports n <= {limit}, got n = {n}")]
    Capacity { what: &'static str, limit: usize, n: usize },

    #[error("element {0} is a loop")]
    Loop(usize),

    #[error("elements {0} and {1} are parallel")]
    Parallel(usize, usize),

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("postcondition failed: {0}")]
    Postcondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_capacity(what: &'static str, limit: usize, n: usize) -> Result<()> {
    if n > limit {
        Err(Error::Capacity { what, limit, n })
    } else {
        Ok(())
    }
}
