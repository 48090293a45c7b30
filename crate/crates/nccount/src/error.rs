use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension vector has {got} entries, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("quiver is not of Dynkin type")]
    NotDynkin,
    #[error("quiver has an oriented cycle")]
    Cyclic,
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("arrow references unknown vertex {0}")]
    UnknownVertex(String),
    #[error("integer overflow in Euler form")]
    Overflow,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not a divisor of (k, n)")]
    NotADivisor(u64),
    #[error("unsupported genus {0}")]
    UnsupportedGenus(i64),
    #[error("operation is not defined for {0}")]
    Undefined(String),
    #[error("{0} is not a Markov number within the generated range")]
    NotMarkov(u64),
    #[error("input is not a genus 0 curve")]
    NotGenusZero,
}

pub type Result<T> = std::result::Result<T, Error>;
