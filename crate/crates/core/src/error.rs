use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Bad input: empty lists, out-of-range indices, non-nested ideals, ...
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Generators whose gcd is not one.
    #[error("not a numerical semigroup: gcd of generators is {gcd}")]
    NotNumericalSemigroup { gcd: i64 },

    /// Two summands of the module are isomorphic, so the order is not basic.
    #[error("not basic: summands {first} and {second} are isomorphic")]
    NotBasic { first: usize, second: usize },

    /// An internal consistency check failed. Indicates a bug, not bad input.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    /// Generators of a syzygy may live above the degree bound that was used.
    #[error("precision exhausted: degree bound {bound} is not stable under doubling")]
    Precision { bound: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
