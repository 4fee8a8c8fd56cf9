//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A checked tuple needs at least two elements.
    #[error("tuple needs at least {min} elements, got {got}")]
    TupleTooShort { min: usize, got: usize },

    /// Tuple elements must be positive integers.
    #[error("tuple elements must be positive, got a zero")]
    ZeroElement,

    /// The overall gcd of the input is not 1.
    #[error("elements {elements:?} have gcd {gcd}, expected 1")]
    NotCoprime { elements: Vec<u64>, gcd: u64 },

    /// A count table would exceed the configured entry cap.
    #[error("count table needs {needed} entries but the cap is {cap}")]
    CapExceeded { needed: u64, cap: u64 },

    /// The window search ran out of room below the cap.
    #[error(
        "no run of {window} consecutive integers with more than {s} \
         representations found below cap {cap}; raise the cap"
    )]
    CapExhausted { window: u64, s: u64, cap: u64 },

    /// A closed form was requested outside its proven range of n.
    #[error("n = {n} is outside the proven range for s = {s}: requires {requirement}")]
    BelowBound { n: u64, s: u64, requirement: String },

    /// The relaxed bound (n >= N instead of n > N) is only proven for
    /// s in {0, 1, 2} and for s that is neither a square nor pronic.
    #[error("relaxed bound mode is unproven for s = {s} (square or pronic, s > 2)")]
    RelaxedUnavailable { s: u64 },

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Neither branch condition of the general-triple formula holds.
    #[error("branch condition not met: {0}")]
    ConditionNotMet(String),

    /// The even-branch upper bound 2 + 1/K is undefined (K = 0, i.e. s < 3).
    #[error("even-branch bound 2 + 1/K is undefined for s = {s}")]
    UndefinedBound { s: u64 },

    /// A value does not fit the requested integer width.
    #[error("value out of range: {0}")]
    ValueOutOfRange(String),

    /// A string could not be parsed as a tuple.
    #[error("invalid tuple literal: {0}")]
    InvalidTuple(String),
}
