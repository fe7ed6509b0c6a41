use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration would exceed a configured resource cap.
    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    /// A box lies outside the diagram it was addressed into.
    #[error("box ({row},{col}) is outside the diagram")]
    OutsideDiagram { row: usize, col: usize },

    /// Skew difference requested for shapes without containment.
    #[error("inner shape is not contained in outer shape")]
    NotContained,

    /// A sequence of parts violates the (strict) partition invariant.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A precondition on numeric arguments was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The 2F1 series does not terminate for the given parameters.
    #[error("2F1 series does not terminate: neither upper parameter is a non-positive integer")]
    NonTerminatingSeries,

    /// A lower-parameter Pochhammer factor vanished before termination.
    #[error("Pochhammer (c)_{s} vanishes before the series terminates")]
    PochhammerPole { s: u64 },

    /// An exact quotient that must be integral was not; indicates a bug.
    #[error("internal error: exact quotient is non-integral ({0})")]
    NonIntegralQuotient(String),
}

pub type Result<T> = std::result::Result<T, Error>;
