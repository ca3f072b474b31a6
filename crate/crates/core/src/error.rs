//! Error taxonomy shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Structurally valid input on which the operation is undefined
    /// (zero polynomial mod l, vanishing discriminant, ...).
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// An enumeration exceeded its state budget; `visited` states were
    /// explored before the stop.
    #[error("resource limit exceeded after {visited} states: {what}")]
    ResourceLimit { what: String, visited: u64 },

    /// Parameter range the artifact does not support.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An internal consistency check failed; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),

    /// Numerically meaningless request (e.g. nearly coincident angles).
    #[error("ill-conditioned input: {0}")]
    IllConditioned(String),

    /// Projection count did not stabilize at the requested slack.
    #[error("needs more slack: projection count unstable at slack {slack}")]
    NeedsMoreSlack { slack: u32 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
