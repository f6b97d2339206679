use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The operation assumes a graph without isolated vertices.
    #[error("graph has an isolated vertex x{0}")]
    IsolatedVertex(usize),

    /// A configurable resource cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Cone input outside the supported class (non-pointed, degenerate).
    #[error("unsupported cone: {0}")]
    UnsupportedCone(String),

    /// An exact integer computation left the representable range.
    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    /// Two independent routes to the same object disagreed.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
