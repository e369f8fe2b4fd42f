use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A computation left the representable index width. Arithmetic here is
    /// done in a wider intermediate type and narrowed with a check, so this
    /// is reported instead of wrapping around.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    /// Tried to remove more elements from a range than it holds.
    #[error("range underflow: cannot remove {removed} elements from a range of length {len}")]
    RangeUnderflow { removed: i64, len: i64 },

    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    /// Expression or range-expression text failed to parse.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A checked precondition (diagnostic mode) was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
