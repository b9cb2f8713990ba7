use thiserror::Error;

/// Errors raised by the algebra engine, the planarity pipeline and the CLI front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero polynomial has no leading term")]
    NoLeadingTerm,

    #[error("operands belong to different variable contexts or monomial orders")]
    ContextMismatch,

    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("invalid parameters: {0}")]
    Validation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(pos: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
