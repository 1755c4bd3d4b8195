use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("relator violation: relator {index} does not evaluate to the identity")]
    RelatorViolation { index: usize },

    #[error("not generating: generator images span a subgroup of order {reached} < {order}")]
    NotGenerating { reached: usize, order: usize },

    #[error("group mismatch: operands live over different groups")]
    GroupMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("move {index} not applicable: {msg}")]
    Move { index: usize, msg: String },

    #[error("NotInjective: the third boundary has a nonzero kernel")]
    NotInjective,

    #[error("NoSplit: the third boundary is injective but has no integral left inverse")]
    NoSplit,
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
