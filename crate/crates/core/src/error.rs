use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown {kind} `{id}`")]
    UnknownAlgorithm { kind: String, id: String },

    #[error("parameter error in `{id}`: {msg}")]
    Param { id: String, msg: String },

    #[error("invalid header: {0}")]
    Header(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("corrupt stream: {0}")]
    Corrupt(String),

    #[error("unexpected end of stream")]
    UnexpectedEof,

    #[error("index {index} out of range (length {len})")]
    OutOfRange { index: usize, len: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn corrupt(msg: impl Into<String>) -> Error {
    Error::Corrupt(msg.into())
}
