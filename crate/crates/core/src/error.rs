use thiserror::Error;

use crate::words::GenSym;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("symbol {0} is not in the alphabet")]
    UnknownSymbol(GenSym),

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: String, reason: String },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed element: {0}")]
    MalformedElement(String),

    #[error("coset enumeration exceeded {0} cosets")]
    Overflow(usize),

    #[error("coset table is incomplete")]
    IncompleteTable,

    #[error("unknown relator label {0:?}")]
    UnknownRelator(String),

    #[error("move position {pos} out of range for word of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },

    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
