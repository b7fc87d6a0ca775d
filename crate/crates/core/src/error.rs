//! Error type shared by every layer of the library.

use thiserror::Error;

/// Errors surfaced by parsing, validation and the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("relation {0} mixes non-parallel paths")]
    NonParallel(String),
    #[error("relation {0} contains a path of length < 2")]
    ShortRelation(String),
    #[error("ideal is not admissible: no m <= {bound} with R^m inside I")]
    NotAdmissible { bound: usize },
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("value `{0}` is not representable in the chosen field")]
    NotRepresentable(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("pairing <[X],[M]> = {0} is non-zero, the induced map is not square")]
    NonSquare(i64),
    #[error("refused: {0}")]
    Refused(String),
    #[error("indecomposability uncertified: End/rad has dimension {0}")]
    Uncertified(usize),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("inconsistency: {0}")]
    Inconsistency(String),
    #[error("universe incomplete: {0}")]
    Incomplete(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
