use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised by the toolkit.
///
/// Input problems (bad files, bad symbols, violated preconditions) are kept
/// apart from the two search outcomes, [`Error::SearchExhausted`] and
/// [`Error::Inconclusive`], because callers treat them differently.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid symbol `{0}`")]
    InvalidSymbol(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("alphabets do not match")]
    AlphabetMismatch,
    #[error("state {state} out of range (automaton has {count} states)")]
    StateOutOfRange { state: usize, count: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("not a group alphabet: {0}")]
    NotGroupAlphabet(String),
    #[error("bad homomorphism: {0}")]
    BadMorphism(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("syllable index {index} out of range (word has {count} syllable pairs)")]
    SyllableOutOfRange { index: usize, count: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("witness search exhausted: {0}")]
    SearchExhausted(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}
