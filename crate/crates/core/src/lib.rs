pub mod automata;
pub mod cli;
pub mod conecheck;
pub mod error;
pub mod freegroup;
pub mod graphprod;
pub mod orders;

pub use automata::{Alphabet, Automaton, StateId, Symbol, Word};
pub use error::{Error, Result};
pub use freegroup::{GroupAlphabet, GroupElement, ReducedLang};
