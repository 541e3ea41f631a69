//! Words, presentations, the `.fp` format, Tietze moves, abelianization,
//! deficiency search and sub-presentation extension.

mod abelian;
mod parse;
mod presentation;
mod search;
mod extend;
mod tietze;
mod word;

use thiserror::Error;

pub use abelian::{abelianization, is_perfect, Abelianization};
pub use parse::{parse_presentation, parse_word};
pub use presentation::{is_valid_generator_name, Presentation};
pub use search::{deficiency_search, simplify, SearchOutcome};
pub use extend::{extend_sub_presentation, sub_presentation, LiftingCheck, SubPresentationExtension};
pub use tietze::{ConjugateFactor, Derivation, TietzeMove};
pub use word::{Letter, ReducedWords, Word, WordDisplay};


/// Free reduction of a word.
pub fn reduce_word(w: &Word) -> Word {
    w.reduced()
}

/// `d − k` of the given presentation.
pub fn deficiency_of(p: &Presentation) -> i64 {
    p.deficiency()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{name}` at line {line}, column {column}")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("{what} index {index} out of range (have {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("invalid derivation: {0}")]
    InvalidDerivation(String),
    #[error("generator {generator} cannot be eliminated: {reason}")]
    NotEliminable { generator: usize, reason: String },
    #[error("budget must be positive")]
    InvalidBudget,
    #[error("not a sub-presentation: {0}")]
    NotASubpresentation(String),
    #[error("lifting sends relator {relator} to a non-trivial element")]
    LiftingViolatesRelator { relator: usize },
    #[error("lifting is not an isomorphism: {0}")]
    LiftingNotBijective(String),
}
