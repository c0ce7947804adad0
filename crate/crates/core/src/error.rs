use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("NonInvolutive: theta(theta({0})) != {0}")]
    NonInvolutive(char),
    #[error("UnknownLetter: '{0}' is not in the alphabet")]
    UnknownLetter(char),
    #[error("ConflictingPair: letter '{0}' is mapped more than once")]
    ConflictingPair(char),
    #[error("AlphabetMismatch: word contains '{0}' which is outside the involution's alphabet")]
    AlphabetMismatch(char),
    #[error("EmptyWord: operation requires a non-empty word")]
    EmptyWord,
    #[error("EmptyAlphabet: an alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("DuplicateLetter: '{0}' occurs twice in the alphabet")]
    DuplicateLetter(char),
    #[error("SizeGuardExceeded: set would exceed the guard of {0} elements")]
    SizeGuardExceeded(usize),
    #[error("StateBudgetExceeded: determinization exceeded {0} states")]
    StateBudgetExceeded(usize),
    #[error("FrontierBudgetExceeded: enumeration frontier exceeded {0} sentential forms")]
    FrontierBudgetExceeded(usize),
    #[error("NonterminalClash: grammar already uses reserved symbol '{0}'")]
    NonterminalClash(String),
    #[error("MarkerClash: base alphabet contains reserved symbol '{0}'")]
    MarkerClash(char),
    #[error("ParseError: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
