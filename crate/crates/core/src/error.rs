use thiserror::Error;

/// Everything the library can reject. Variants are named for the contract
/// they enforce, not for the module that raises them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("words have unequal lengths: {left} vs {right}")]
    UnequalLengths { left: usize, right: usize },

    #[error("word must be nonempty")]
    EmptyWord,

    #[error("expected a word of length {expected}, got {actual}")]
    WordLength { expected: usize, actual: usize },

    #[error("letter {letter} is outside the alphabet {alphabet}")]
    LetterOutsideAlphabet { letter: i32, alphabet: String },

    #[error("enumeration budget of {budget} candidate extensions exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("counting method `{method}` is not supported for the {model} model")]
    UnsupportedMethod { model: String, method: String },

    #[error("gap {gap} after word {index} is too small; a gap of at least {required} is required")]
    GapTooSmall { index: usize, gap: u64, required: u64 },

    #[error("word {index} is not in the language")]
    NonMemberInput { index: usize },

    #[error("alphabet has no letter of the opposite index parity")]
    NoOppositeParityLetter,

    #[error("repair is not defined for {family}-family codes")]
    RepairUnsupported { family: &'static str },

    #[error("entropy bound inapplicable: gap-density upper bound {alpha_upper} is not below 1")]
    EntropyBoundInapplicable { alpha_upper: String },

    #[error("distributions have different levels: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("cannot parse {input:?} as a word: {reason}")]
    WordParse { input: String, reason: String },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
