use thiserror::Error;

/// Everything that can go wrong in the toolkit.
///
/// The variants fall into three families which the command-line front end
/// maps onto distinct exit codes: malformed input ([`Error::Parse`],
/// [`Error::IndexOverflow`]), violated preconditions (most variants), and
/// [`Error::Internal`], which signals a broken invariant inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("modality index {index} exceeds the supported maximum {max}")]
    IndexOverflow { index: u64, max: usize },

    #[error("formula contains the variable `{0}`; decision procedures need variable-free input")]
    Variable(String),

    #[error("formula contains a conservativity modality; only the diamond fragment is supported here")]
    Nabla,

    #[error("letter {letter} is below the required minimum {min}")]
    LetterRange { letter: usize, min: usize },

    #[error("shift by {delta} underflows letter {letter}")]
    Underflow { letter: usize, delta: i64 },

    #[error("not a point of the Ignatiev frame: {0}")]
    InvalidPoint(String),

    #[error("point {0} is not on the main axis")]
    OffAxis(String),

    #[error("no block of the word is at least the restricting word (the degenerate case applies)")]
    NoRestriction,

    #[error("spectrum cannot be represented by a formula: {0}")]
    Unrepresentable(String),

    #[error("invalid frame: {0}")]
    Frame(String),

    #[error("model has no value for variable `{var}` at node {node}")]
    Unvalued { node: String, var: String },

    #[error("brute-force validation needs 2^{0} valuations; the limit is 2^20")]
    TooManyValuations(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
