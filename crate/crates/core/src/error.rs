use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty alphabet")]
    EmptyAlphabet,

    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),

    #[error("not a Lyndon word: {0}")]
    NotLyndon(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("letter index {index} outside an alphabet of {size} symbols")]
    LetterOutOfRange { index: usize, size: usize },

    #[error("elements live over different alphabets")]
    AlphabetMismatch,

    #[error("no image given for symbol `{0}`")]
    MissingImage(String),

    #[error("invalid braid generator A[{i},{j}] for {n} strands")]
    InvalidGenerator { i: usize, j: usize, n: usize },

    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("symbol sets overlap on `{0}`")]
    OverlappingSets(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("formula violation: {0}")]
    FormulaViolation(String),

    #[error("not a free-generator series: {0}")]
    NotFreeSeries(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
