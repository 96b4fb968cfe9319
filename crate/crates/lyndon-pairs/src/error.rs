use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the empty word is not allowed here")]
    EmptyWord,
    #[error("`{0}` is not a Lyndon word")]
    NotLyndon(String),
    #[error("`{0}` has length 1 and has no standard factorization")]
    NoFactorization(String),
    #[error("letter index {index} is outside an alphabet of size {size}")]
    LetterOutOfRange { index: u8, size: usize },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("cannot parse word `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("obstruction set is not an antichain: `{0}` is a factor of `{1}`")]
    NotAntichain(String, String),
    #[error("obstruction set contains the letter `{0}`")]
    LetterObstruction(String),
    #[error("atom set misses the letter `{0}`")]
    MissingLetter(String),
    #[error("atom set is not closed under Lyndon factors: `{factor}` of `{word}` is missing")]
    NotFactorClosed { word: String, factor: String },
    #[error("the atom set is infinite")]
    InfiniteAtoms,
    #[error("order {d} is invalid for an alphabet of size {alphabet}")]
    InvalidOrder { d: usize, alphabet: usize },
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
    #[error("not a Lie element: leading monomial `{0}` is not a Lyndon word")]
    NotLieElement(String),
    #[error("the zero polynomial has no leading word")]
    ZeroPolynomial,
    #[error("invalid overlap: {0}")]
    InvalidOverlap(String),
    #[error("search bound {0} exhausted")]
    BoundExhausted(usize),
    #[error("the pair is not standard")]
    NotStandard,
}

pub type Result<T> = std::result::Result<T, Error>;
