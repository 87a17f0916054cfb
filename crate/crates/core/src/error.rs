use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("duplicate irrational label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown irrational label `{0}`")]
    UnknownLabel(String),
    #[error("irrational index {index} is outside a basis of {len} labels")]
    IndexOutOfBasis { index: usize, len: usize },
    #[error("irrational bases do not agree: {0}")]
    BasisMismatch(String),
    #[error("no float hint for irrational `{0}`")]
    MissingHint(String),

    #[error("multiplication table is empty")]
    EmptyTable,
    #[error("multiplication table is not square")]
    NotSquare,
    #[error("table entry {value} at ({row}, {col}) is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("table is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("argument out of range: {0}")]
    BadRange(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("regularity differs inside the class of {0}; the multiplier is broken")]
    ClassInconsistency(usize),
    #[error("class of {class} is not regular: conflicting values at {element}")]
    NotRegular { class: usize, element: usize },

    #[error("singular values straddle the tolerance {tol:e} (nearest values {below:e} and {above:e})")]
    IllConditioned { tol: f64, below: f64, above: f64 },

    #[error("invalid bihomomorphism: {0}")]
    InvalidBihomomorphism(String),
    #[error("lemma audit failed: {0}")]
    LemmaViolation(String),

    #[error("factor multiplier {0} is not normalized")]
    NotNormalized(usize),
    #[error("word is not in the kernel of the map onto the direct product")]
    NotInKernel,
    #[error("similarity check failed at ({x}, {y})")]
    SimilarityFailure { x: String, y: String },

    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
