use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("images array is not a bijection on 0..{degree}: {images:?}")]
    BadPermutation { degree: usize, images: Vec<usize> },

    #[error("permutation degree {found} does not match expected degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group enumeration exceeded the order cap {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("map is not a homomorphism: f({a})*f({b}) != f({a}*{b})")]
    HomomorphismInvalid { a: String, b: String },

    #[error("generator image list has length {found}, domain has {expected} generators")]
    GeneratorCountMismatch { expected: usize, found: usize },

    #[error("element {element} does not lie in the expected codomain")]
    ImageOutsideCodomain { element: String },

    #[error("isomorphism search exceeded the node budget {budget}")]
    SearchBudgetExceeded { budget: usize },

    #[error("level {0:?} lies outside the truncation")]
    TruncationExceeded((usize, usize)),

    #[error("index {index} out of range at level {level:?}")]
    IndexOutOfRange { index: usize, level: (usize, usize) },

    #[error("surjection tuples live over different levels: {0} vs {1}")]
    LevelMismatch(usize, usize),

    #[error("invalid generator word: index {index} exceeds level {level}")]
    InvalidWord { index: usize, level: usize },

    #[error("element is not a member of the Moore cell at level {level:?}")]
    DomainMembership { level: (usize, usize) },

    #[error("hypothesis violated: NG{level:?} is nontrivial, witness {witness}")]
    HypothesisViolated { level: (usize, usize), witness: String },

    #[error("structure fails its own axioms: {check}")]
    AxiomViolation { check: String },

    #[error("simplicial identity violated: {identity}, witness {witness}")]
    IdentityViolation { identity: String, witness: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
