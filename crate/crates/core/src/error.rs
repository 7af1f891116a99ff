use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("generator index {index} out of range (alphabet has {size} generators)")]
    Alphabet { index: u32, size: usize },

    #[error("presentation has {generators} generators and {relators} relators; deficiency one required")]
    Deficiency { generators: usize, relators: usize },

    #[error("not a knot group: {0}")]
    NotAKnotGroup(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownKnot(String),

    #[error("invalid knot specification: {0}")]
    InvalidSpec(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("undefined monomiality limit: {0}")]
    UndefinedLambda(String),

    #[error("inconsistent summary: {0}")]
    InconsistentSummary(String),
}
