use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    Characteristic2,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("objects live over different fields or bicharacters")]
    ContextMismatch,
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("map does not preserve degree: {0}")]
    NotGraded(String),
    #[error("not a Hopf morphism: {0}")]
    NotMorphism(String),
    #[error("not a Hopf subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("not normal: {0}")]
    NotNormal(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("axiom failure: {0}")]
    Axiom(String),
    #[error("conditions disagree: {0}")]
    Disagreement(String),
    #[error("factorization is not unique or does not exist: {0}")]
    Factorization(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("size limit exceeded: {0}")]
    TooLarge(String),
}
