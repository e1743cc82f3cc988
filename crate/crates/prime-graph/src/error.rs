use group_model::ModelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("inconsistent adjacency: {0}")]
    Inconsistent(String),
    #[error("lemma violation: {0}")]
    LemmaViolation(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

pub type Result<T> = std::result::Result<T, GraphError>;
