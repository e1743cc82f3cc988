use group_model::ModelError;
use prime_graph::GraphError;
use thiserror::Error;
use zsig_arith::ArithError;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("lemma violation: {0}")]
    LemmaViolation(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, SpectraError>;
