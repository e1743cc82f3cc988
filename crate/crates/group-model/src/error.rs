use thiserror::Error;
use zsig_arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, ModelError>;
