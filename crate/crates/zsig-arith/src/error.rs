use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("lemma violation: {0}")]
    LemmaViolation(String),
    #[error("factorization budget exhausted on {0}")]
    FactorBudget(String),
}

pub type Result<T> = std::result::Result<T, ArithError>;
