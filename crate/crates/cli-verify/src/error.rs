use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("cannot parse descriptor {input:?}: {reason}; expected {hint}")]
    Parse {
        input: String,
        reason: String,
        hint: &'static str,
    },
    #[error("range error: {0}")]
    Range(String),
    #[error(transparent)]
    Model(#[from] group_model::ModelError),
    #[error(transparent)]
    Graph(#[from] prime_graph::GraphError),
    #[error(transparent)]
    Spectra(#[from] torus_spectra::SpectraError),
    #[error(transparent)]
    Arith(#[from] zsig_arith::ArithError),
    #[error(transparent)]
    Eliminator(#[from] eliminator::EliminatorError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    /// 2 for malformed input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Range(_) => 2,
            CliError::Model(group_model::ModelError::Descriptor(_))
            | CliError::Graph(prime_graph::GraphError::Range(_))
            | CliError::Spectra(torus_spectra::SpectraError::Range(_))
            | CliError::Eliminator(eliminator::EliminatorError::Range(_)) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
