use thiserror::Error;

/// Errors surfaced by the construction and verification pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not a supported prime (need a prime != 3 below 256)")]
    BadModulus(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfig(String),
    #[error("singular vector where a nonsingular one is required")]
    SingularVector,
    #[error("generator does not preserve the structure: {0}")]
    BadGenerator(String),
    #[error("subspace is not invariant under the group generators")]
    NotInvariant,
    #[error("inconsistent rank-3 parameters: {0}")]
    ParameterInconsistency(String),
    #[error("fatal structural inconsistency: {0}")]
    Inconsistency(String),
    #[error("meataxe retry budget exhausted (inconclusive)")]
    MeataxeInconclusive,
    #[error("linear system is inconsistent")]
    InconsistentSystem,
}

pub type Result<T> = std::result::Result<T, Error>;
