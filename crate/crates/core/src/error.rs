use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank deficient: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },

    #[error("configuration is not full-dimensional")]
    NotFullDimensional,

    #[error("second configuration must span a segment; use one_dim_degree for segment inputs, or pass two full-dimensional configurations")]
    OneDimensional,

    #[error("configuration does not span a segment")]
    NotASegment,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("duplicate point in block {block}")]
    DuplicatePoint { block: usize },

    #[error("empty configuration in block {block}")]
    EmptyConfig { block: usize },

    #[error("planar method requires n = 2, got n = {0}")]
    NotPlanar(usize),

    #[error("degenerate weight: a Cramer coordinate vanished")]
    DegenerateWeight,

    #[error("genericity failure: no generic weight found after {retries} retries")]
    GenericityFailure { retries: u32 },

    #[error(
        "instance too large for exhaustive chain enumeration (m = {m}, corank = {corank}); pass --force to override"
    )]
    SizeGate { m: usize, corank: usize },

    #[error("instability: report bug ({0})")]
    Instability(String),

    #[error("no linear fit, check the stratum ({0})")]
    NoLinearFit(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
