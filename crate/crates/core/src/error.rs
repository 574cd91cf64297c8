use thiserror::Error;

/// Errors surfaced by the contract-checked operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chow classes live on different quadrics: Q^{left} vs Q^{right}")]
    ContextMismatch { left: u32, right: u32 },

    #[error("quadric dimension must be at least 3, got {n}")]
    InvalidDimension { n: u32 },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("Chern data must be integral here: c1 = {c1}, c2 = {c2}")]
    NonIntegralChern { c1: String, c2: String },

    #[error("Chern data must be normalized (c1 in {{0, -1}}), got c1 = {c1}")]
    NotNormalized { c1: String },

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown output format: {0}")]
    UnknownFormat(String),

    #[error("nothing to emit: {0}")]
    EmptyReport(String),

    #[error(
        "candidate (n={n}, c1={c1}, c2={c2}) survived every filter but is not the Cayley datum"
    )]
    UnexpectedSurvivor { n: u32, c1: i64, c2: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
