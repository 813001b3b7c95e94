use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge `{source_label}`-`{target}`")]
    DuplicateEdge { source_label: String, target: String },

    #[error("non-finite weight {weight} on edge `{source_label}`-`{target}`")]
    NonFiniteWeight {
        source_label: String,
        target: String,
        weight: f64,
    },

    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),

    #[error("unknown feature `{0}`")]
    UnknownFeature(String),

    #[error("feature `{feature}` requires a {expected} graph")]
    GraphKindMismatch { feature: String, expected: &'static str },

    #[error("enumeration for `{feature}` exceeded the cap of {cap} sets")]
    ResourceLimit { feature: String, cap: usize },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("{what} exceeds the size limit of {limit}")]
    SizeLimit { what: String, limit: usize },

    #[error("gap index {index} out of range (diagram has {available} gaps)")]
    GapOutOfRange { index: usize, available: usize },

    #[error("weight transform: {0}")]
    Transform(String),

    #[error("{path}:{line}: {message}")]
    Parse { path: PathBuf, line: u64, message: String },

    #[error("diagram document: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for this error: 2 for data problems, 3 for resource caps.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit { .. } | Error::SizeLimit { .. } => 3,
            Error::UnknownFeature(_)
            | Error::GraphKindMismatch { .. }
            | Error::InvalidQuery(_)
            | Error::GapOutOfRange { .. } => 1,
            _ => 2,
        }
    }
}
