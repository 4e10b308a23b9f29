use thiserror::Error;

use crate::verify::Violation;

/// Errors shared by every operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The edge set or parent map contains a cycle, so the input is not a forest.
    #[error("cycle detected: the input is not a forest")]
    CycleDetected,

    /// A vertex id is outside `[0, n)`.
    #[error("invalid vertex {vertex} (vertex count is {n})")]
    InvalidVertex { vertex: usize, n: usize },

    /// The same undirected edge was given twice.
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    /// An edge joins a vertex to itself.
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    /// Window sizes below 2 are rejected everywhere.
    #[error("invalid window size k = {k} (k must be at least 2)")]
    InvalidK { k: usize },

    /// The operation needs at least one vertex.
    #[error("empty forest")]
    EmptyForest,

    /// The instance exceeds the brute-force cutoff.
    #[error("forest with {n} vertices exceeds the brute-force cutoff of {cutoff}")]
    TooLarge { n: usize, cutoff: usize },

    /// A certificate was requested for a set that is not a valid cover.
    #[error("the given set is not a branching k-path vertex cover: {0:?}")]
    NotACover(Violation),

    /// The vertex count is below the domain of the requested bound.
    #[error("{what}: n = {n} is below the minimum of {min}")]
    DomainViolation {
        what: &'static str,
        n: usize,
        min: usize,
    },

    /// A generator or campaign was called with out-of-range parameters.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Two arguments that must describe the same instance do not.
    #[error("mismatched inputs: {0}")]
    MismatchedInputs(String),

    /// A peeling trace failed an independent replay check.
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
