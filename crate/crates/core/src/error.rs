use thiserror::Error;

use crate::graph::{ArcId, VertexId};

/// Errors raised by graph construction, verification, solving and generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc {arc} has an endpoint outside [0, n)")]
    ArcVertexOutOfRange { arc: ArcId },
    #[error("arc {arc} has weight {weight}, magnitude exceeds 2^31")]
    WeightOutOfRange { arc: ArcId, weight: i64 },
    #[error("vertex {vertex} is outside [0, {n})")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("arc id {arc} is outside [0, {m})")]
    ArcOutOfRange { arc: ArcId, m: usize },
    #[error("certificate has {found} labels but the graph has {expected} vertices")]
    CertLengthMismatch { expected: usize, found: usize },
    #[error("label {value} at vertex {vertex} exceeds the 2^62 magnitude bound")]
    CertOutOfRange { vertex: VertexId, value: i64 },
    #[error("cycle witness must contain at least one arc")]
    EmptyCycle,
    #[error("brute-force solver supports at most {max} vertices, got {n}")]
    TooLargeForBruteForce { n: usize, max: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
