use thiserror::Error;

use crate::hypercore::Triplet;

/// Errors shared by all modules. Verification failures that are report
/// content (missing/duplicated edges and the like) live in the report types,
/// not here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex {0} in triplet")]
    DuplicateVertex(usize),
    #[error("repeated vertex {0} in cycle")]
    RepeatedVertex(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("cycle has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("a tight cycle needs at least 4 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("order {v} is infeasible: {reason}")]
    InfeasibleOrder { v: usize, reason: String },
    #[error("invalid 1-factor: {0}")]
    InvalidFactor(String),
    #[error("parts are not pairwise disjoint")]
    OverlappingParts,
    #[error("part has size {got}, expected {expected}")]
    WrongPartSize { expected: usize, got: usize },
    #[error("no perfect pairing found for order {n}")]
    MatchingFailed { n: usize },
    #[error("search budget exceeded")]
    SearchBudgetExceeded,
    #[error("no bundled system for k={k}, v={v}")]
    UnknownSystem { k: usize, v: usize },
    #[error("triplet {0} lies in the rotation-invariant 1-factor")]
    DegenerateOrbit(Triplet),
    #[error("unsupported cycle length k={0}")]
    UnsupportedK(usize),
    #[error("search exhausted its budget without finding a system")]
    NotFound,
    #[error("triple {0} appears more than once in the pairing")]
    DuplicateTriple(Triplet),
    #[error("triple {0} is missing from the pairing")]
    MissingTriple(Triplet),
    #[error("edges {0} and {1} share {2} vertices, expected exactly 2")]
    NotAnH2(Triplet, Triplet, usize),
    #[error("class {0} does not partition the vertex set")]
    ClassNotPartition(usize),
    #[error("pair {{{0},{1}}} is covered more than once")]
    PairCoveredTwice(usize, usize),
    #[error("pair {{{0},{1}}} is not covered by any block")]
    PairUncovered(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn infeasible(v: usize, reason: impl Into<String>) -> Self {
        Error::InfeasibleOrder {
            v,
            reason: reason.into(),
        }
    }
}
