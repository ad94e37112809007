use thiserror::Error;

use crate::model::PointSet;

/// Smallest supported number of isolated points.
pub const MIN_POINTS: u32 = 2;
/// Largest number of isolated points a `u64` support mask can hold.
pub const MAX_POINTS: u32 = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("point count must lie in {MIN_POINTS}..={MAX_POINTS}, got {0}")]
    PointCount(u32),
    #[error("support mask {bits:#x} is not a nonempty proper subset of {n} points")]
    NotProperSupport { bits: u64, n: u32 },
    #[error("point index {0} out of range 1..={1}")]
    PointIndex(u32, u32),
    #[error("supports live on different levels ({0} vs {1}); the level order is not defined across levels")]
    LevelMismatch(u32, u32),
    #[error("supports are built over different point counts ({0} vs {1})")]
    SpaceMismatch(u32, u32),
    #[error("n = {n} exceeds the cap {cap} for this operation")]
    TooLarge { n: u32, cap: u32 },
    #[error("blow-up multiplicity must be at least 2, got {0}")]
    Multiplicity(usize),
    #[error("the distance between {0} and {1} is not defined on the same vertex")]
    SameVertex(PointSet, PointSet),
    #[error("cap must be at least 1, got {0}")]
    BadCap(usize),
}

/// Where a greedy coloring pass ran out of free sources.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Downward,
    Upward,
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Phase::Downward => write!(f, "downward"),
            Phase::Upward => write!(f, "upward"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("{phase} pass starved at level {level} on {element}: all {} candidate sources already used", tried.len())]
    Starved {
        phase: Phase,
        level: u32,
        element: PointSet,
        tried: Vec<PointSet>,
    },
    #[error("coloring does not cover the vertex set: {missing} vertices uncolored, {extra} colored keys outside the graph")]
    Coverage { missing: usize, extra: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("document is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("vertex mask {0:#x} appears twice in the vertex list")]
    DuplicateVertex(u64),
    #[error("edge ({0:#x}, {1:#x}) references a mask outside the vertex list")]
    UnknownEdgeVertex(u64, u64),
    #[error("meta does not match the document body: {0}")]
    Meta(String),
    #[error("coloring does not assign a color to {0}")]
    UncoloredVertex(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("vertex counts differ ({0} vs {1})")]
    VertexCountMismatch(usize, usize),
    #[error("mapping is not a bijection on vertex indices")]
    NotBijective,
    #[error("mapping does not preserve adjacency on the pair ({0}, {1})")]
    NotPreserving(usize, usize),
    #[error("copies of class {class} are scattered across {target_classes} target classes; no class-level map exists")]
    CopiesScattered {
        class: PointSet,
        target_classes: usize,
    },
    #[error("class {class} has multiplicity {left} on one side and {right} on the other; extension impossible")]
    MultiplicityMismatch {
        class: PointSet,
        left: String,
        right: String,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
}
