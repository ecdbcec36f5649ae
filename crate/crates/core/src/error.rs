use thiserror::Error;

/// Everything that can go wrong while building graphs, complexes and
/// polynomials.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid coordinate {0:?}")]
    InvalidCoordinate(String),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(i64),
    #[error("vertices {0} and {1} share the same position")]
    CoincidentVertices(i64, i64),
    #[error("edge ({0}, {1}) references an unknown vertex")]
    UnknownVertex(i64, i64),
    #[error("self-loop at vertex {0}")]
    SelfLoop(i64),
    #[error("parallel edge ({0}, {1})")]
    ParallelEdge(i64, i64),
    #[error("edges ({}, {}) and ({}, {}) cross", .first.0, .first.1, .second.0, .second.1)]
    CrossingEdges {
        first: (i64, i64),
        second: (i64, i64),
    },
    #[error("region {index} {cycle:?} is not a cycle of edges: {reason}")]
    InvalidRegion {
        index: usize,
        cycle: Vec<i64>,
        reason: String,
    },
    #[error("region {index} {cycle:?} does not bound a single face of the drawing")]
    RegionNotAFace { index: usize, cycle: Vec<i64> },
    #[error(
        "Euler's formula fails: V={vertices} E={edges} F={faces} (including outer) components={components}"
    )]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
        components: usize,
    },
    #[error("polyomino has no cells")]
    EmptyPolyomino,
    #[error("polyomino cells are not edge-connected ({components} pieces)")]
    DisconnectedCells { components: usize },
    #[error("{0}")]
    OutOfRange(String),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("matchings do not cover the same vertex set")]
    MismatchedMatchings,
    #[error("matching is not a perfect matching of the graph")]
    NotPerfect,
    #[error("face is not a face of this complex")]
    FaceNotInComplex,
    #[error("edge ({0}, {1}) is not on the outer region")]
    NotOuterEdge(i64, i64),
    #[error("edge ({0}, {1}) has the outer region on both sides")]
    NoBoundedRegion(i64, i64),
    #[error("link of face {face} is not isomorphic to I(G_F)")]
    LinkMismatch { face: String },
}

pub type Result<T> = std::result::Result<T, Error>;
