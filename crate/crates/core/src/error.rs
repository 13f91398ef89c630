use std::fmt;

/// Errors returned by every fallible operation in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("bound violated: {0}")]
    Bound(String),
    /// A sum-tree leaf that is neither planar nor an allowed exceptional piece.
    #[error("graph is not decomposable: piece on vertices {vertices:?} is {reason}")]
    NotDecomposable { vertices: Vec<usize>, reason: String },
    #[error("degenerate drawing: {0}")]
    Degenerate(Degeneracy),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Json(_) | Error::Io(_) => 2,
            Error::Precondition(_) | Error::NotDecomposable { .. } | Error::Degenerate(_) => 3,
            Error::Invariant(_) | Error::Bound(_) => 4,
        }
    }
}

/// The first general-position violation found in a drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degeneracy {
    CoincidentPoints { a: usize, b: usize },
    ZeroLengthSegment { edge: usize, segment: usize },
    EdgeThroughVertex { edge: usize, vertex: usize },
    Touching { e: usize, f: usize },
    Overlap { e: usize, f: usize },
    NonSimpleRoute { edge: usize },
    TriplePoint { edges: Vec<usize> },
    CoordinateOverflow,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::CoincidentPoints { a, b } => write!(f, "vertices {a} and {b} coincide"),
            Degeneracy::ZeroLengthSegment { edge, segment } => {
                write!(f, "edge {edge} has a zero-length segment {segment}")
            }
            Degeneracy::EdgeThroughVertex { edge, vertex } => {
                write!(f, "edge {edge} passes through vertex {vertex}")
            }
            Degeneracy::Touching { e, f: g } => {
                write!(f, "edges {e} and {g} touch without crossing")
            }
            Degeneracy::Overlap { e, f: g } => write!(f, "edges {e} and {g} overlap"),
            Degeneracy::NonSimpleRoute { edge } => write!(f, "route of edge {edge} is not simple"),
            Degeneracy::TriplePoint { edges } => {
                write!(f, "edges {edges:?} cross at a common point")
            }
            Degeneracy::CoordinateOverflow => {
                write!(f, "coordinates exceed the exact-arithmetic range")
            }
        }
    }
}
