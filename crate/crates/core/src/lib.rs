//! Planar decompositions of graphs and the drawings they certify.

// Vertex-indexed loops often touch several parallel arrays.
#![allow(clippy::needless_range_loop)]

pub mod decomp;
pub mod draw;
pub mod error;
pub mod gen;
pub mod geom;
pub mod graph;
pub mod minor_free;
pub mod partition;

pub use decomp::Decomposition;
pub use draw::Drawing;
pub use error::{Error, Result};
pub use graph::Graph;
