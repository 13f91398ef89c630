//! Clique-sum structure of K5-minor-free and K3,3-minor-free graphs, and the
//! decompositions and drawings built on it.

pub mod color;
pub mod k33;
pub mod k5;
pub mod sumtree;

pub use color::four_colouring;
pub use k33::{k33_planar_partition, k33_planarizing_matching, k33_rectilinear_drawing};
pub use k5::{
    crossings_k5, edge_partition_k5, maximal_k5_completion, omega_decomp_from_e, planar_omega_decomp_k5,
    strong_3_decomp_k5, strong_omega_decomp_k5, v8_omega_decomposition, v8_one_crossing_drawing,
    v8_strong_decomposition, v8_strong_omega_decomposition, EdgeTripartition,
};
pub use sumtree::{wagner_k33_decompose, wagner_k5_decompose, Join, Piece, PieceKind, SumTree, SumTreeJson};
