//! Eccentricity, radius, diameter and center computation for
//! alpha_i-metric graphs.
//!
//! The crate bundles an exact all-pairs oracle, a classifier for the metric
//! properties the fast algorithms rely on, linear-time approximations from a
//! constant number of BFS sweeps, and exact center search for alpha_1-metric
//! graphs.

pub mod approx;
pub mod center;
pub mod classify;
pub mod gates;
pub mod generate;
pub mod graph;
pub mod isometric;
pub mod oracle;
pub mod par;
pub mod traversal;
pub mod tree;
pub mod verify;

pub use graph::{Graph, GraphError};
pub use oracle::{EccMode, EccReport};
pub use traversal::{count_bfs, DistanceMatrix};
