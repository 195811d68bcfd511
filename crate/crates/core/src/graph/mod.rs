//! Weighted directed graphs of density matrices, Laplacian density matrices
//! of weighted graphs, and prime enumeration.

mod digraph;
mod dot;
mod laplacian;
mod primes;

pub use digraph::{edge_norm, graph_from_density, Edge, WeightedDigraph};
pub use dot::{export_dot, format_significant, format_weight};
pub use laplacian::{density_from_weighted_graph, WeightedLaplacianInput};
pub use primes::{enumerate_primes, PrimeClass, PrimeTable};
