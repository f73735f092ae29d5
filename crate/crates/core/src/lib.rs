//! Constructive 2-coupon colorings of cubic graphs.
//!
//! A cubic graph in which every vertex lies on a triangle or a 4-cycle (equivalently,
//! one with no subgraph isomorphic to the depth-2 tree `L`) can be covered by
//! vertex-disjoint copies of six small graphs: `C3`, `C4`, `K2,3`, the house `X`,
//! the domino `Y` and the apexed domino `Z`. The [`partition`] module grows such a
//! cover one vertex at a time, and [`coloring`] turns it into a black/white labeling
//! in which every vertex sees both colors, i.e. two disjoint total dominating sets.
//!
//! The [`oracle`] module is independent of the construction: exact backtracking for
//! the total domatic number, the open neighborhood hypergraph, and exhaustive
//! enumeration of piece covers for small graphs.

pub mod coloring;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod motif;
pub mod oracle;
pub mod partition;

pub use coloring::{two_coupon_color, verify_coupon, verify_total_dominating, Color, Coloring};
pub use graph::{validate_cubic, Graph, GraphError, VertexSet};
pub use motif::{find_l_witness, LWitness, PieceKind};
pub use partition::{f_partition, validate_partition, Partition, Piece};
