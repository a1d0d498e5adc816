//! Grundy, weak Grundy and connected Grundy numbers of graphs.
//!
//! The crate provides a small graph substrate with first-fit coloring, exact
//! exponential solvers, parameterized decision procedures, and generators for
//! several reduction gadgets built from binomial trees.

pub mod chromatic;
pub mod color_coding;
pub mod coloring;
pub mod connected;
pub mod dimacs;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod graph;
pub mod reductions;
pub mod vertex_set;
pub mod witness;

pub use coloring::{
    first_fit, is_connected_ordering, validate_partition, Color, ColorAssignment, Variant, VertexOrdering,
    UNCOLORED,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use vertex_set::VertexSet;
