//! 2-limited dominating broadcasts on subcubic graphs.
//!
//! The crate covers the graph model ([`graph`]), broadcasts ([`broadcast`]),
//! an exact solver ([`solver`]), exhaustive generation ([`generator`],
//! [`canon`]), the neighborhood parameter machinery ([`structure`]), the
//! separated-`C₄` contraction ([`reductions`]) and batch verification
//! ([`harness`]).

pub mod broadcast;
pub mod canon;
pub mod generator;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod named;
pub mod reductions;
pub mod solver;
pub mod structure;

pub use broadcast::{Broadcast, BroadcastError};
pub use graph::{GraphError, SubcubicGraph, VertexSet, WeightReport};
pub use solver::{gamma_exact, SolveResult};
