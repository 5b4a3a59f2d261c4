//! Internet AS-level topology generation with the positive-feedback
//! preference model and its baselines, plus the topology metrics used to
//! compare them.

pub mod edgelist;
pub mod generators;
pub mod graph;

pub use graph::{Graph, GraphError, LinkKind, NodeId};
pub mod harness;
pub mod metrics;
