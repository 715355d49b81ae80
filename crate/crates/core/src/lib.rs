//! Exact solvers for vertex deletion problems on split graphs.
//!
//! A split graph partitions into a clique C and an independent set I. This
//! crate decides, for a split graph G and budget k, whether deleting at most
//! k vertices can make G a block graph (`sbvd`) or a threshold graph
//! (`stvd`), and returns a witness set when the answer is yes.
//!
//! * [`graph`] — adjacency-bitset graphs, split partitions, and the
//!   structural predicates both solvers share.
//! * [`hitting_set`] — an exact 3-hitting-set solver; the block-deletion
//!   solver reduces to it.
//! * [`sbvd`] — split-to-block vertex deletion via guess + 3-hitting-set.
//! * [`stvd`] — split-to-threshold vertex deletion via a branching rule
//!   engine with per-node traces.
//! * [`analysis`] — branching-vector recurrence roots and trace statistics.
//! * [`oracle`] — brute-force reference solvers used to cross-check the
//!   fast paths on small instances.

pub mod analysis;
pub mod bitset;
pub mod graph;
pub mod hitting_set;
pub mod oracle;
pub mod sbvd;
pub mod stvd;

pub use bitset::VertexSet;
pub use graph::{Graph, SplitPartition};

/// Vertex id; vertices keep their original index for the whole lifetime of a
/// graph, deletions are logical.
pub type Vertex = usize;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The input graph admits no clique/independent-set partition.
    #[error("graph is not a split graph")]
    NotSplit,
    /// An operation needed at least one independent-side vertex.
    #[error("independent side of the partition is empty")]
    EmptyIndependentSide,
    /// A structural guarantee the rule engine relies on did not hold.
    /// Surfacing this instead of branching on a broken premise keeps wrong
    /// answers impossible.
    #[error("internal invariant violation: {0}")]
    InternalInvariantViolation(String),
    /// Brute-force oracles refuse instances above their enumeration bound.
    #[error("graph too large for brute force (n = {n}, limit {limit})")]
    TooLarge { n: usize, limit: usize },
    /// A trace line did not match `node <depth> <rule> k=<k> sizes=<c1,...>`.
    #[error("malformed trace line {line}: {reason}")]
    MalformedTrace { line: usize, reason: String },
    /// Branching vectors need t >= 2 entries, all >= 1.
    #[error("invalid branching vector: {0}")]
    InvalidBranchingVector(String),
}
