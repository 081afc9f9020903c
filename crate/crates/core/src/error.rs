use alloc::string::String;
use alloc::vec::Vec;

use crate::graph_core::{EdgeId, VertexId};

/// Errors reported by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed edge-list input; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse {
        /// Offending line (1-based).
        line: usize,
        /// What went wrong.
        msg: String,
    },
    /// The graph contains a negative cycle; `cycle` lists its edges in order.
    #[error("negative cycle through edges {cycle:?}")]
    NegativeCycle {
        /// Edge ids forming the cycle.
        cycle: Vec<EdgeId>,
    },
    /// A vertex id is not below `n`.
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange {
        /// The bad vertex.
        vertex: VertexId,
        /// Vertex count.
        n: usize,
    },
    /// An edge id does not exist in the graph.
    #[error("edge id {0} does not exist")]
    UnknownEdgeId(EdgeId),
    /// An edge weight exceeds the admissible magnitude.
    #[error("weight {weight} exceeds bound {bound}")]
    WeightOutOfRange {
        /// The offending weight.
        weight: i64,
        /// The admissible magnitude.
        bound: i64,
    },
    /// The target cannot be reached from the source.
    #[error("vertex {t} is unreachable from {s}")]
    Unreachable {
        /// Source.
        s: VertexId,
        /// Target.
        t: VertexId,
    },
    /// A range query with invalid bounds.
    #[error("range [{l}, {r}] out of bounds for length {len}")]
    RangeOutOfBounds {
        /// Left end.
        l: usize,
        /// Right end (inclusive).
        r: usize,
        /// Length of the underlying array.
        len: usize,
    },
    /// Matrix operands of incompatible shape.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch {
        /// Dimension of the left operand.
        left: usize,
        /// Dimension of the right operand.
        right: usize,
    },
    /// The second failed edge lies on the designated path.
    #[error("edge {0} lies on the designated shortest path")]
    E2OnPath(EdgeId),
    /// A query was routed to a solver for a different case.
    #[error("query does not belong to this case: {0}")]
    WrongCase(&'static str),
    /// A parameter is outside its admissible range.
    #[error("bad parameter: {0}")]
    BadParameter(String),
    /// Path reporting was asked for an infinite entry.
    #[error("no finite entry for failures ({e1}, {e2})")]
    NoFiniteEntry {
        /// First failed edge.
        e1: EdgeId,
        /// Second failed edge.
        e2: EdgeId,
    },
    /// An integer argument exceeds its limit.
    #[error("{value} out of range (limit {limit})")]
    OutOfRange {
        /// The argument.
        value: u64,
        /// Exclusive upper limit.
        limit: u64,
    },
    /// The hop-bounded f computation disagreed with the dynamic program on
    /// every attempt.
    #[error("scaled f table disagrees with the dynamic program after {attempts} attempts")]
    VerificationFailed {
        /// Number of attempts made.
        attempts: usize,
    },
}

/// Shorthand result type.
pub type Result<T> = core::result::Result<T, Error>;
