use alloc::vec::Vec;

use super::graph::Graph;
use super::{EdgeId, VertexId};

/// The reversed graph `Ĝ`: every edge flipped, ids and weights kept.
pub fn reverse(g: &Graph) -> Graph {
    let phi = g.potentials().iter().map(|p| -p).collect();
    Graph::with_potential_hint(g.n(), g.edges().iter().map(|e| (e.head, e.tail, e.weight)), phi)
        .expect("reversal preserves cycle weights")
}

/// Correspondence between a graph and its vertex-split copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMapping {
    /// `v_in` for each original vertex.
    pub v_in: Vec<VertexId>,
    /// `v_out` for each original vertex.
    pub v_out: Vec<VertexId>,
    /// The zero-weight splitter edge `v_in → v_out`.
    pub splitter: Vec<EdgeId>,
}

/// Splits every vertex `v` into `v_in → v_out` (weight 0) so that vertex
/// failures become edge failures.
///
/// Original edge `e = (u, v, w)` keeps id `e` as `(u_out, v_in, w)`; the
/// splitter of vertex `v` gets id `m + v`.
pub fn split_vertices(g: &Graph) -> (Graph, SplitMapping) {
    let n = g.n();
    let m = g.m();
    let v_in: Vec<VertexId> = (0..n).map(|v| 2 * v).collect();
    let v_out: Vec<VertexId> = (0..n).map(|v| 2 * v + 1).collect();
    let edges =
        g.edges().iter().map(|e| (v_out[e.tail], v_in[e.head], e.weight)).chain((0..n).map(|v| (v_in[v], v_out[v], 0)));
    let phi = (0..2 * n).map(|x| g.potentials()[x / 2]).collect();
    let split = Graph::with_potential_hint(2 * n, edges, phi).expect("splitting preserves cycle weights");
    let splitter = (0..n).map(|v| m + v).collect();
    (split, SplitMapping { v_in, v_out, splitter })
}
