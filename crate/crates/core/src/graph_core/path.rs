use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::Graph;
use super::sssp::{sssp_with, SsspOptions};
use super::view::GraphView;
use super::{EdgeId, VertexId};
use crate::{Error, Result};

/// A walk `p_0 → … → p_{h−1}` with prefix distances.
///
/// Positions are 0-based: `vertex(0)` is the source, `edge_ids()[i]` joins
/// `vertex(i)` to `vertex(i + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSeq {
    vertices: Vec<VertexId>,
    edge_ids: Vec<EdgeId>,
    prefix_dist: Vec<i64>,
    position: Vec<Option<usize>>,
    edge_position: BTreeMap<EdgeId, usize>,
}

impl PathSeq {
    /// Builds the walk starting at `s` that follows `edges`.
    pub fn from_edges(g: &Graph, s: VertexId, edges: Vec<EdgeId>) -> Result<PathSeq> {
        g.check_vertex(s)?;
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        let mut prefix_dist = Vec::with_capacity(edges.len() + 1);
        let mut edge_position = BTreeMap::new();
        vertices.push(s);
        prefix_dist.push(0);
        for (i, &e) in edges.iter().enumerate() {
            if e >= g.m() {
                return Err(Error::UnknownEdgeId(e));
            }
            let edge = g.edge(e);
            if edge.tail != vertices[i] {
                return Err(Error::BadParameter(alloc::format!("edge {e} does not continue the walk at position {i}")));
            }
            vertices.push(edge.head);
            prefix_dist.push(prefix_dist[i] + edge.weight);
            edge_position.entry(e).or_insert(i);
        }
        let mut position = vec![None; g.n()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v].get_or_insert(i);
        }
        Ok(PathSeq { vertices, edge_ids: edges, prefix_dist, position, edge_position })
    }

    /// Vertices in order.
    #[inline]
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edge ids in order.
    #[inline]
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    /// `prefix_dist()[i]` is the length of the walk up to `vertex(i)`.
    #[inline]
    pub fn prefix_dist(&self) -> &[i64] {
        &self.prefix_dist
    }

    /// Number of vertices `h`.
    #[inline]
    pub fn h(&self) -> usize {
        self.vertices.len()
    }

    /// Vertex at position `i`.
    #[inline]
    pub fn vertex(&self, i: usize) -> VertexId {
        self.vertices[i]
    }

    /// First vertex.
    #[inline]
    pub fn source(&self) -> VertexId {
        self.vertices[0]
    }

    /// Last vertex.
    #[inline]
    pub fn target(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    /// Total length.
    #[inline]
    pub fn length(&self) -> i64 {
        self.prefix_dist[self.prefix_dist.len() - 1]
    }

    /// Length from position `x` to position `y ≥ x` along the walk.
    #[inline]
    pub fn between(&self, x: usize, y: usize) -> i64 {
        self.prefix_dist[y] - self.prefix_dist[x]
    }

    /// Length from position `x` to the end.
    #[inline]
    pub fn to_end(&self, x: usize) -> i64 {
        self.length() - self.prefix_dist[x]
    }

    /// Position of `v` (first occurrence), if `v` is on the walk.
    #[inline]
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.position.get(v).copied().flatten()
    }

    /// Position of edge `e` (first occurrence), if it is on the walk.
    #[inline]
    pub fn edge_position(&self, e: EdgeId) -> Option<usize> {
        self.edge_position.get(&e).copied()
    }

    /// Whether `e` is on the walk.
    #[inline]
    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edge_position.contains_key(&e)
    }

    /// Boolean mask over `m` edge ids marking the walk's edges.
    pub fn edge_mask(&self, m: usize) -> Vec<bool> {
        let mut mask = vec![false; m];
        for &e in &self.edge_ids {
            mask[e] = true;
        }
        mask
    }

    /// The same walk traversed backwards in the reversed graph `rev`.
    pub fn reversed(&self, rev: &Graph) -> PathSeq {
        let edges = self.edge_ids.iter().rev().copied().collect();
        PathSeq::from_edges(rev, self.target(), edges).expect("reversed graph keeps edge ids")
    }
}

/// The designated shortest path `π(s, t)` in `view`.
pub fn shortest_path(view: &GraphView<'_>, s: VertexId, t: VertexId) -> Result<PathSeq> {
    shortest_path_preferring(view, s, t, None)
}

/// Like [`shortest_path`], but ties prefer edges of `prefer` (used to pick
/// replacement paths that hug the original path).
pub fn shortest_path_preferring(
    view: &GraphView<'_>,
    s: VertexId,
    t: VertexId,
    prefer: Option<&PathSeq>,
) -> Result<PathSeq> {
    let g = view.graph();
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    let mask = prefer.map(|p| p.edge_mask(g.m()));
    let tree = sssp_with(view, s, &SsspOptions { potentials: Some(g.potentials()), prefer: mask.as_deref() });
    let edges = tree.path_edges(g, t).ok_or(Error::Unreachable { s, t })?;
    PathSeq::from_edges(g, s, edges)
}
