use alloc::borrow::Cow;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{Edge, Graph};
use super::{EdgeId, VertexId};
use crate::{Error, Result};

/// A graph with a set of edges masked out. Edge ids are those of the base
/// graph.
#[derive(Clone, Debug)]
pub struct GraphView<'g> {
    graph: &'g Graph,
    // Empty means "nothing removed".
    removed: Cow<'g, [bool]>,
}

/// Masks `removed` out of `g`.
pub fn mask_edges<'g>(g: &'g Graph, removed: impl IntoIterator<Item = EdgeId>) -> Result<GraphView<'g>> {
    GraphView::full(g).without(removed)
}

impl<'g> GraphView<'g> {
    /// The unmasked view of `graph`.
    pub fn full(graph: &'g Graph) -> Self {
        GraphView { graph, removed: Cow::Borrowed(&[]) }
    }

    /// A view over `graph` with the edges flagged in `mask` removed.
    pub fn with_mask(graph: &'g Graph, mask: &'g [bool]) -> Self {
        debug_assert!(mask.is_empty() || mask.len() == graph.m());
        GraphView { graph, removed: Cow::Borrowed(mask) }
    }

    /// The removal mask (empty when nothing is removed).
    pub fn mask(&self) -> &[bool] {
        &self.removed
    }

    /// The base graph.
    #[inline]
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Vertex count of the base graph.
    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Whether edge `e` is present (not masked).
    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.removed.is_empty() || !self.removed[e]
    }

    /// This view with `extra` edges also removed.
    pub fn without(&self, extra: impl IntoIterator<Item = EdgeId>) -> Result<GraphView<'g>> {
        let m = self.graph.m();
        let mut mask: Vec<bool> = if self.removed.is_empty() { vec![false; m] } else { self.removed.to_vec() };
        for e in extra {
            if e >= m {
                return Err(Error::UnknownEdgeId(e));
            }
            mask[e] = true;
        }
        Ok(GraphView { graph: self.graph, removed: Cow::Owned(mask) })
    }

    /// The same mask applied to another graph with identical edge ids
    /// (typically the reversed graph).
    pub fn transplant<'h>(&self, other: &'h Graph) -> GraphView<'h> {
        debug_assert_eq!(other.m(), self.graph.m());
        GraphView { graph: other, removed: Cow::Owned(self.removed.to_vec()) }
    }

    /// Ids of masked edges, ascending.
    pub fn removed_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.removed.iter().enumerate().filter(|(_, r)| **r).map(|(e, _)| e)
    }

    /// Present edges leaving `v`.
    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = &'g Edge> + '_ {
        let g = self.graph;
        g.out_edges(v).iter().filter(move |e| self.contains(**e)).map(move |e| g.edge(*e))
    }

    /// Present edges entering `v`.
    pub fn in_edges(&self, v: VertexId) -> impl Iterator<Item = &'g Edge> + '_ {
        let g = self.graph;
        g.in_edges(v).iter().filter(move |e| self.contains(**e)).map(move |e| g.edge(*e))
    }

    /// All present edges in id order.
    pub fn edges(&self) -> impl Iterator<Item = &'g Edge> + '_ {
        self.graph.edges().iter().filter(move |e| self.contains(e.id))
    }
}

impl<'g> From<&'g Graph> for GraphView<'g> {
    fn from(g: &'g Graph) -> Self {
        GraphView::full(g)
    }
}
