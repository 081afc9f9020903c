use alloc::collections::{BinaryHeap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::dist::Dist;
use super::graph::Graph;
use super::view::GraphView;
use super::{EdgeId, VertexId};

/// Distances from one source and the shortest-path tree that realizes them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsspResult {
    /// The source vertex.
    pub source: VertexId,
    /// `dist[v]`; `INF` for unreachable vertices.
    pub dist: Vec<Dist>,
    /// Tree edge entering `v` (`None` for the source and unreachable vertices).
    pub parent_edge: Vec<Option<EdgeId>>,
}

impl SsspResult {
    /// Tree path edges from the source to `v`, in path order.
    pub fn path_edges(&self, g: &Graph, v: VertexId) -> Option<Vec<EdgeId>> {
        if self.dist[v].is_inf() {
            return None;
        }
        let mut edges = Vec::new();
        let mut x = v;
        while let Some(e) = self.parent_edge[x] {
            edges.push(e);
            x = g.edge(e).tail;
        }
        edges.reverse();
        Some(edges)
    }
}

/// Knobs for [`sssp_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct SsspOptions<'a> {
    /// Feasible potentials; `None` runs a label-correcting pass when the
    /// graph has negative edges and plain Dijkstra otherwise.
    pub potentials: Option<&'a [i64]>,
    /// Edge mask (indexed by edge id) preferred as tree parents on ties.
    pub prefer: Option<&'a [bool]>,
}

/// Single-source shortest paths on a view.
pub fn sssp(view: &GraphView<'_>, source: VertexId, potentials: Option<&[i64]>) -> SsspResult {
    sssp_with(view, source, &SsspOptions { potentials, prefer: None })
}

/// Single-source shortest paths with explicit options.
///
/// Ties between equally short parents go to a preferred edge first, then to
/// the smaller `(parent vertex, edge id)` pair.
pub fn sssp_with(view: &GraphView<'_>, source: VertexId, opts: &SsspOptions<'_>) -> SsspResult {
    match opts.potentials {
        Some(phi) => dijkstra(view, source, phi, opts.prefer),
        None if view.graph().has_negative_edges() => label_correcting(view, source),
        None => dijkstra(view, source, &vec![0; view.n()], opts.prefer),
    }
}

impl GraphView<'_> {
    /// Shortest paths from `source` using the base graph's potentials.
    pub fn sssp(&self, source: VertexId) -> SsspResult {
        dijkstra(self, source, self.graph().potentials(), None)
    }
}

fn dijkstra(view: &GraphView<'_>, source: VertexId, phi: &[i64], prefer: Option<&[bool]>) -> SsspResult {
    let g = view.graph();
    let n = g.n();
    let mut red = vec![i64::MAX; n];
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    red[source] = 0;
    heap.push(Reverse((0i64, source)));

    let preferred = |e: EdgeId| prefer.is_some_and(|p| p[e]);
    let better = |e: EdgeId, cur: Option<EdgeId>| match cur {
        None => true,
        Some(c) => match (preferred(e), preferred(c)) {
            (true, false) => true,
            (false, true) => false,
            _ => (g.edge(e).tail, e) < (g.edge(c).tail, c),
        },
    };

    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] || d > red[u] {
            continue;
        }
        done[u] = true;
        for e in view.out_edges(u) {
            let v = e.head;
            if done[v] {
                continue;
            }
            let w = e.weight + phi[u] - phi[v];
            debug_assert!(w >= 0, "infeasible potentials on edge {}", e.id);
            let nd = d + w;
            if nd < red[v] {
                red[v] = nd;
                parent[v] = Some(e.id);
                heap.push(Reverse((nd, v)));
            } else if nd == red[v] && better(e.id, parent[v]) {
                parent[v] = Some(e.id);
            }
        }
    }

    let dist = (0..n)
        .map(|v| if red[v] == i64::MAX { Dist::INF } else { Dist::finite(red[v] - phi[source] + phi[v]) })
        .collect();
    SsspResult { source, dist, parent_edge: parent }
}

fn label_correcting(view: &GraphView<'_>, source: VertexId) -> SsspResult {
    let n = view.n();
    let mut dist = vec![Dist::INF; n];
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    dist[source] = Dist::ZERO;
    queue.push_back(source);
    queued[source] = true;
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        for e in view.out_edges(u) {
            let nd = dist[u] + e.weight;
            let v = e.head;
            if nd < dist[v] {
                dist[v] = nd;
                parent[v] = Some(e.id);
                if !queued[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    SsspResult { source, dist, parent_edge: parent }
}
