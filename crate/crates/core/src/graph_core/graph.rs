use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use super::view::GraphView;
use super::{EdgeId, VertexId};
use crate::{Error, Result};

/// Largest admissible `|weight|`; keeps every simple-path sum far from
/// overflowing `i64`.
pub const MAX_ABS_WEIGHT: i64 = 1 << 40;

/// A directed, weighted edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    /// Dense edge id.
    pub id: EdgeId,
    /// Tail vertex.
    pub tail: VertexId,
    /// Head vertex.
    pub head: VertexId,
    /// Weight, `|weight| ≤ 2^40`.
    pub weight: i64,
}

/// A directed multigraph without negative cycles.
///
/// Construction certifies the absence of negative cycles and stores Johnson
/// potentials, which stay valid for every subgraph obtained by deleting
/// edges; all views therefore run Dijkstra on reweighted edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<EdgeId>>,
    in_adj: Vec<Vec<EdgeId>>,
    potentials: Vec<i64>,
    negative: bool,
}

impl Graph {
    /// Builds a graph from `(tail, head, weight)` triples; edge ids follow
    /// iteration order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId, i64)>) -> Result<Graph> {
        let mut g = Graph::unchecked(n, edges)?;
        g.potentials = johnson_potentials(&g)?;
        Ok(g)
    }

    /// Like [`Graph::new`], but first tries `hint` as the potential function.
    /// Falls back to Bellman–Ford when the hint is not feasible.
    pub fn with_potential_hint(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, i64)>,
        hint: Vec<i64>,
    ) -> Result<Graph> {
        let mut g = Graph::unchecked(n, edges)?;
        if hint.len() == n && g.potentials_feasible(&hint) {
            g.potentials = hint;
        } else {
            g.potentials = johnson_potentials(&g)?;
        }
        Ok(g)
    }

    fn unchecked(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId, i64)>) -> Result<Graph> {
        let mut list = Vec::new();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut negative = false;
        for (id, (tail, head, weight)) in edges.into_iter().enumerate() {
            for v in [tail, head] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if weight.abs() > MAX_ABS_WEIGHT {
                return Err(Error::WeightOutOfRange { weight, bound: MAX_ABS_WEIGHT });
            }
            negative |= weight < 0;
            out_adj[tail].push(id);
            in_adj[head].push(id);
            list.push(Edge { id, tail, head, weight });
        }
        Ok(Graph { n, edges: list, out_adj, in_adj, potentials: vec![0; n], negative })
    }

    fn potentials_feasible(&self, phi: &[i64]) -> bool {
        self.edges.iter().all(|e| e.weight + phi[e.tail] - phi[e.head] >= 0)
    }

    /// Vertex count.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// The edge with the given id. Panics on unknown ids.
    #[inline]
    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// All edges in id order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Ids of edges leaving `v`.
    #[inline]
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_adj[v]
    }

    /// Ids of edges entering `v`.
    #[inline]
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_adj[v]
    }

    /// Johnson potentials: `w + φ(tail) − φ(head) ≥ 0` for every edge.
    #[inline]
    pub fn potentials(&self) -> &[i64] {
        &self.potentials
    }

    /// Whether any edge weight is negative.
    #[inline]
    pub fn has_negative_edges(&self) -> bool {
        self.negative
    }

    /// Largest `|weight|` over all edges (0 for edgeless graphs).
    pub fn max_abs_weight(&self) -> i64 {
        self.edges.iter().map(|e| e.weight.abs()).max().unwrap_or(0)
    }

    /// The unmasked view.
    #[inline]
    pub fn view(&self) -> GraphView<'_> {
        GraphView::full(self)
    }

    /// Checks that `v` is a vertex.
    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

/// Johnson potentials by Bellman–Ford from a virtual source joined to every
/// vertex with weight 0.
///
/// Returns [`Error::NegativeCycle`] with the cycle's edges when one exists.
pub fn johnson_potentials(g: &Graph) -> Result<Vec<i64>> {
    let n = g.n();
    let mut phi = vec![0i64; n];
    if !g.has_negative_edges() {
        return Ok(phi);
    }
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    for _round in 0..=n {
        let mut changed = false;
        for e in g.edges() {
            let cand = phi[e.tail] + e.weight;
            if cand < phi[e.head] {
                phi[e.head] = cand;
                parent[e.head] = Some(e.id);
                changed = true;
            }
        }
        if !changed {
            return Ok(phi);
        }
    }
    // Relaxation never settles, so the parent graph contains a cycle, and
    // every such cycle is negative.
    Err(Error::NegativeCycle { cycle: parent_cycle(g, &parent).unwrap_or_default() })
}

fn parent_cycle(g: &Graph, parent: &[Option<EdgeId>]) -> Option<Vec<EdgeId>> {
    // 0 = unvisited, 1 = on the current walk, 2 = finished.
    let mut state = vec![0u8; g.n()];
    for start in 0..g.n() {
        let mut v = start;
        let mut walk = Vec::new();
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            match parent[v] {
                Some(e) => v = g.edge(e).tail,
                None => break,
            }
        }
        if state[v] == 1 && parent[v].is_some() {
            let mut cycle = Vec::new();
            let first = v;
            loop {
                let e = parent[v].expect("cycle vertices have parents");
                cycle.push(e);
                v = g.edge(e).tail;
                if v == first {
                    break;
                }
            }
            cycle.reverse();
            return Some(cycle);
        }
        for w in walk {
            state[w] = 2;
        }
    }
    None
}

/// Parses the edge-list format: a header line `n m`, then `m` lines
/// `tail head weight` (0-indexed vertices). Blank lines and lines starting
/// with `#` are ignored.
pub fn load_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header `n m`".into() })?;
    let nums = parse_fields::<usize>(hline, header, 2)?;
    let (n, m) = (nums[0], nums[1]);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, body) = lines.next().ok_or_else(|| Error::Parse {
            line: text.lines().count() + 1,
            msg: format!("expected {m} edges, found {}", edges.len()),
        })?;
        let f = parse_fields::<i64>(line, body, 3)?;
        let (u, v) = (f[0], f[1]);
        if u < 0 || v < 0 || u as usize >= n || v as usize >= n {
            return Err(Error::Parse { line, msg: format!("vertex out of range 0..{n}") });
        }
        if f[2].abs() > MAX_ABS_WEIGHT {
            return Err(Error::Parse { line, msg: format!("|weight| exceeds 2^40: {}", f[2]) });
        }
        edges.push((u as usize, v as usize, f[2]));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, msg: format!("trailing content after {m} edges") });
    }
    Graph::new(n, edges)
}

fn parse_fields<T: core::str::FromStr>(line: usize, body: &str, count: usize) -> Result<Vec<T>> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != count {
        return Err(Error::Parse { line, msg: format!("expected {count} fields, found {}", fields.len()) });
    }
    fields
        .iter()
        .map(|f| f.parse::<T>().map_err(|_| Error::Parse { line, msg: format!("not an integer: {f:?}") }))
        .collect()
}

/// Serializes a graph in the format read by [`load_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.tail, e.head, e.weight);
    }
    out
}
