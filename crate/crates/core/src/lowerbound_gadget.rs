//! The triangle-detection reduction to `k`-fault fixed-pair distance
//! queries, used as a self-checking instance generator.
//!
//! For a triangle instance on `n` vertices split into buckets of `L`, each
//! bucket `b` gets an unweighted digraph `G_b`: four blocks `Q, A, B, C`
//! wired after the adjacency of the instance (so a triangle through the
//! `u`-th vertex of the bucket is a length-3 walk `q_u → a → b → c_u`), plus
//! `k` layers of chunks whose inter-layer detours make the distance from
//! `s` to `q_w` strictly decreasing in `w` and from `c_w` to `t` strictly
//! increasing in `w`. Failing one chunk edge per layer, chosen by the
//! base-`𝓑` digits of `u`, leaves `q_u` as the closest reachable `Q`
//! vertex and `c_u` as the closest `C` vertex that still reaches `t`; the
//! replacement distance then hits a fixed value exactly when the `u`-th
//! bucket vertex lies on a triangle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::frp_bounded::BoundedDso;
use crate::frp_weighted::{f_frp, FaultTree};
use crate::graph_core::{Dist, EdgeId, Graph, VertexId};
use crate::oracle::brute_dist;
use crate::ssrp::replacement_paths_pair;
use crate::{Error, Result};

/// A simple undirected graph on `0..n` stored as an adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<bool>,
}

impl UndirectedGraph {
    /// The empty graph on `n` vertices.
    pub fn new(n: usize) -> UndirectedGraph {
        UndirectedGraph { n, adj: vec![false; n * n] }
    }

    /// Builds a graph from an edge list; self-loops are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<UndirectedGraph> {
        let mut g = UndirectedGraph::new(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Vertex count.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `{u, v}` (no-op for `u == v`).
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
        }
    }

    /// Whether `{u, v}` is an edge.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Edges `{u, v}` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }
}

/// Parameters of one gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetParams {
    /// Fault budget (number of layers).
    pub k: usize,
    /// Bucket size `L`.
    pub l: usize,
    /// Digit base `𝓑`, the least integer with `𝓑^k ≥ L`.
    pub base: usize,
    /// Bucket index.
    pub b: usize,
    /// Vertex count of the triangle instance.
    pub n: usize,
}

impl GadgetParams {
    /// Validates `k ≥ 1`, `L ≥ 1` and `b < ⌈n/L⌉`.
    pub fn new(n: usize, l: usize, k: usize, b: usize) -> Result<GadgetParams> {
        if k == 0 {
            return Err(Error::BadParameter(format!("fault budget must be at least 1, got {k}")));
        }
        if l == 0 {
            return Err(Error::BadParameter(format!("bucket size must be at least 1, got {l}")));
        }
        let buckets = bucket_count(n, l);
        if b >= buckets {
            return Err(Error::OutOfRange { value: b as u64, limit: buckets as u64 });
        }
        Ok(GadgetParams { k, l, base: digit_base(l, k)?, b, n })
    }

    /// Instance vertices covered by this bucket: `v_{bL} .. v_{min(n,(b+1)L)−1}`.
    pub fn bucket_range(&self) -> core::ops::Range<usize> {
        self.b * self.l..self.n.min((self.b + 1) * self.l)
    }
}

/// `⌈n / L⌉`.
pub fn bucket_count(n: usize, l: usize) -> usize {
    n.div_ceil(l)
}

/// The least `𝓑 ≥ 1` with `𝓑^k ≥ L`.
pub fn digit_base(l: usize, k: usize) -> Result<usize> {
    let k32 = u32::try_from(k).map_err(|_| Error::BadParameter(format!("fault budget {k} too large")))?;
    let mut base = 1usize;
    loop {
        match base.checked_pow(k32) {
            Some(p) if p >= l => return Ok(base),
            Some(_) => base += 1,
            None => return Ok(base),
        }
    }
}

fn power(base: usize, exp: usize) -> Result<usize> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| Error::BadParameter(format!("{base}^{exp} overflows")))
}

/// The `k` base-`𝓑` digits of `u`, most significant first.
pub fn phi(u: usize, base: usize, k: usize) -> Result<Vec<usize>> {
    let limit = power(base, k)?;
    if u >= limit || base == 0 {
        return Err(Error::OutOfRange { value: u as u64, limit: limit as u64 });
    }
    let mut digits = vec![0; k];
    let mut rest = u;
    for d in digits.iter_mut().rev() {
        *d = rest % base;
        rest /= base;
    }
    Ok(digits)
}

/// Inverse of [`phi`].
pub fn reconstruct(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

/// Predicted `d_{H_b}(s, q_w)`: `Σ_i (φ(w)_i + 2(𝓑^{k−i} − φ(w)_i 𝓑^{k−i−1}))`.
pub fn q_dist_formula(w: usize, k: usize, base: usize) -> Result<i64> {
    let digits = phi(w, base, k)?;
    let mut total = 0usize;
    for (i, &a) in digits.iter().enumerate() {
        total += a + 2 * (power(base, k - i)? - a * power(base, k - i - 1)?);
    }
    Ok(total as i64)
}

/// Predicted `d_{H_b}(c_w, t)`: `Σ_i (𝓑 − 1 − φ(w)_i + 2𝓑^{k−i−1}(φ(w)_i + 1))`.
pub fn c_dist_formula(w: usize, k: usize, base: usize) -> Result<i64> {
    let digits = phi(w, base, k)?;
    let mut total = 0usize;
    for (i, &a) in digits.iter().enumerate() {
        total += base - 1 - a + 2 * power(base, k - i - 1)? * (a + 1);
    }
    Ok(total as i64)
}

/// The replacement distance that signals a triangle:
/// `3 + Σ_{i<k} (2𝓑^{k−i} + 2𝓑^{k−i−1} + 𝓑 − 1)`.
pub fn expected_hit_length(k: usize, base: usize) -> i64 {
    let b = base as i64;
    3 + (0..k as u32).map(|i| 2 * b.pow(k as u32 - i) + 2 * b.pow(k as u32 - i - 1) + b - 1).sum::<i64>()
}

/// Vertex and edge registry of a built gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    /// Construction parameters.
    pub params: GadgetParams,
    /// `layers[i][j][s]` is `p_{i,j,s}`.
    pub layers: Vec<Vec<Vec<VertexId>>>,
    /// `q_0 .. q_{L−1}`.
    pub q: Vec<VertexId>,
    /// `a_0 .. a_{n−1}`.
    pub a: Vec<VertexId>,
    /// `b_0 .. b_{n−1}`.
    pub b: Vec<VertexId>,
    /// `c_0 .. c_{L−1}`.
    pub c: Vec<VertexId>,
    /// `p_{0,0,0}`.
    pub source: VertexId,
    /// `p_{0,0,𝓑}`.
    pub target: VertexId,
    /// Chunk edge `p_{i,j,s} → p_{i,j,s+1}` keyed by `(i, j, s)`.
    pub chunk_edges: BTreeMap<(usize, usize, usize), EdgeId>,
    /// Fresh vertices inside expanded long connections.
    pub internal: Vec<VertexId>,
    /// Edges between `Q`, `A`, `B` and `C` (absent from `H_b`).
    pub block_edges: Vec<EdgeId>,
    /// Total vertices.
    pub vertex_count: usize,
    /// Total edges.
    pub edge_count: usize,
}

impl GadgetLayout {
    /// `p_{i,j,s}`.
    pub fn p(&self, i: usize, j: usize, s: usize) -> VertexId {
        self.layers[i][j][s]
    }

    /// Edge mask of `G_b` that leaves `H_b` (block edges removed).
    pub fn backbone_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.edge_count];
        for &e in &self.block_edges {
            mask[e] = true;
        }
        mask
    }
}

struct Builder {
    n: usize,
    edges: Vec<(VertexId, VertexId, i64)>,
    internal: Vec<VertexId>,
}

impl Builder {
    fn vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        self.edges.push((u, v, 1));
        self.edges.len() - 1
    }

    /// A directed path of `len ≥ 1` unit edges through fresh vertices.
    fn long(&mut self, from: VertexId, to: VertexId, len: usize) {
        let mut prev = from;
        for _ in 1..len {
            let x = self.vertex();
            self.internal.push(x);
            self.edge(prev, x);
            prev = x;
        }
        self.edge(prev, to);
    }
}

/// Builds the unweighted gadget `G_b` for bucket `b`.
#[allow(clippy::needless_range_loop)] // `i`, `j` are instance vertices
pub fn build_gadget(g_tri: &UndirectedGraph, b: usize, l: usize, k: usize) -> Result<(Graph, GadgetLayout)> {
    let params = GadgetParams::new(g_tri.n(), l, k, b)?;
    let (n, base) = (g_tri.n(), params.base);
    let mut bld = Builder { n: 0, edges: Vec::new(), internal: Vec::new() };

    let mut layers = Vec::with_capacity(k);
    for i in 0..k {
        let chunks = (0..power(base, i)?).map(|_| (0..=base).map(|_| bld.vertex()).collect()).collect();
        layers.push(chunks);
    }
    let layers: Vec<Vec<Vec<VertexId>>> = layers;
    let q: Vec<VertexId> = (0..l).map(|_| bld.vertex()).collect();
    let a: Vec<VertexId> = (0..n).map(|_| bld.vertex()).collect();
    let bb: Vec<VertexId> = (0..n).map(|_| bld.vertex()).collect();
    let c: Vec<VertexId> = (0..l).map(|_| bld.vertex()).collect();

    let mut chunk_edges = BTreeMap::new();
    for (i, chunks) in layers.iter().enumerate() {
        for (j, chunk) in chunks.iter().enumerate() {
            for s in 0..base {
                let e = bld.edge(chunk[s], chunk[s + 1]);
                chunk_edges.insert((i, j, s), e);
            }
        }
    }
    for i in 0..k.saturating_sub(1) {
        let (down, up) = (power(base, k - i)?, power(base, k - i - 1)?);
        for j in 0..power(base, i)? {
            for s in 0..base {
                bld.long(layers[i][j][s], layers[i + 1][j * base + s][0], 2 * (down - s * up));
            }
            for s in 1..=base {
                bld.long(layers[i + 1][j * base + s - 1][base], layers[i][j][s], 2 * s * up);
            }
        }
    }
    for j in 0..power(base, k - 1)? {
        for s in 0..base {
            if j * base + s < l {
                bld.long(layers[k - 1][j][s], q[j * base + s], 2 * (base - s));
            }
        }
        for s in 1..=base {
            if j * base + s - 1 < l {
                bld.long(c[j * base + s - 1], layers[k - 1][j][s], 2 * s);
            }
        }
    }

    let mut block_edges = Vec::new();
    for v in params.bucket_range() {
        let i = v - params.b * l;
        for j in 0..n {
            if g_tri.has_edge(v, j) {
                block_edges.push(bld.edge(q[i], a[j]));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if g_tri.has_edge(i, j) {
                block_edges.push(bld.edge(a[i], bb[j]));
            }
        }
    }
    for i in 0..n {
        for v in params.bucket_range() {
            if g_tri.has_edge(i, v) {
                block_edges.push(bld.edge(bb[i], c[v - params.b * l]));
            }
        }
    }

    let (source, target) = (layers[0][0][0], layers[0][0][base]);
    let graph = Graph::new(bld.n, bld.edges.iter().copied())?;
    let layout = GadgetLayout {
        params,
        layers,
        q,
        a,
        b: bb,
        c,
        source,
        target,
        chunk_edges,
        internal: bld.internal,
        block_edges,
        vertex_count: graph.n(),
        edge_count: graph.m(),
    };
    Ok((graph, layout))
}

/// The `k` chunk edges failed by query `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultSet {
    /// Query index in `0..L`.
    pub u: usize,
    /// One chunk edge per layer, layer 0 first.
    pub edges: Vec<EdgeId>,
}

/// Chunk index in layer `i` on the `s → q_u` route: `Σ_{r<i} φ_r 𝓑^{i−1−r}`.
fn route_chunk(digits: &[usize], base: usize, i: usize) -> usize {
    reconstruct(&digits[..i], base)
}

/// The failure set `S_u`: in each layer `i`, the edge leaving slot
/// `φ(u)_i` of the chunk that the `s → q_u` route traverses.
pub fn fault_set(layout: &GadgetLayout, u: usize) -> Result<FaultSet> {
    let p = &layout.params;
    if u >= p.l {
        return Err(Error::OutOfRange { value: u as u64, limit: p.l as u64 });
    }
    let digits = phi(u, p.base, p.k)?;
    let edges = (0..p.k).map(|i| layout.chunk_edges[&(i, route_chunk(&digits, p.base, i), digits[i])]).collect();
    Ok(FaultSet { u, edges })
}

/// The layer and `Q` vertices that `s` still reaches in `H_b ∖ S_u`,
/// predicted from the digits of `u`, in ascending id order.
pub fn predicted_reachable_from_s(layout: &GadgetLayout, u: usize) -> Result<Vec<VertexId>> {
    let p = &layout.params;
    let digits = phi(u, p.base, p.k)?;
    let mut out = Vec::new();
    for (i, chunks) in layout.layers.iter().enumerate() {
        let route = route_chunk(&digits, p.base, i);
        for (j, chunk) in chunks.iter().enumerate() {
            for (w, &v) in chunk.iter().enumerate() {
                if j < route || (j == route && w <= digits[i]) {
                    out.push(v);
                }
            }
        }
    }
    out.extend(layout.q[..=u.min(p.l - 1)].iter().copied());
    out.sort_unstable();
    Ok(out)
}

/// Answers fixed-pair fault queries on gadgets.
pub trait FaultEngine {
    /// Per-gadget precomputation.
    type Prepared;

    /// Short display name.
    fn name(&self) -> &'static str;

    /// Precomputes for one gadget.
    fn prepare(&self, graph: &Graph, layout: &GadgetLayout) -> Result<Self::Prepared>;

    /// `d_{G_b ∖ F}(s, t)`.
    fn query(&self, prepared: &Self::Prepared, graph: &Graph, layout: &GadgetLayout, faults: &[EdgeId])
        -> Result<Dist>;
}

/// Bellman–Ford from scratch for every query.
#[derive(Clone, Copy, Debug, Default)]
pub struct BruteEngine;

impl FaultEngine for BruteEngine {
    type Prepared = ();

    fn name(&self) -> &'static str {
        "brute"
    }

    fn prepare(&self, _graph: &Graph, _layout: &GadgetLayout) -> Result<()> {
        Ok(())
    }

    fn query(&self, _: &(), graph: &Graph, layout: &GadgetLayout, faults: &[EdgeId]) -> Result<Dist> {
        Ok(brute_dist(&graph.view(), layout.source, layout.target, faults))
    }
}

/// The replacement-paths family: single-fault replacement paths for
/// `k = 1`, the two-fault table for `k = 2` and the recursive fault tree
/// beyond.
#[derive(Clone, Copy, Debug, Default)]
pub struct FfrpEngine;

/// Precomputation of [`FfrpEngine`].
#[derive(Clone, Debug)]
pub enum FfrpPrepared {
    /// `k = 1`: `d_G(s, t)` and `d_{G∖{e}}(s, t)` for path edges.
    Single {
        /// `d_G(s, t)`.
        base: Dist,
        /// Replacement distances for path edges.
        table: BTreeMap<EdgeId, Dist>,
    },
    /// `k ≥ 2`.
    Tree(FaultTree),
}

impl FaultEngine for FfrpEngine {
    type Prepared = FfrpPrepared;

    fn name(&self) -> &'static str {
        "ffrp"
    }

    fn prepare(&self, graph: &Graph, layout: &GadgetLayout) -> Result<FfrpPrepared> {
        let view = graph.view();
        let (s, t) = (layout.source, layout.target);
        if layout.params.k == 1 {
            let base = view.sssp(s).dist[t];
            let table = replacement_paths_pair(&view, s, t)?.into_iter().collect();
            Ok(FfrpPrepared::Single { base, table })
        } else {
            Ok(FfrpPrepared::Tree(f_frp(&view, s, t, layout.params.k)?))
        }
    }

    fn query(&self, prepared: &FfrpPrepared, _: &Graph, _: &GadgetLayout, faults: &[EdgeId]) -> Result<Dist> {
        Ok(match prepared {
            FfrpPrepared::Single { base, table } => {
                faults.iter().filter_map(|e| table.get(e)).copied().next().unwrap_or(*base)
            }
            FfrpPrepared::Tree(tree) => tree.lookup(faults),
        })
    }
}

/// The bounded-weight interval structure; answers at most two faults.
#[derive(Clone, Copy, Debug, Default)]
pub struct BoundedEngine {
    /// Interval size; `None` uses the default.
    pub g: Option<usize>,
}

impl FaultEngine for BoundedEngine {
    type Prepared = BoundedDso;

    fn name(&self) -> &'static str {
        "bounded"
    }

    fn prepare(&self, graph: &Graph, layout: &GadgetLayout) -> Result<BoundedDso> {
        if layout.params.k > 2 {
            return Err(Error::BadParameter(format!(
                "the bounded structure answers at most two faults, got k = {}",
                layout.params.k
            )));
        }
        let g = self.g.unwrap_or_else(|| crate::frp_bounded::default_interval_size(graph.n()));
        BoundedDso::precompute(&graph.view(), layout.source, layout.target, g)
    }

    fn query(&self, dso: &BoundedDso, _: &Graph, _: &GadgetLayout, faults: &[EdgeId]) -> Result<Dist> {
        match *faults {
            [] => Ok(dso.base()),
            [e] => Ok(dso.single(e)),
            [e1, e2] => Ok(dso.query(e1, e2)),
            _ => Err(Error::BadParameter(format!("{} faults exceed the budget of two", faults.len()))),
        }
    }
}

/// Per-vertex verdicts of the reduction: entry `v` is `true` iff the query
/// for `v`'s bucket position returned [`expected_hit_length`].
pub fn triangle_vertices_via_queries<E: FaultEngine>(
    g_tri: &UndirectedGraph,
    k: usize,
    l: usize,
    engine: &E,
) -> Result<Vec<bool>> {
    let mut on = vec![false; g_tri.n()];
    for_each_query(g_tri, k, l, engine, |v, hit| {
        on[v] = hit;
        true
    })?;
    Ok(on)
}

/// Whether `g_tri` has a triangle, decided by `k`-fault queries on the
/// gadgets; stops at the first hit.
pub fn triangle_detect_via_queries<E: FaultEngine>(
    g_tri: &UndirectedGraph,
    k: usize,
    l: usize,
    engine: &E,
) -> Result<bool> {
    let mut found = false;
    for_each_query(g_tri, k, l, engine, |_, hit| {
        found |= hit;
        !hit
    })?;
    Ok(found)
}

fn for_each_query<E: FaultEngine>(
    g_tri: &UndirectedGraph,
    k: usize,
    l: usize,
    engine: &E,
    mut visit: impl FnMut(usize, bool) -> bool,
) -> Result<()> {
    if l == 0 {
        return Err(Error::BadParameter(format!("bucket size must be at least 1, got {l}")));
    }
    for b in 0..bucket_count(g_tri.n(), l) {
        let (graph, layout) = build_gadget(g_tri, b, l, k)?;
        let expected = Dist::finite(expected_hit_length(k, layout.params.base));
        let prepared = engine.prepare(&graph, &layout)?;
        for v in layout.params.bucket_range() {
            let faults = fault_set(&layout, v - b * l)?;
            let d = engine.query(&prepared, &graph, &layout, &faults.edges)?;
            if !visit(v, d == expected) {
                return Ok(());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_examples() {
        assert_eq!(phi(0, 3, 2).unwrap(), vec![0, 0]);
        assert_eq!(phi(5, 3, 2).unwrap(), vec![1, 2]);
        assert!(phi(9, 3, 2).is_err());
        assert_eq!(digit_base(4, 2).unwrap(), 2);
        assert_eq!(digit_base(5, 2).unwrap(), 3);
        assert_eq!(digit_base(1, 3).unwrap(), 1);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(expected_hit_length(2, 2), 23);
        assert_eq!(expected_hit_length(2, 3), 39);
        assert_eq!(q_dist_formula(0, 2, 2).unwrap(), 12);
        assert_eq!(q_dist_formula(3, 2, 2).unwrap(), 8);
        assert_eq!(c_dist_formula(0, 2, 2).unwrap(), 8);
        assert_eq!(c_dist_formula(3, 2, 2).unwrap(), 12);
    }
}
