//! Brute-force references.
//!
//! Everything here recomputes distances from scratch with a plain
//! Bellman–Ford sweep over the edge list on the masked graph, one query at a
//! time. None of it shares code with the algorithms it checks; only the
//! designated-path choice (which fixes *which* pairs are asked about) comes
//! from [`graph_core`](crate::graph_core).

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::backwards_f::FTable;
use crate::frp_weighted::{CaseTag, TwoFaultTable};
use crate::graph_core::{shortest_path, shortest_path_preferring, Dist, EdgeId, GraphView, PathSeq, VertexId};
use crate::lowerbound_gadget::UndirectedGraph;
use crate::{Error, Result};

/// Scale cap and seed for generated test suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteConfig {
    /// Largest vertex count a brute-force sweep is run on (≤ 256).
    pub max_n: usize,
    /// Seed for the instance generators.
    pub seed: u64,
}

impl Default for BruteConfig {
    fn default() -> Self {
        BruteConfig { max_n: 40, seed: 0 }
    }
}

impl BruteConfig {
    /// Validates the desk-scale cap.
    pub fn new(max_n: usize, seed: u64) -> Result<BruteConfig> {
        if max_n > 256 {
            return Err(Error::BadParameter(alloc::format!("max_n = {max_n} exceeds 256")));
        }
        Ok(BruteConfig { max_n, seed })
    }
}

fn removed_mask(view: &GraphView<'_>, removed: &[EdgeId]) -> Vec<bool> {
    let g = view.graph();
    let mut mask: Vec<bool> = (0..g.m()).map(|e| !view.contains(e)).collect();
    for &e in removed {
        if e < mask.len() {
            mask[e] = true;
        }
    }
    mask
}

fn bellman_ford(view: &GraphView<'_>, mask: &[bool], s: VertexId, max_edges: usize) -> Vec<Dist> {
    let g = view.graph();
    let mut dist = vec![Dist::INF; g.n()];
    dist[s] = Dist::ZERO;
    // Jacobi-style rounds: after round k, dist[v] is the best walk with at
    // most k edges.
    for _ in 0..max_edges {
        let mut next = dist.clone();
        let mut changed = false;
        for e in g.edges() {
            if mask[e.id] {
                continue;
            }
            let cand = dist[e.tail] + e.weight;
            if cand < next[e.head] {
                next[e.head] = cand;
                changed = true;
            }
        }
        dist = next;
        if !changed {
            break;
        }
    }
    dist
}

/// Distances from `s` in `view` minus `removed`.
pub fn brute_sssp(view: &GraphView<'_>, s: VertexId, removed: &[EdgeId]) -> Vec<Dist> {
    let mask = removed_mask(view, removed);
    bellman_ford(view, &mask, s, view.n().saturating_sub(1))
}

/// `d_{view ∖ removed}(s, t)`.
pub fn brute_dist(view: &GraphView<'_>, s: VertexId, t: VertexId, removed: &[EdgeId]) -> Dist {
    brute_sssp(view, s, removed)[t]
}

/// Exact two-fault table over the pairs `e1 ∈ π(s,t)`, `e2 ∈ π_{G∖e1}(s,t)`,
/// closed under swapping when both edges lie on `π`.
pub fn brute_two_fault_table(view: &GraphView<'_>, s: VertexId, t: VertexId) -> Result<TwoFaultTable> {
    let path = shortest_path(view, s, t)?;
    let mut table = TwoFaultTable::new(s, t, path.clone(), Dist::finite(path.length()));
    for &e1 in path.edge_ids() {
        table.single.insert(e1, brute_dist(view, s, t, &[e1]));
        let masked = view.without([e1])?;
        let Ok(detour) = shortest_path_preferring(&masked, s, t, Some(&path)) else {
            continue;
        };
        for &e2 in detour.edge_ids() {
            let d = brute_dist(view, s, t, &[e1, e2]);
            table.insert(e1, e2, d, CaseTag::Oracle);
            if path.contains_edge(e2) {
                table.insert(e2, e1, d, CaseTag::Oracle);
            }
        }
    }
    Ok(table)
}

fn f_mask(view: &GraphView<'_>, path: &PathSeq, j: usize, i: usize) -> Vec<bool> {
    // Forbid π's edges before p_i and from p_j onwards.
    let edges = path.edge_ids();
    let forbidden: Vec<EdgeId> = edges[..i].iter().chain(&edges[j..]).copied().collect();
    removed_mask(view, &forbidden)
}

/// `f(p_j, p_i)` for all `j > i` by one masked search per pair.
pub fn brute_f_table(view: &GraphView<'_>, path: &PathSeq) -> FTable {
    brute_hop_bounded_f(view, path, view.n().max(1))
}

/// Best walk with at most `ell` vertices from `p_j` to `p_i` in the masked
/// graph of `f(p_j, p_i)`, for all `j > i`.
pub fn brute_hop_bounded_f(view: &GraphView<'_>, path: &PathSeq, ell: usize) -> FTable {
    let h = path.h();
    let mut values = vec![Dist::INF; h * h];
    for j in 0..h {
        for i in 0..j {
            let mask = f_mask(view, path, j, i);
            values[j * h + i] = bellman_ford(view, &mask, path.vertex(j), ell.saturating_sub(1))[path.vertex(i)];
        }
    }
    FTable::from_values(h, values)
}

/// For each `j > i` with finite `f(p_j, p_i)`: the fewest vertices on a
/// shortest masked path (`h × h`, row-major; `None` when infinite).
pub fn brute_f_min_vertices(view: &GraphView<'_>, path: &PathSeq) -> Vec<Option<usize>> {
    let h = path.h();
    let n = view.n();
    let mut out = vec![None; h * h];
    for j in 0..h {
        for i in 0..j {
            let mask = f_mask(view, path, j, i);
            let target = path.vertex(i);
            let exact = bellman_ford(view, &mask, path.vertex(j), n.saturating_sub(1))[target];
            if exact.is_inf() {
                continue;
            }
            out[j * h + i] =
                (1..n).find(|&k| bellman_ford(view, &mask, path.vertex(j), k)[target] == exact).map(|k| k + 1);
        }
    }
    out
}

/// Unit-length BFS distances from `s`, ignoring weights.
pub fn bfs(view: &GraphView<'_>, s: VertexId) -> Vec<Option<usize>> {
    bfs_dir(view, s, true)
}

/// Unit-length BFS distances *to* `t`, ignoring weights.
pub fn bfs_to(view: &GraphView<'_>, t: VertexId) -> Vec<Option<usize>> {
    bfs_dir(view, t, false)
}

fn bfs_dir(view: &GraphView<'_>, root: VertexId, forward: bool) -> Vec<Option<usize>> {
    let g = view.graph();
    let mut dist = vec![None; g.n()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices are labeled");
        let ids = if forward { g.out_edges(u) } else { g.in_edges(u) };
        for &e in ids {
            if !view.contains(e) {
                continue;
            }
            let edge = g.edge(e);
            let v = if forward { edge.head } else { edge.tail };
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Which vertices lie on a triangle, by checking every triple.
pub fn brute_triangle_vertices(g: &UndirectedGraph) -> Vec<bool> {
    let n = g.n();
    let mut on = vec![false; n];
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    on[a] = true;
                    on[b] = true;
                    on[c] = true;
                }
            }
        }
    }
    on
}

/// Per-pair brute distances for arbitrary failure sets, keyed by the set.
pub fn brute_fault_sets(
    view: &GraphView<'_>,
    s: VertexId,
    t: VertexId,
    sets: &[Vec<EdgeId>],
) -> BTreeMap<Vec<EdgeId>, Dist> {
    sets.iter().map(|f| (f.clone(), brute_dist(view, s, t, f))).collect()
}

/// Seeded instance generators.
pub mod gen {
    use alloc::vec::Vec;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use crate::graph_core::{Graph, VertexId};
    use crate::lowerbound_gadget::UndirectedGraph;

    /// The generator used throughout the test suites.
    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Random digraph: each ordered pair `(u, v)`, `u ≠ v`, is an edge with
    /// probability `p`; weights lie in `[lo, hi]`.
    ///
    /// Weights are drawn above a hidden potential difference
    /// (`w ≥ φ(u) − φ(v)`), so every cycle has non-negative weight while
    /// individual edges may still be negative. Pairs whose admissible range
    /// is empty get no edge.
    pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64, lo: i64, hi: i64) -> Graph {
        assert!(lo <= hi, "empty weight range");
        let spread = (-lo).max(0);
        let phi: Vec<i64> = (0..n).map(|_| rng.random_range(0..=spread)).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u == v || !rng.random_bool(p) {
                    continue;
                }
                let floor = lo.max(phi[u] - phi[v]);
                if floor > hi {
                    continue;
                }
                edges.push((u, v, rng.random_range(floor..=hi)));
            }
        }
        let hint = phi.iter().map(|x| -x).collect();
        Graph::with_potential_hint(n, edges, hint).expect("potential-shifted weights admit no negative cycle")
    }

    /// A random instance with `s = 0` and `t` the reachable vertex whose
    /// shortest path has the most edges (ties to the larger id). Returns
    /// `None` when `s` reaches nothing.
    pub fn random_instance(
        rng: &mut impl Rng,
        n: usize,
        p: f64,
        lo: i64,
        hi: i64,
    ) -> Option<(Graph, VertexId, VertexId)> {
        let g = random_digraph(rng, n, p, lo, hi);
        let t = farthest_by_hops(&g, 0)?;
        Some((g, 0, t))
    }

    /// The reachable vertex (other than `s`) with the most tree edges on its
    /// designated shortest path.
    pub fn farthest_by_hops(g: &Graph, s: VertexId) -> Option<VertexId> {
        let tree = g.view().sssp(s);
        (0..g.n())
            .filter(|&v| v != s && tree.dist[v].is_finite())
            .max_by_key(|&v| (tree.path_edges(g, v).map_or(0, |p| p.len()), v))
    }

    /// Erdős–Rényi undirected graph.
    pub fn random_undirected(rng: &mut impl Rng, n: usize, p: f64) -> UndirectedGraph {
        let mut g = UndirectedGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}
