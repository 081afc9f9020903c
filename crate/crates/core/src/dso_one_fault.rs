//! Single-fault distance sensitivity oracle and the auxiliary graph that
//! reduces "one failure on π, one off π" to single-fault queries.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph_core::{Dist, EdgeId, Graph, GraphView, PathSeq, SsspResult, VertexId};
use crate::ssrp::{ssrp_targets, SsrpResult};
use crate::{Error, Result};

/// How a [`Dso`] obtains its answers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DsoMode {
    /// One memoized SSSP per distinct `(source, failed edge)` actually
    /// needed.
    Lazy,
    /// SSRP tables for the listed `(source, targets)`; other queries fall
    /// back to the lazy path.
    Precomputed {
        /// Sources with their target sets.
        sources: Vec<(VertexId, Vec<VertexId>)>,
    },
}

/// Exact answers to `d_{H∖{e}}(u, v)`.
///
/// Lazy queries take `&mut self`; wrap the oracle in a lock to share it
/// between threads. [`Dso::try_query`] only reads.
#[derive(Clone, Debug)]
pub struct Dso {
    graph: Graph,
    mask: Vec<bool>,
    trees: BTreeMap<VertexId, SsspResult>,
    memo: BTreeMap<(VertexId, EdgeId), SsspResult>,
    pre: BTreeMap<VertexId, SsrpResult>,
}

impl Dso {
    /// Prepares an oracle over `h`.
    pub fn build(h: &GraphView<'_>, mode: DsoMode) -> Dso {
        let mut dso = Dso {
            graph: h.graph().clone(),
            mask: h.mask().to_vec(),
            trees: BTreeMap::new(),
            memo: BTreeMap::new(),
            pre: BTreeMap::new(),
        };
        if let DsoMode::Precomputed { sources } = mode {
            for (u, targets) in sources {
                let r = ssrp_targets(&dso.view(), u, &targets);
                dso.pre.insert(u, r);
            }
        }
        dso
    }

    /// The base graph `H` (before masking).
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn view(&self) -> GraphView<'_> {
        GraphView::with_mask(&self.graph, &self.mask)
    }

    fn present(&self, e: EdgeId) -> bool {
        e < self.graph.m() && self.view().contains(e)
    }

    fn on_tree_path(&self, tree: &SsspResult, v: VertexId, e: EdgeId) -> bool {
        let mut x = v;
        while let Some(p) = tree.parent_edge[x] {
            if p == e {
                return true;
            }
            x = self.graph.edge(p).tail;
        }
        false
    }

    /// Number of SSSP runs spent on lazy failures so far.
    pub fn lazy_runs(&self) -> usize {
        self.memo.len()
    }

    /// `d_{H∖{e}}(u, v)` using only precomputed or memoized data.
    pub fn try_query(&self, u: VertexId, v: VertexId, e: EdgeId) -> Option<Dist> {
        if let Some(r) = self.pre.get(&u) {
            if !self.present(e) {
                return Some(r.dist(v));
            }
            if let Some(d) = r.get(v, e) {
                return Some(d);
            }
            if !self.on_tree_path(&r.tree, v, e) {
                return Some(r.dist(v));
            }
        }
        let tree = self.trees.get(&u)?;
        if !self.present(e) || !self.on_tree_path(tree, v, e) {
            return Some(tree.dist[v]);
        }
        self.memo.get(&(u, e)).map(|r| r.dist[v])
    }

    /// `d_{H∖{e}}(u, v)`.
    pub fn query(&mut self, u: VertexId, v: VertexId, e: EdgeId) -> Dist {
        if let Some(d) = self.try_query(u, v, e) {
            return d;
        }
        self.ensure(u, e);
        self.try_query(u, v, e).expect("tables are populated")
    }

    fn ensure(&mut self, u: VertexId, e: EdgeId) {
        if !self.trees.contains_key(&u) {
            let tree = self.view().sssp(u);
            self.trees.insert(u, tree);
        }
        if self.present(e) && !self.memo.contains_key(&(u, e)) {
            let run = self.view().without([e]).expect("edge exists").sssp(u);
            self.memo.insert((u, e), run);
        }
    }

    /// A shortest `u → v` path in `H ∖ {e}` as edge ids, if one exists.
    pub fn path(&mut self, u: VertexId, v: VertexId, e: EdgeId) -> Option<Vec<EdgeId>> {
        self.ensure(u, e);
        let tree = &self.trees[&u];
        if !self.present(e) || !self.on_tree_path(tree, v, e) {
            return tree.path_edges(&self.graph, v);
        }
        self.memo[&(u, e)].path_edges(&self.graph, v)
    }
}

/// The auxiliary graph `G′`: `G` without the edges of `π`, plus source-side
/// vertices `a_0..a_{h−1}` and target-side vertices `b_0..b_{h−1}`.
///
/// `a_j → p_i` (for `i ≤ j`) has weight `d_G(s, p_i)`, `p_j → b_i` (for
/// `j ≥ i`) has weight `d_G(p_j, t)`. Then
/// `d_{G∖{e1,e2}}(s, t) = d_{G′∖{e2}}(a_i, b_{i+1})` whenever
/// `e1 = (p_i, p_{i+1})` and `e2 ∉ π`.
#[derive(Clone, Debug)]
pub struct AuxOneOff {
    /// `G′`.
    pub graph: Graph,
    /// The designated path of the base graph.
    pub path: PathSeq,
    base_n: usize,
    to_aux: Vec<Option<EdgeId>>,
    from_aux: Vec<Option<EdgeId>>,
}

impl AuxOneOff {
    /// Vertex `a_j`.
    #[inline]
    pub fn a(&self, j: usize) -> VertexId {
        self.base_n + j
    }

    /// Vertex `b_i`.
    #[inline]
    pub fn b(&self, i: usize) -> VertexId {
        self.base_n + self.path.h() + i
    }

    /// Id in `G′` of base edge `e` (absent for path edges and masked edges).
    #[inline]
    pub fn to_aux(&self, e: EdgeId) -> Option<EdgeId> {
        self.to_aux.get(e).copied().flatten()
    }

    /// Base id of `G′` edge `e` (absent for the `a`/`b` connectors).
    #[inline]
    pub fn from_aux(&self, e: EdgeId) -> Option<EdgeId> {
        self.from_aux.get(e).copied().flatten()
    }

    /// Vertex count of the base graph.
    #[inline]
    pub fn base_n(&self) -> usize {
        self.base_n
    }
}

/// Builds `G′` for the view `g` and its designated path.
#[allow(clippy::needless_range_loop)] // `i`, `j` are path positions, not just indices
pub fn build_one_off_aux(g: &GraphView<'_>, path: &PathSeq) -> AuxOneOff {
    let base = g.graph();
    let n = base.n();
    let h = path.h();
    let pre = path.prefix_dist();
    let total = path.length();
    let phi = base.potentials();

    let mut edges = Vec::new();
    let mut to_aux = alloc::vec![None; base.m()];
    let mut from_aux = Vec::new();
    for e in g.edges() {
        if path.contains_edge(e.id) {
            continue;
        }
        to_aux[e.id] = Some(edges.len());
        from_aux.push(Some(e.id));
        edges.push((e.tail, e.head, e.weight));
    }
    for j in 0..h {
        for i in 0..=j {
            edges.push((n + j, path.vertex(i), pre[i]));
            from_aux.push(None);
        }
    }
    for j in 0..h {
        for i in 0..=j {
            edges.push((path.vertex(j), n + h + i, total - pre[j]));
            from_aux.push(None);
        }
    }

    // a-vertices only emit and b-vertices only absorb, so potentials
    // extend by taking the extreme feasible value.
    let mut hint: Vec<i64> = phi.to_vec();
    let a_phi = (0..h).map(|i| phi[path.vertex(i)] - pre[i]).max().unwrap_or(0);
    let b_phi = (0..h).map(|j| phi[path.vertex(j)] + total - pre[j]).min().unwrap_or(0);
    hint.extend(core::iter::repeat_n(a_phi, h));
    hint.extend(core::iter::repeat_n(b_phi, h));

    let graph = Graph::with_potential_hint(n + 2 * h, edges, hint).expect("auxiliary weights are path lengths");
    AuxOneOff { graph, path: path.clone(), base_n: n, to_aux, from_aux }
}

/// `d_{G∖{e1,e2}}(s, t)` for `e1 = (p_i, p_{i+1})` and base edge `e2 ∉ π`,
/// via `dso` (built over `aux.graph`).
pub fn one_off_query(aux: &AuxOneOff, dso: &mut Dso, i: usize, e2: EdgeId) -> Result<Dist> {
    if aux.path.contains_edge(e2) {
        return Err(Error::E2OnPath(e2));
    }
    if i + 1 >= aux.path.h() {
        return Err(Error::OutOfRange { value: i as u64, limit: aux.path.h().saturating_sub(1) as u64 });
    }
    let (u, v) = (aux.a(i), aux.b(i + 1));
    Ok(match aux.to_aux(e2) {
        Some(e) => dso.query(u, v, e),
        // Not part of G′ at all (masked in the base view): nothing to fail.
        None => dso.query(u, v, usize::MAX),
    })
}
