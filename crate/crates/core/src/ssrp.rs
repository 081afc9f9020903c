//! Single-source replacement paths.
//!
//! The reference implementation reruns SSSP once per distinct tree edge that
//! lies on the tree path to some requested target.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph_core::{Dist, EdgeId, GraphView, SsspResult, VertexId};
use crate::{Error, Result};

/// Replacement distances `d_{G∖{e}}(s, t)` for targets `t ∈ T` and edges `e`
/// on the tree path from `s` to `t`.
#[derive(Clone, Debug)]
pub struct SsrpResult {
    /// The source.
    pub source: VertexId,
    /// Shortest-path tree from the source.
    pub tree: SsspResult,
    table: BTreeMap<(VertexId, EdgeId), Dist>,
    runs: usize,
}

impl SsrpResult {
    /// `d_{G∖{e}}(source, t)` when `e` is on the tree path to `t`.
    #[inline]
    pub fn get(&self, t: VertexId, e: EdgeId) -> Option<Dist> {
        self.table.get(&(t, e)).copied()
    }

    /// `d_{G∖{e}}(source, t)` for any `e`: the table entry when `e` is on
    /// the tree path, the unchanged distance otherwise. Only meaningful for
    /// targets that were requested.
    #[inline]
    pub fn dist_avoiding(&self, t: VertexId, e: EdgeId) -> Dist {
        self.get(t, e).unwrap_or(self.tree.dist[t])
    }

    /// `d_G(source, t)`.
    #[inline]
    pub fn dist(&self, t: VertexId) -> Dist {
        self.tree.dist[t]
    }

    /// All `((t, e), d)` entries in key order.
    pub fn entries(&self) -> impl Iterator<Item = ((VertexId, EdgeId), Dist)> + '_ {
        self.table.iter().map(|(k, d)| (*k, *d))
    }

    /// Number of SSSP runs spent on failures.
    #[inline]
    pub fn runs(&self) -> usize {
        self.runs
    }
}

/// SSRP from `s` restricted to the targets in `targets`.
pub fn ssrp_targets(view: &GraphView<'_>, s: VertexId, targets: &[VertexId]) -> SsrpResult {
    let g = view.graph();
    let tree = view.sssp(s);
    let mut affected: BTreeMap<EdgeId, Vec<VertexId>> = BTreeMap::new();
    for &t in targets {
        if let Some(edges) = tree.path_edges(g, t) {
            for e in edges {
                let list = affected.entry(e).or_default();
                if list.last() != Some(&t) {
                    list.push(t);
                }
            }
        }
    }
    let mut table = BTreeMap::new();
    for (&e, ts) in &affected {
        let masked = view.without([e]).expect("tree edges exist");
        let run = masked.sssp(s);
        for &t in ts {
            table.insert((t, e), run.dist[t]);
        }
    }
    SsrpResult { source: s, tree, runs: affected.len(), table }
}

/// `d(s, t, e)` for every edge `e` of the designated path `π(s, t)`, in path
/// order.
pub fn replacement_paths_pair(view: &GraphView<'_>, s: VertexId, t: VertexId) -> Result<Vec<(EdgeId, Dist)>> {
    let g = view.graph();
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    let r = ssrp_targets(view, s, &[t]);
    let path = r.tree.path_edges(g, t).ok_or(Error::Unreachable { s, t })?;
    Ok(path.into_iter().map(|e| (e, r.get(t, e).expect("path edges are tabulated"))).collect())
}
