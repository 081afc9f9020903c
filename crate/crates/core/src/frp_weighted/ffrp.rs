use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{two_frp, TwoFaultTable};
use crate::graph_core::{shortest_path, Dist, EdgeId, GraphView, PathSeq, VertexId};
use crate::{Error, Result};

/// Recursive `k`-fault table: at each level, one branch per edge of the
/// current shortest path, bottoming out in two-fault tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaultTree {
    /// `t` is unreachable from `s` in this branch.
    Unreachable,
    /// Two failures left.
    Leaf(TwoFaultTable),
    /// More than two failures left.
    Branch {
        /// Shortest `s`–`t` path of this branch.
        path: PathSeq,
        /// Subtree for the branch with each path edge removed.
        children: BTreeMap<EdgeId, FaultTree>,
    },
}

impl FaultTree {
    /// `d_{G∖F}(s, t)` for any set `F` of at most `k` edges.
    pub fn lookup(&self, faults: &[EdgeId]) -> Dist {
        match self {
            FaultTree::Unreachable => Dist::INF,
            FaultTree::Leaf(table) => match faults {
                [] => table.base,
                [e] => table.lookup_single(*e),
                [e1, e2] => table.lookup(*e1, *e2),
                _ => panic!("a two-fault table answers at most two failures"),
            },
            FaultTree::Branch { path, children } => {
                match faults.iter().position(|e| path.contains_edge(*e)) {
                    // The branch's path survives and is shortest in any
                    // subgraph that keeps it.
                    None => Dist::finite(path.length()),
                    Some(p) => {
                        let mut rest = faults.to_vec();
                        let e = rest.remove(p);
                        children[&e].lookup(&rest)
                    }
                }
            }
        }
    }

    /// Every computed tuple with its distance, in discovery order: branch
    /// edges in path order, then the two-fault pairs of the leaf.
    pub fn entries(&self) -> Vec<(Vec<EdgeId>, Dist)> {
        let mut out = Vec::new();
        self.collect(&mut Vec::new(), &mut out);
        out
    }

    fn collect(&self, prefix: &mut Vec<EdgeId>, out: &mut Vec<(Vec<EdgeId>, Dist)>) {
        match self {
            FaultTree::Unreachable => {}
            FaultTree::Leaf(table) => {
                for ((e1, e2), entry) in table.entries() {
                    let mut key = prefix.clone();
                    key.extend([e1, e2]);
                    out.push((key, entry.d));
                }
            }
            FaultTree::Branch { path, children } => {
                for e in path.edge_ids() {
                    prefix.push(*e);
                    children[e].collect(prefix, out);
                    prefix.pop();
                }
            }
        }
    }
}

/// `k`-fault replacement distances for `k ≥ 2`: branch on each edge of the
/// current shortest path `k − 2` times, then solve two-fault replacement
/// paths in each remaining subgraph.
pub fn f_frp(view: &GraphView<'_>, s: VertexId, t: VertexId, k: usize) -> Result<FaultTree> {
    if k < 2 {
        return Err(Error::BadParameter(alloc::format!("fault budget {k} is below 2")));
    }
    view.graph().check_vertex(s)?;
    view.graph().check_vertex(t)?;
    build(view, s, t, k)
}

fn build(view: &GraphView<'_>, s: VertexId, t: VertexId, k: usize) -> Result<FaultTree> {
    let path = match shortest_path(view, s, t) {
        Ok(p) => p,
        Err(Error::Unreachable { .. }) => return Ok(FaultTree::Unreachable),
        Err(e) => return Err(e),
    };
    if k == 2 {
        return Ok(FaultTree::Leaf(two_frp(view, s, t)?));
    }
    let mut children = BTreeMap::new();
    for &e in path.edge_ids() {
        let sub = view.without(vec![e])?;
        children.insert(e, build(&sub, s, t, k - 1)?);
    }
    Ok(FaultTree::Branch { path, children })
}
