use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::cases::MiddleCases;
use super::{enumerate_query_pairs, CaseTag, TwoFaultTable};
use crate::backwards_f::{compute_f_dp, FTable, OffPathApsp};
use crate::dso_one_fault::{build_one_off_aux, one_off_query, AuxOneOff, Dso, DsoMode};
use crate::graph_core::{shortest_path, Dist, EdgeId, GraphView, PathSeq, VertexId};
use crate::ssrp::replacement_paths_pair;
use crate::{Error, Result};

/// All precomputation of the cubic algorithm for one `(s, t)` pair.
#[derive(Clone, Debug)]
pub struct TwoFrpSolver<'g> {
    view: GraphView<'g>,
    path: PathSeq,
    apsp: OffPathApsp,
    f: FTable,
    cases: MiddleCases,
    aux: AuxOneOff,
    dso: Dso,
    singles: Vec<(EdgeId, Dist)>,
    pairs: Vec<(EdgeId, EdgeId)>,
    detours: BTreeMap<EdgeId, Option<PathSeq>>,
}

impl<'g> TwoFrpSolver<'g> {
    /// Finds `π(s, t)` and runs every precomputation step.
    pub fn new(view: &GraphView<'g>, s: VertexId, t: VertexId) -> Result<TwoFrpSolver<'g>> {
        let path = shortest_path(view, s, t)?;
        let singles = replacement_paths_pair(view, s, t)?;
        let (pairs, detours) = enumerate_query_pairs(view, &path);
        let apsp = OffPathApsp::build(view, &path);
        let f = compute_f_dp(&path, &apsp);
        let cases = MiddleCases::build(&path, &apsp, &f);
        let aux = build_one_off_aux(view, &path);
        let sources = (0..path.h().saturating_sub(1)).map(|i| (aux.a(i), alloc::vec![aux.b(i + 1)])).collect();
        let dso = Dso::build(&aux.graph.view(), DsoMode::Precomputed { sources });
        Ok(TwoFrpSolver { view: view.clone(), path, apsp, f, cases, aux, dso, singles, pairs, detours })
    }

    /// The designated path.
    pub fn path(&self) -> &PathSeq {
        &self.path
    }

    /// The backwards-distance table.
    pub fn f_table(&self) -> &FTable {
        &self.f
    }

    /// The enumerated pairs `(e1 ∈ π, e2 ∈ π_{G∖e1})`.
    pub fn pairs(&self) -> &[(EdgeId, EdgeId)] {
        &self.pairs
    }

    /// Answers every enumerated pair.
    pub fn table(&mut self) -> Result<TwoFaultTable> {
        let path = &self.path;
        let mut table = TwoFaultTable::new(path.source(), path.target(), path.clone(), Dist::finite(path.length()));
        table.single.extend(self.singles.iter().copied());
        for &(e1, e2) in &self.pairs {
            if table.contains(e1, e2) {
                continue;
            }
            let i = path.edge_position(e1).expect("first failure lies on the path");
            match path.edge_position(e2) {
                Some(j) => {
                    let (lo, hi) = (i.min(j), i.max(j));
                    let (avoid, uses) = (self.cases.avoid(lo, hi), self.cases.uses(lo, hi));
                    let (d, case) =
                        if avoid <= uses { (avoid, CaseTag::AvoidMiddle) } else { (uses, CaseTag::UsesMiddle) };
                    table.insert(e1, e2, d, case);
                    table.insert(e2, e1, d, case);
                }
                None => {
                    let d = one_off_query(&self.aux, &mut self.dso, i, e2)?;
                    table.insert(e1, e2, d, CaseTag::OneOff);
                }
            }
        }
        Ok(table)
    }

    /// A concrete `s`–`t` walk avoiding `e1` and `e2` whose length is the
    /// table entry, rebuilt from the witnesses of whichever case decided it.
    pub fn report(&mut self, table: &TwoFaultTable, e1: EdgeId, e2: EdgeId) -> Result<PathSeq> {
        let entry = table.resolve(e1, e2);
        if entry.d.is_inf() {
            return Err(Error::NoFiniteEntry { e1, e2 });
        }
        let path = &self.path;
        let pi = path.edge_ids();
        let on = |e: EdgeId| path.edge_position(e);
        let mut edges: Vec<EdgeId> = Vec::new();
        match entry.case {
            CaseTag::Trivial => edges.extend_from_slice(pi),
            CaseTag::SameAsSingleFault => {
                let e = if on(e1).is_some() { e1 } else { e2 };
                let detour = self.detours.get(&e).cloned().flatten().ok_or(Error::NoFiniteEntry { e1, e2 })?;
                edges.extend_from_slice(detour.edge_ids());
            }
            CaseTag::OneOff => {
                let (e_on, e_off) = if on(e1).is_some() { (e1, e2) } else { (e2, e1) };
                let i = on(e_on).expect("one failure is on the path");
                let fail = self.aux.to_aux(e_off).unwrap_or(usize::MAX);
                let (u, v) = (self.aux.a(i), self.aux.b(i + 1));
                let walk = self.dso.path(u, v, fail).ok_or(Error::NoFiniteEntry { e1, e2 })?;
                let g = &self.aux.graph;
                let first = walk.first().ok_or(Error::NoFiniteEntry { e1, e2 })?;
                let last = walk.last().expect("walk is non-empty");
                let x = path.position(g.edge(*first).head).expect("connectors end on the path");
                let y = path.position(g.edge(*last).tail).expect("connectors start on the path");
                edges.extend_from_slice(&pi[..x]);
                edges.extend(
                    walk[1..walk.len() - 1].iter().map(|&e| self.aux.from_aux(e).expect("inner edges are base edges")),
                );
                edges.extend_from_slice(&pi[y..]);
            }
            CaseTag::AvoidMiddle | CaseTag::UsesMiddle => {
                let (a, b) = (on(e1).expect("on path"), on(e2).expect("on path"));
                let (i, j) = (a.min(b), a.max(b));
                let off = |from: usize, to: usize| {
                    self.apsp.off_path_edges(from, path.vertex(to)).ok_or(Error::NoFiniteEntry { e1, e2 })
                };
                if entry.case == CaseTag::AvoidMiddle {
                    let w = self.cases.avoid_witness(i, j).ok_or(Error::NoFiniteEntry { e1, e2 })?;
                    edges.extend_from_slice(&pi[..w.x]);
                    edges.extend(off(w.x, w.y)?);
                    edges.extend_from_slice(&pi[w.y..]);
                } else {
                    let w = self.cases.uses_witness(i, j).ok_or(Error::NoFiniteEntry { e1, e2 })?;
                    edges.extend_from_slice(&pi[..w.x]);
                    edges.extend(off(w.x, w.y)?);
                    edges.extend_from_slice(&pi[w.y..w.k]);
                    if w.k2 < w.k {
                        let back =
                            self.f.path_edges(w.k, w.k2, &self.apsp, path).ok_or(Error::NoFiniteEntry { e1, e2 })?;
                        edges.extend(back);
                    }
                    edges.extend_from_slice(&pi[w.k2..w.x2]);
                    edges.extend(off(w.x2, w.y2)?);
                    edges.extend_from_slice(&pi[w.y2..]);
                }
            }
            other => return Err(Error::WrongCase(other.name())),
        }
        PathSeq::from_edges(self.view.graph(), path.source(), edges)
    }
}

/// The full two-fault table for `(s, t)`.
pub fn two_frp(view: &GraphView<'_>, s: VertexId, t: VertexId) -> Result<TwoFaultTable> {
    TwoFrpSolver::new(view, s, t)?.table()
}

/// A shortest `s`–`t` walk in `G ∖ {e1, e2}`.
pub fn report_path(view: &GraphView<'_>, s: VertexId, t: VertexId, e1: EdgeId, e2: EdgeId) -> Result<PathSeq> {
    let mut solver = TwoFrpSolver::new(view, s, t)?;
    let table = solver.table()?;
    solver.report(&table, e1, e2)
}
