//! Two-fault replacement paths for arbitrary integer weights in `O(n³)`
//! time, the `k`-fault recursion on top of it, and path reporting.
//!
//! For the designated shortest path `π = p_0 … p_{h−1}` from `s` to `t`,
//! the pairs of interest are `e1 ∈ π` and `e2 ∈ π_{G∖e1}(s, t)`; every other
//! pair has the same answer as a single failure (or no failure at all).
//! Pairs with `e2 ∉ π` go through the single-fault oracle on an auxiliary
//! graph; pairs with both edges on `π` take the better of two structured
//! solvers — paths avoiding the part of `π` between the failures, and paths
//! that come back to it.

mod cases;
mod ffrp;
mod solver;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::graph_core::{shortest_path_preferring, Dist, EdgeId, GraphView, PathSeq, VertexId};

pub use cases::{solve_avoid_middle, solve_uses_middle, AvoidMiddleWitness, MiddleCases, UsesMiddleWitness};
pub use ffrp::{f_frp, FaultTree};
pub use solver::{report_path, two_frp, TwoFrpSolver};

/// Which computation produced a table entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    /// One failure on `π`, the other off it (single-fault oracle).
    OneOff,
    /// Both on `π`; the path avoids `π` between them.
    AvoidMiddle,
    /// Both on `π`; the path returns to `π` between them.
    UsesMiddle,
    /// The second failure is not on the single-fault replacement path.
    SameAsSingleFault,
    /// Neither failure is on `π`.
    Trivial,
    /// Bounded-weight structure: both failures in one interval.
    SameInterval,
    /// Bounded-weight structure: different intervals, forward construction.
    DiffIntervalsGood,
    /// Bounded-weight structure: different intervals, mirrored construction.
    DiffIntervalsReverse,
    /// Brute-force reference.
    Oracle,
}

impl CaseTag {
    /// Stable name used in serialized tables.
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::OneOff => "OneOff",
            CaseTag::AvoidMiddle => "AvoidMiddle",
            CaseTag::UsesMiddle => "UsesMiddle",
            CaseTag::SameAsSingleFault => "SameAsSingleFault",
            CaseTag::Trivial => "Trivial",
            CaseTag::SameInterval => "SameInterval",
            CaseTag::DiffIntervalsGood => "DiffIntervals(Good)",
            CaseTag::DiffIntervalsReverse => "DiffIntervals(Reverse)",
            CaseTag::Oracle => "Oracle",
        }
    }

    /// Inverse of [`CaseTag::name`].
    pub fn from_name(name: &str) -> Option<CaseTag> {
        [
            CaseTag::OneOff,
            CaseTag::AvoidMiddle,
            CaseTag::UsesMiddle,
            CaseTag::SameAsSingleFault,
            CaseTag::Trivial,
            CaseTag::SameInterval,
            CaseTag::DiffIntervalsGood,
            CaseTag::DiffIntervalsReverse,
            CaseTag::Oracle,
        ]
        .into_iter()
        .find(|c| c.name() == name)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One stored distance with its provenance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Entry {
    /// `d_{G∖{e1,e2}}(s, t)`.
    pub d: Dist,
    /// How it was computed.
    pub case: CaseTag,
}

/// Exact `d_{G∖{e1,e2}}(s, t)` for the relevant ordered pairs, plus the
/// single-failure distances needed to answer every other pair implicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFaultTable {
    /// Source.
    pub s: VertexId,
    /// Target.
    pub t: VertexId,
    /// The designated path `π(s, t)`.
    pub path: PathSeq,
    /// `d_G(s, t)`.
    pub base: Dist,
    /// `d_{G∖{e}}(s, t)` for each `e ∈ π`.
    pub single: BTreeMap<EdgeId, Dist>,
    entries: BTreeMap<(EdgeId, EdgeId), Entry>,
}

impl TwoFaultTable {
    /// An empty table.
    pub fn new(s: VertexId, t: VertexId, path: PathSeq, base: Dist) -> TwoFaultTable {
        TwoFaultTable { s, t, path, base, single: BTreeMap::new(), entries: BTreeMap::new() }
    }

    /// Stores an entry, replacing any previous one.
    pub fn insert(&mut self, e1: EdgeId, e2: EdgeId, d: Dist, case: CaseTag) {
        self.entries.insert((e1, e2), Entry { d, case });
    }

    /// The stored entry for `(e1, e2)`.
    pub fn get(&self, e1: EdgeId, e2: EdgeId) -> Option<Entry> {
        self.entries.get(&(e1, e2)).copied()
    }

    /// Whether `(e1, e2)` is stored.
    pub fn contains(&self, e1: EdgeId, e2: EdgeId) -> bool {
        self.entries.contains_key(&(e1, e2))
    }

    /// Stored entries in key order.
    pub fn entries(&self) -> impl Iterator<Item = ((EdgeId, EdgeId), Entry)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Number of stored entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether nothing is stored.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `d_{G∖{e}}(s, t)` for any single edge.
    pub fn lookup_single(&self, e: EdgeId) -> Dist {
        self.single.get(&e).copied().unwrap_or(self.base)
    }

    /// `d_{G∖{e1,e2}}(s, t)` for any pair, with the case that decides it.
    ///
    /// Unstored pairs are resolved implicitly: if neither edge is on `π`
    /// the distance is unchanged; otherwise the unstored edge is not on the
    /// single-fault replacement path and can be ignored.
    pub fn resolve(&self, e1: EdgeId, e2: EdgeId) -> Entry {
        if e1 == e2 {
            return Entry { d: self.lookup_single(e1), case: CaseTag::SameAsSingleFault };
        }
        if let Some(entry) = self.get(e1, e2).or_else(|| self.get(e2, e1)) {
            return entry;
        }
        let on1 = self.path.contains_edge(e1);
        let on2 = self.path.contains_edge(e2);
        match (on1, on2) {
            (false, false) => Entry { d: self.base, case: CaseTag::Trivial },
            (true, false) => Entry { d: self.lookup_single(e1), case: CaseTag::SameAsSingleFault },
            (false, true) => Entry { d: self.lookup_single(e2), case: CaseTag::SameAsSingleFault },
            // Both on π without an entry: neither lies on the other's
            // replacement path, so either single failure decides.
            (true, true) => Entry { d: self.lookup_single(e1), case: CaseTag::SameAsSingleFault },
        }
    }

    /// `d_{G∖{e1,e2}}(s, t)` for any pair.
    pub fn lookup(&self, e1: EdgeId, e2: EdgeId) -> Dist {
        self.resolve(e1, e2).d
    }
}

/// Single-fault replacement path per edge of `π`; `None` when `t` becomes
/// unreachable.
pub type Detours = BTreeMap<EdgeId, Option<PathSeq>>;

/// The pairs `(e1, e2)` with `e1 ∈ π` and `e2 ∈ π_{G∖e1}(s, t)`, in path
/// order, together with each replacement path (absent when `t` becomes
/// unreachable). Replacement paths prefer edges of `π` on ties.
pub fn enumerate_query_pairs(view: &GraphView<'_>, path: &PathSeq) -> (Vec<(EdgeId, EdgeId)>, Detours) {
    let (s, t) = (path.source(), path.target());
    let mut pairs = Vec::new();
    let mut detours = BTreeMap::new();
    for &e1 in path.edge_ids() {
        let masked = view.without([e1]).expect("path edges exist");
        let detour = shortest_path_preferring(&masked, s, t, Some(path)).ok();
        if let Some(d) = &detour {
            pairs.extend(d.edge_ids().iter().map(|&e2| (e1, e2)));
        }
        detours.insert(e1, detour);
    }
    (pairs, detours)
}
