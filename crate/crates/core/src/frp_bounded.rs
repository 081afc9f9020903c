//! Two-fault distance queries for graphs with small integer weights.
//!
//! The designated path `π = p_0 … p_{h−1}` is cut into intervals of at most
//! `g` edges; consecutive intervals share their boundary vertex. After a
//! precomputation of single-fault distances around every interval, a query
//! `d_{G∖{e1,e2}}(s, t)` builds an auxiliary graph on `O(g)` path vertices
//! whose edges stand for subpaths of the replacement path, and runs one
//! shortest-path search on it:
//!
//! * one failure on `π`, the other off it — vertices `{s, t} ∪ V(I_1)`,
//!   pairwise distances from a single-fault oracle over `G ∖ π`;
//! * both failures in one interval — the same layout with fault-free
//!   distances;
//! * failures in different intervals — a nine-part construction over
//!   `{s, t} ∪ V(I_1) ∪ V(I_2)` that is exact for "good" replacement paths,
//!   run once on `G` and once mirrored on the reversed graph; every
//!   canonical replacement path is good in one of the two orientations.
//!
//! Every auxiliary edge is the length of a real walk avoiding both
//! failures, so the restricted potentials of `G` stay feasible on the
//! auxiliary graph and each query is a single Dijkstra run.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::backwards_f::{compute_f_dp, FTable, OffPathApsp};
use crate::dso_one_fault::{Dso, DsoMode};
use crate::frp_weighted::{enumerate_query_pairs, CaseTag, TwoFaultTable};
use crate::graph_core::{reverse, shortest_path, Dist, EdgeId, Graph, GraphView, PathSeq, VertexId};
use crate::ssrp::{ssrp_targets, SsrpResult};
use crate::{Error, Result};

/// A path-vertex range `l..=r` of `π`; it owns the edges `l..r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval {
    /// First vertex position.
    pub l: usize,
    /// Last vertex position.
    pub r: usize,
}

impl Interval {
    /// Number of edges.
    #[inline]
    pub fn edges(&self) -> usize {
        self.r - self.l
    }

    /// Whether edge position `x` (edge `p_x → p_{x+1}`) belongs here.
    #[inline]
    pub fn owns_edge(&self, x: usize) -> bool {
        self.l <= x && x < self.r
    }

    fn mirrored(&self, h: usize) -> Interval {
        Interval { l: h - 1 - self.r, r: h - 1 - self.l }
    }
}

/// Consecutive intervals of at most `g` edges covering the edges of `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    /// The size parameter.
    pub g: usize,
    /// Intervals in path order; `intervals[k].r == intervals[k + 1].l`.
    pub intervals: Vec<Interval>,
    edge_interval: Vec<usize>,
}

impl IntervalPartition {
    /// Partitions a path with `h` vertices.
    pub fn new(h: usize, g: usize) -> Result<IntervalPartition> {
        if g == 0 {
            return Err(Error::BadParameter(format!("interval size must be positive, got {g}")));
        }
        let mut intervals = Vec::new();
        let mut edge_interval = Vec::with_capacity(h.saturating_sub(1));
        let mut l = 0;
        while l + 1 < h {
            let r = (l + g).min(h - 1);
            edge_interval.extend(core::iter::repeat_n(intervals.len(), r - l));
            intervals.push(Interval { l, r });
            l = r;
        }
        Ok(IntervalPartition { g, intervals, edge_interval })
    }

    /// A partition from explicit intervals, which must chain from `0` to
    /// `h − 1` with `intervals[k].r == intervals[k + 1].l` and at most `g`
    /// edges each.
    pub fn from_intervals(h: usize, g: usize, intervals: Vec<Interval>) -> Result<IntervalPartition> {
        if g == 0 {
            return Err(Error::BadParameter(format!("interval size must be positive, got {g}")));
        }
        let mut next = 0;
        let mut edge_interval = Vec::with_capacity(h.saturating_sub(1));
        for (k, iv) in intervals.iter().enumerate() {
            if iv.l != next || iv.r <= iv.l || iv.edges() > g {
                return Err(Error::BadParameter(format!(
                    "interval {k} = {}..={} does not continue at {next}",
                    iv.l, iv.r
                )));
            }
            edge_interval.extend(core::iter::repeat_n(k, iv.edges()));
            next = iv.r;
        }
        if next + 1 != h.max(1) {
            return Err(Error::BadParameter(format!("intervals end at {next}, path ends at {}", h.saturating_sub(1))));
        }
        Ok(IntervalPartition { g, intervals, edge_interval })
    }

    /// The same intervals seen along the reversed path.
    pub fn mirrored(&self) -> IntervalPartition {
        let h = self.edge_interval.len() + 1;
        let intervals = self.intervals.iter().rev().map(|iv| iv.mirrored(h)).collect();
        IntervalPartition::from_intervals(h, self.g, intervals).expect("mirroring keeps the chain")
    }

    /// Index of the interval owning edge position `x`.
    #[inline]
    pub fn interval_of(&self, x: usize) -> usize {
        self.edge_interval[x]
    }

    /// Number of intervals.
    #[inline]
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    /// Whether `π` has no edges.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Instrumentation of one query.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QueryStats {
    /// Auxiliary vertices over all constructions run.
    pub aux_vertices: usize,
    /// Finite auxiliary edges over all constructions run.
    pub aux_edges: usize,
    /// Precomputed distances read.
    pub lookups: usize,
}

impl QueryStats {
    fn absorb(&mut self, other: QueryStats) {
        self.aux_vertices += other.aux_vertices;
        self.aux_edges += other.aux_edges;
        self.lookups += other.lookups;
    }
}

/// Answer to one query with its provenance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QueryOutcome {
    /// `d_{G∖{e1,e2}}(s, t)`.
    pub d: Dist,
    /// Dispatch branch (for different intervals, the orientation that won;
    /// ties go to the forward one).
    pub case: CaseTag,
    /// Work counters.
    pub stats: QueryStats,
}

/// Single-fault tables around one interval `I`.
#[derive(Clone, Debug)]
struct IntervalTables {
    /// From `s` in `G ∖ E(I)`, targets `V(I) ∪ {t}`.
    from_s: SsrpResult,
    /// From `t` in the reversal of `G ∖ E(I)`, targets `V(I) ∪ {s}`.
    to_t: SsrpResult,
    /// From `r_I` in `G ∖ E(I)`, targets `V(I) ∪ {s, t}`.
    from_r: SsrpResult,
    /// From `l_I` in the reversal of `G ∖ E(I)`, targets `V(I) ∪ {s, t}`.
    to_l: SsrpResult,
}

/// The precomputed structure; immutable once built.
#[derive(Clone, Debug)]
pub struct BoundedDso {
    graph: Graph,
    rev_potentials: Vec<i64>,
    path: PathSeq,
    partition: IntervalPartition,
    from_s: SsrpResult,
    to_t: SsrpResult,
    tables: Vec<IntervalTables>,
    apsp: OffPathApsp,
    off_dso: Dso,
    f: FTable,
}

impl BoundedDso {
    /// Finds `π(s, t)` and precomputes with interval size `g`.
    pub fn precompute(view: &GraphView<'_>, s: VertexId, t: VertexId, g: usize) -> Result<BoundedDso> {
        let path = shortest_path(view, s, t)?;
        BoundedDso::with_path(view, path, g)
    }

    /// Precomputes for a given shortest path `π`.
    pub fn with_path(view: &GraphView<'_>, path: PathSeq, g: usize) -> Result<BoundedDso> {
        let partition = IntervalPartition::new(path.h(), g)?;
        BoundedDso::with_partition(view, path, partition)
    }

    /// Precomputes for a given shortest path and interval partition.
    pub fn with_partition(view: &GraphView<'_>, path: PathSeq, partition: IntervalPartition) -> Result<BoundedDso> {
        if partition.edge_interval.len() != path.h() - 1 {
            return Err(Error::DimensionMismatch { left: partition.edge_interval.len(), right: path.h() - 1 });
        }
        let base = view.graph();
        let rev = reverse(base);
        let (s, t) = (path.source(), path.target());
        let pv = path.vertices();

        let from_s = ssrp_targets(view, s, pv);
        let to_t = ssrp_targets(&view.transplant(&rev), t, pv);

        let mut tables = Vec::with_capacity(partition.len());
        for iv in &partition.intervals {
            let cut = view.without(path.edge_ids()[iv.l..iv.r].iter().copied())?;
            let rev_cut = cut.transplant(&rev);
            let inner = &pv[iv.l..=iv.r];
            let with = |extra: &[VertexId]| -> Vec<VertexId> { inner.iter().chain(extra).copied().collect() };
            tables.push(IntervalTables {
                from_s: ssrp_targets(&cut, s, &with(&[t])),
                to_t: ssrp_targets(&rev_cut, t, &with(&[s])),
                from_r: ssrp_targets(&cut, pv[iv.r], &with(&[s, t])),
                to_l: ssrp_targets(&rev_cut, pv[iv.l], &with(&[s, t])),
            });
        }

        let apsp = OffPathApsp::build(view, &path);
        let f = compute_f_dp(&path, &apsp);

        let mut targets: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for iv in &partition.intervals {
            for &u in &pv[iv.l..=iv.r] {
                targets.entry(u).or_default().extend_from_slice(&pv[iv.l..=iv.r]);
            }
        }
        let sources = targets
            .into_iter()
            .map(|(u, mut ts)| {
                ts.sort_unstable();
                ts.dedup();
                (u, ts)
            })
            .collect();
        let off = view.without(path.edge_ids().iter().copied())?;
        let off_dso = Dso::build(&off, DsoMode::Precomputed { sources });

        Ok(BoundedDso {
            graph: base.clone(),
            rev_potentials: rev.potentials().to_vec(),
            path,
            partition,
            from_s,
            to_t,
            tables,
            apsp,
            off_dso,
            f,
        })
    }

    /// The designated path.
    pub fn path(&self) -> &PathSeq {
        &self.path
    }

    /// The interval partition.
    pub fn partition(&self) -> &IntervalPartition {
        &self.partition
    }

    /// The backwards-distance table used by the different-interval case.
    pub fn f_table(&self) -> &FTable {
        &self.f
    }

    /// `d_G(s, t)`.
    pub fn base(&self) -> Dist {
        Dist::finite(self.path.length())
    }

    /// `d_{G∖{e}}(s, t)`.
    pub fn single(&self, e: EdgeId) -> Dist {
        self.from_s.dist_avoiding(self.path.target(), e)
    }

    /// `d_{G∖{e}}(v, t)` for a path vertex `v`.
    pub fn single_to_t(&self, v: VertexId, e: EdgeId) -> Dist {
        self.to_t.dist_avoiding(v, e)
    }

    /// `d_{G∖E(I)}(s, v, e)` from the per-interval tables; `v` must be a
    /// vertex of interval `k` or `t`.
    pub fn interval_from_s(&self, k: usize, v: VertexId, e: Option<EdgeId>) -> Dist {
        avoiding(&self.tables[k].from_s, v, e)
    }

    /// `d_{G∖E(I)}(v, t, e)`; `v` must be a vertex of interval `k` or `s`.
    pub fn interval_to_t(&self, k: usize, v: VertexId, e: Option<EdgeId>) -> Dist {
        avoiding(&self.tables[k].to_t, v, e)
    }

    /// `d_{G∖E(I)}(r_I, v, e)` for `v ∈ V(I) ∪ {s, t}`.
    pub fn interval_from_r(&self, k: usize, v: VertexId, e: Option<EdgeId>) -> Dist {
        avoiding(&self.tables[k].from_r, v, e)
    }

    /// `d_{G∖E(I)}(v, l_I, e)` for `v ∈ V(I) ∪ {s, t}`.
    pub fn interval_to_l(&self, k: usize, v: VertexId, e: Option<EdgeId>) -> Dist {
        avoiding(&self.tables[k].to_l, v, e)
    }

    /// `d_{G∖π}(u, v, e)` for `u, v` in a common interval.
    pub fn off_path_avoiding(&self, u: VertexId, v: VertexId, e: Option<EdgeId>) -> Dist {
        self.off_dso.try_query(u, v, e.unwrap_or(usize::MAX)).expect("interval pairs are precomputed")
    }

    /// `d_{G∖{e1,e2}}(s, t)`.
    pub fn query(&self, e1: EdgeId, e2: EdgeId) -> Dist {
        self.query_traced(e1, e2).d
    }

    /// [`BoundedDso::query`] with provenance and counters.
    pub fn query_traced(&self, e1: EdgeId, e2: EdgeId) -> QueryOutcome {
        let (on1, on2) = (self.path.edge_position(e1), self.path.edge_position(e2));
        let plain = |d, case| QueryOutcome { d, case, stats: QueryStats::default() };
        match (on1, on2) {
            (None, None) => plain(self.base(), CaseTag::Trivial),
            _ if e1 == e2 => plain(self.single(e1), CaseTag::SameAsSingleFault),
            (Some(_), None) => self.one_off(e1, e2),
            (None, Some(_)) => self.one_off(e2, e1),
            (Some(x1), Some(x2)) => {
                let (k1, k2) = (self.partition.interval_of(x1), self.partition.interval_of(x2));
                if k1 == k2 {
                    self.same_interval(e1, e2)
                } else if x1 < x2 {
                    self.diff_intervals(e1, e2)
                } else {
                    self.diff_intervals(e2, e1)
                }
            }
        }
    }

    /// The one-on, one-off construction; `e1 ∈ π`, `e2 ∉ π`.
    pub fn query_one_off(&self, e1: EdgeId, e2: EdgeId) -> Result<Dist> {
        if self.path.edge_position(e1).is_none() || self.path.contains_edge(e2) {
            return Err(Error::WrongCase("one-off needs e1 on the path and e2 off it"));
        }
        Ok(self.one_off(e1, e2).d)
    }

    /// The same-interval construction.
    pub fn query_same_interval(&self, e1: EdgeId, e2: EdgeId) -> Result<Dist> {
        match (self.path.edge_position(e1), self.path.edge_position(e2)) {
            (Some(x1), Some(x2)) if e1 != e2 && self.partition.interval_of(x1) == self.partition.interval_of(x2) => {
                Ok(self.same_interval(e1, e2).d)
            }
            _ => Err(Error::WrongCase("same-interval needs two path edges in one interval")),
        }
    }

    /// The different-interval construction; returns the better of the two
    /// orientations.
    pub fn query_diff_intervals(&self, e1: EdgeId, e2: EdgeId) -> Result<Dist> {
        self.diff_parts(e1, e2).map(|(good, rev)| good.min(rev))
    }

    /// The forward ("good") and mirrored ("reversely good") answers of the
    /// different-interval construction, in that order. Either argument
    /// order is accepted.
    pub fn diff_parts(&self, e1: EdgeId, e2: EdgeId) -> Result<(Dist, Dist)> {
        match (self.path.edge_position(e1), self.path.edge_position(e2)) {
            (Some(x1), Some(x2)) if self.partition.interval_of(x1) != self.partition.interval_of(x2) => {
                let (x1, x2) = (x1.min(x2), x1.max(x2));
                let good = self.diff_oriented(Frame::forward(self), x1, x2);
                let h = self.path.h();
                let back = self.diff_oriented(Frame::backward(self), h - 2 - x2, h - 2 - x1);
                Ok((good.0, back.0))
            }
            _ => Err(Error::WrongCase("different-interval needs path edges in two intervals")),
        }
    }

    fn one_off(&self, e1: EdgeId, e2: EdgeId) -> QueryOutcome {
        let fr = Frame::forward(self);
        let x1 = self.path.edge_position(e1).expect("e1 lies on the path");
        let k = self.partition.interval_of(x1);
        let iv = self.partition.intervals[k];
        let (sp, tp) = (0, fr.h - 1);
        let mut aux = AuxBuilder::new(&fr, [sp, tp].into_iter().chain(iv.l..=iv.r));
        let e = Some(e2);
        aux.edge(sp, tp, fr.from_s(k, tp, e));
        for v in iv.l..=iv.r {
            aux.edge(sp, v, fr.from_s(k, v, e));
            aux.edge(v, tp, fr.to_t(k, v, e));
        }
        aux.path_edges(iv, &[x1]);
        for u in iv.l..=iv.r {
            for v in iv.l..=iv.r {
                if u != v {
                    aux.edge(u, v, self.off_path_avoiding(self.path.vertex(u), self.path.vertex(v), e));
                }
            }
        }
        let (d, stats) = aux.solve(sp, tp);
        QueryOutcome { d, case: CaseTag::OneOff, stats }
    }

    fn same_interval(&self, e1: EdgeId, e2: EdgeId) -> QueryOutcome {
        let fr = Frame::forward(self);
        let x1 = self.path.edge_position(e1).expect("on path");
        let x2 = self.path.edge_position(e2).expect("on path");
        let k = self.partition.interval_of(x1);
        let iv = self.partition.intervals[k];
        let (sp, tp) = (0, fr.h - 1);
        let mut aux = AuxBuilder::new(&fr, [sp, tp].into_iter().chain(iv.l..=iv.r));
        aux.edge(sp, tp, fr.from_s(k, tp, None));
        for v in iv.l..=iv.r {
            aux.edge(sp, v, fr.from_s(k, v, None));
            aux.edge(v, tp, fr.to_t(k, v, None));
        }
        aux.path_edges(iv, &[x1, x2]);
        for u in iv.l..=iv.r {
            for v in iv.l..=iv.r {
                if u != v {
                    aux.edge(u, v, fr.off(u, v));
                }
            }
        }
        let (d, stats) = aux.solve(sp, tp);
        QueryOutcome { d, case: CaseTag::SameInterval, stats }
    }

    fn diff_intervals(&self, e1: EdgeId, e2: EdgeId) -> QueryOutcome {
        let x1 = self.path.edge_position(e1).expect("on path");
        let x2 = self.path.edge_position(e2).expect("on path");
        let h = self.path.h();
        let (good, s1) = self.diff_oriented(Frame::forward(self), x1, x2);
        let (back, s2) = self.diff_oriented(Frame::backward(self), h - 2 - x2, h - 2 - x1);
        let mut stats = s1;
        stats.absorb(s2);
        let (d, case) =
            if good <= back { (good, CaseTag::DiffIntervalsGood) } else { (back, CaseTag::DiffIntervalsReverse) };
        QueryOutcome { d, case, stats }
    }

    /// The nine-part construction in frame `fr` for failures at edge
    /// positions `x1 < x2` (frame coordinates) in different intervals.
    fn diff_oriented(&self, fr: Frame<'_>, x1: usize, x2: usize) -> (Dist, QueryStats) {
        let (k1, k2) = (fr.interval_of(x1), fr.interval_of(x2));
        debug_assert!(k1 < k2);
        let (i1, i2) = (fr.interval(k1), fr.interval(k2));
        let (e1, e2) = (Some(fr.edge_id(x1)), Some(fr.edge_id(x2)));
        let (sp, tp) = (0, fr.h - 1);
        let mut aux = AuxBuilder::new(&fr, [sp, tp].into_iter().chain(i1.l..=i1.r).chain(i2.l..=i2.r));

        // s → t avoiding one whole interval and the other failure.
        aux.edge(sp, tp, fr.from_s(k1, tp, e2).min(fr.from_s(k2, tp, e1)));
        // Surviving interval edges.
        aux.path_edges(i1, &[x1]);
        aux.path_edges(i2, &[x2]);
        // Fault-free stretches of π outside the two intervals.
        aux.edge(sp, i1.l, fr.span(sp, i1.l));
        aux.edge(i2.r, tp, fr.span(i2.r, tp));
        aux.edge(i1.r, i2.l, fr.span(i1.r, i2.l));
        // Entering and leaving each interval from s and to t.
        for v in i1.l..=i1.r {
            aux.edge(sp, v, fr.from_s(k1, v, e2));
            aux.edge(v, tp, fr.to_t(k1, v, e2));
        }
        for v in i2.l..=i2.r {
            aux.edge(sp, v, fr.from_s(k2, v, e1));
            aux.edge(v, tp, fr.to_t(k2, v, e1));
        }
        // Backward jumps from L_2 to R_1.
        for u in x1 + 1..=i1.r {
            for v in i2.l..=x2 {
                if u < v {
                    aux.edge(v, u, fr.f(v, u));
                }
            }
        }
        // Leaving r_1 back into R_1, and reaching l_2 from L_2.
        for v in x1 + 1..=i1.r {
            aux.edge(i1.r, v, fr.from_r(k1, v, e2));
        }
        for v in i2.l..=x2 {
            aux.edge(v, i2.l, fr.to_l(k2, v, e1));
        }
        // Detours avoiding π entirely.
        let verts = aux.positions().to_vec();
        for &u in &verts {
            for &v in &verts {
                if u != v {
                    aux.edge(u, v, fr.off(u, v));
                }
            }
        }
        aux.solve(sp, tp)
    }
}

fn avoiding(r: &SsrpResult, v: VertexId, e: Option<EdgeId>) -> Dist {
    match e {
        Some(e) => r.dist_avoiding(v, e),
        None => r.dist(v),
    }
}

/// The structure seen from `s` along `π` (forward) or from `t` along the
/// reversed path in the reversed graph (backward). Positions are frame
/// coordinates; edge ids are always those of `G`.
#[derive(Clone, Copy)]
struct Frame<'a> {
    dso: &'a BoundedDso,
    backward: bool,
    h: usize,
}

// The frame accessors are named after the distances they return.
#[allow(clippy::wrong_self_convention)]
impl<'a> Frame<'a> {
    fn forward(dso: &'a BoundedDso) -> Frame<'a> {
        Frame { dso, backward: false, h: dso.path.h() }
    }

    fn backward(dso: &'a BoundedDso) -> Frame<'a> {
        Frame { dso, backward: true, h: dso.path.h() }
    }

    /// Path position of frame position `x`.
    #[inline]
    fn pos(&self, x: usize) -> usize {
        if self.backward {
            self.h - 1 - x
        } else {
            x
        }
    }

    #[inline]
    fn vertex(&self, x: usize) -> VertexId {
        self.dso.path.vertex(self.pos(x))
    }

    /// Id of the frame edge `x → x + 1`.
    #[inline]
    fn edge_id(&self, x: usize) -> EdgeId {
        let ids = self.dso.path.edge_ids();
        if self.backward {
            ids[self.h - 2 - x]
        } else {
            ids[x]
        }
    }

    /// Interval index (frame order) of frame edge position `x`.
    fn interval_of(&self, x: usize) -> usize {
        if self.backward {
            let k = self.dso.partition.interval_of(self.h - 2 - x);
            self.dso.partition.len() - 1 - k
        } else {
            self.dso.partition.interval_of(x)
        }
    }

    fn interval(&self, k: usize) -> Interval {
        let p = &self.dso.partition;
        if self.backward {
            p.intervals[p.len() - 1 - k].mirrored(self.h)
        } else {
            p.intervals[k]
        }
    }

    fn base_index(&self, k: usize) -> usize {
        if self.backward {
            self.dso.partition.len() - 1 - k
        } else {
            k
        }
    }

    /// Length of the frame path from frame position `x` to `y ≥ x`.
    fn span(&self, x: usize, y: usize) -> Dist {
        let p = &self.dso.path;
        Dist::finite(if self.backward { p.between(self.pos(y), self.pos(x)) } else { p.between(x, y) })
    }

    /// `d_{G∖π}` between frame positions, in frame direction.
    fn off(&self, x: usize, y: usize) -> Dist {
        if self.backward {
            self.dso.apsp.between(self.pos(y), self.pos(x))
        } else {
            self.dso.apsp.between(x, y)
        }
    }

    /// Frame backwards distance from frame position `j` to `i < j`.
    fn f(&self, j: usize, i: usize) -> Dist {
        if self.backward {
            self.dso.f.get(self.pos(i), self.pos(j))
        } else {
            self.dso.f.get(j, i)
        }
    }

    fn tables(&self, k: usize) -> &'a IntervalTables {
        &self.dso.tables[self.base_index(k)]
    }

    /// Frame `d_{G∖E(I)}(s, x, e)`.
    fn from_s(&self, k: usize, x: usize, e: Option<EdgeId>) -> Dist {
        let t = self.tables(k);
        avoiding(if self.backward { &t.to_t } else { &t.from_s }, self.vertex(x), e)
    }

    /// Frame `d_{G∖E(I)}(x, t, e)`.
    fn to_t(&self, k: usize, x: usize, e: Option<EdgeId>) -> Dist {
        let t = self.tables(k);
        avoiding(if self.backward { &t.from_s } else { &t.to_t }, self.vertex(x), e)
    }

    /// Frame `d_{G∖E(I)}(r_I, x, e)`.
    fn from_r(&self, k: usize, x: usize, e: Option<EdgeId>) -> Dist {
        let t = self.tables(k);
        avoiding(if self.backward { &t.to_l } else { &t.from_r }, self.vertex(x), e)
    }

    /// Frame `d_{G∖E(I)}(x, l_I, e)`.
    fn to_l(&self, k: usize, x: usize, e: Option<EdgeId>) -> Dist {
        let t = self.tables(k);
        avoiding(if self.backward { &t.from_r } else { &t.to_l }, self.vertex(x), e)
    }

    fn potential(&self, x: usize) -> i64 {
        let v = self.vertex(x);
        if self.backward {
            self.dso.rev_potentials[v]
        } else {
            self.dso.graph.potentials()[v]
        }
    }
}

/// Auxiliary graph over a set of frame positions.
struct AuxBuilder<'f, 'a> {
    frame: &'f Frame<'a>,
    positions: Vec<usize>,
    edges: Vec<(usize, usize, i64)>,
    lookups: usize,
}

impl<'f, 'a> AuxBuilder<'f, 'a> {
    fn new(frame: &'f Frame<'a>, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut positions: Vec<usize> = positions.into_iter().collect();
        positions.sort_unstable();
        positions.dedup();
        AuxBuilder { frame, positions, edges: Vec::new(), lookups: 0 }
    }

    fn positions(&self) -> &[usize] {
        &self.positions
    }

    fn local(&self, x: usize) -> usize {
        self.positions.binary_search(&x).expect("position belongs to the auxiliary graph")
    }

    /// Adds `x → y` when `d` is finite; self-loops are dropped.
    fn edge(&mut self, x: usize, y: usize, d: Dist) {
        self.lookups += 1;
        if x == y {
            return;
        }
        if let Some(w) = d.value() {
            let (a, b) = (self.local(x), self.local(y));
            self.edges.push((a, b, w));
        }
    }

    /// Frame path edges of `iv` except those at the positions in `failed`.
    fn path_edges(&mut self, iv: Interval, failed: &[usize]) {
        for x in iv.l..iv.r {
            if !failed.contains(&x) {
                let w = self.frame.span(x, x + 1);
                self.edge(x, x + 1, w);
            }
        }
    }

    fn solve(self, s: usize, t: usize) -> (Dist, QueryStats) {
        let stats =
            QueryStats { aux_vertices: self.positions.len(), aux_edges: self.edges.len(), lookups: self.lookups };
        let hint: Vec<i64> = self.positions.iter().map(|&x| self.frame.potential(x)).collect();
        let (ls, lt) = (self.local(s), self.local(t));
        let g = Graph::with_potential_hint(self.positions.len(), self.edges, hint)
            .expect("auxiliary edges are real walks, so no negative cycle exists");
        (g.view().sssp(ls).dist[lt], stats)
    }
}

/// Default interval size `max(1, round(n^{2/3}))`.
pub fn default_interval_size(n: usize) -> usize {
    let g = libm::round(libm::pow(n as f64, 2.0 / 3.0)) as usize;
    g.max(1)
}

/// The two-fault table for the pairs `(e1 ∈ π, e2 ∈ π_{G∖e1})`, answered
/// by the bounded-weight structure. Rejects weights of magnitude above
/// `m_bound`; `g` defaults to [`default_interval_size`].
pub fn two_frp_bounded(
    view: &GraphView<'_>,
    s: VertexId,
    t: VertexId,
    m_bound: i64,
    g: Option<usize>,
) -> Result<TwoFaultTable> {
    let graph = view.graph();
    if let Some(e) = graph.edges().iter().find(|e| e.weight.abs() > m_bound) {
        return Err(Error::WeightOutOfRange { weight: e.weight, bound: m_bound });
    }
    let g = g.unwrap_or_else(|| default_interval_size(graph.n()));
    let dso = BoundedDso::precompute(view, s, t, g)?;
    let path = dso.path().clone();
    let (pairs, _) = enumerate_query_pairs(view, &path);
    let mut table = TwoFaultTable::new(s, t, path.clone(), dso.base());
    table.single.extend(path.edge_ids().iter().map(|&e| (e, dso.single(e))));
    for (e1, e2) in pairs {
        if table.contains(e1, e2) {
            continue;
        }
        let out = dso.query_traced(e1, e2);
        table.insert(e1, e2, out.d, out.case);
        if path.contains_edge(e2) {
            table.insert(e2, e1, out.d, out.case);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::cex;

    #[test]
    fn partition_shares_boundaries() {
        let p = IntervalPartition::new(6, 2).unwrap();
        assert_eq!(p.intervals, vec![Interval { l: 0, r: 2 }, Interval { l: 2, r: 4 }, Interval { l: 4, r: 5 }]);
        assert_eq!((0..5).map(|x| p.interval_of(x)).collect::<Vec<_>>(), vec![0, 0, 1, 1, 2]);
        assert!(IntervalPartition::new(6, 0).is_err());
        assert_eq!(IntervalPartition::new(6, 9).unwrap().len(), 1);
        let m = p.mirrored();
        assert_eq!(m.intervals, vec![Interval { l: 0, r: 1 }, Interval { l: 1, r: 3 }, Interval { l: 3, r: 5 }]);
        assert_eq!(m.mirrored(), p);
        assert!(
            IntervalPartition::from_intervals(6, 2, vec![Interval { l: 0, r: 3 }, Interval { l: 3, r: 5 }]).is_err()
        );
    }

    #[test]
    fn cex_pair_in_every_layout() {
        let g = cex();
        let view = g.view();
        for size in [1, 2, 5] {
            let dso = BoundedDso::precompute(&view, 0, 5, size).unwrap();
            let (e1, e2) = (dso.path().edge_ids()[0], dso.path().edge_ids()[4]);
            assert_eq!(dso.query(e1, e2), Dist::finite(6), "g = {size}");
        }
    }
}
