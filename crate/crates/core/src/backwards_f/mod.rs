//! Backwards distances along the designated path.
//!
//! For positions `i < j` on `π = p_0 … p_{h−1}`,
//! `f(p_j, p_i) = d_{G ∖ π(s,p_i) ∖ π(p_j,t)}(p_j, p_i)`: the shortest way
//! back from `p_j` to `p_i` that may only use the part of `π` between them.
//! Three computations are provided:
//!
//! * [`compute_f_dp`] — the cubic dynamic program;
//! * [`hop_short_round`] / [`hop_long_round`] — one step from `f^{≤ℓ}` to
//!   `f^{≤3ℓ/2}` via the diamond product or via a random hitting set;
//! * [`compute_f_scaled`] — the driver chaining those rounds.

mod dp;
mod hop;

use alloc::vec;
use alloc::vec::Vec;

use crate::graph_core::{reverse, Dist, EdgeId, Graph, GraphView, PathSeq, SsspResult, VertexId};

pub use dp::compute_f_dp;
pub use hop::{
    compute_f_scaled, diamond, hop_long_round, hop_short_round, initial_hop_table, min_plus, HopBoundedF, RoundKind,
    RoundLog, ScaledConfig, ScaledReport,
};

/// How the dynamic program obtained `f(p_j, p_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FChoice {
    /// A single shortest path in `G ∖ π`.
    Direct,
    /// `f(p_j, p_a)`, then `π` from `p_a` to `p_b`, then a shortest path in
    /// `G ∖ π` from `p_b` to `p_i`.
    Via {
        /// Start of the last on-path run.
        a: usize,
        /// End of the last on-path run.
        b: usize,
    },
}

/// The `h × h` table of backwards distances; entry `(j, i)` is meaningful
/// for `j > i` only and reads as `INF` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTable {
    h: usize,
    values: Vec<Dist>,
    witness: Option<Vec<FChoice>>,
}

impl FTable {
    /// An all-`INF` table.
    pub fn new(h: usize) -> FTable {
        FTable { h, values: vec![Dist::INF; h * h], witness: None }
    }

    /// Wraps row-major values (`values[j * h + i]`); entries with `j ≤ i`
    /// are normalized to `INF`.
    pub fn from_values(h: usize, mut values: Vec<Dist>) -> FTable {
        assert_eq!(values.len(), h * h, "expected an h × h table");
        for j in 0..h {
            for i in j..h {
                values[j * h + i] = Dist::INF;
            }
        }
        FTable { h, values, witness: None }
    }

    pub(crate) fn with_witness(h: usize, values: Vec<Dist>, witness: Vec<FChoice>) -> FTable {
        FTable { h, values, witness: Some(witness) }
    }

    /// Path vertex count.
    #[inline]
    pub fn h(&self) -> usize {
        self.h
    }

    /// `f(p_j, p_i)`; `INF` when `j ≤ i` or out of range.
    #[inline]
    pub fn get(&self, j: usize, i: usize) -> Dist {
        if j <= i || j >= self.h {
            Dist::INF
        } else {
            self.values[j * self.h + i]
        }
    }

    /// Row-major values.
    #[inline]
    pub fn values(&self) -> &[Dist] {
        &self.values
    }

    /// `(j, i, f(p_j, p_i))` for every `j > i`, ordered by `j` then `i`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Dist)> + '_ {
        (0..self.h).flat_map(move |j| (0..j).map(move |i| (j, i, self.values[j * self.h + i])))
    }

    /// How entry `(j, i)` was obtained, when the table carries witnesses.
    pub fn choice(&self, j: usize, i: usize) -> Option<FChoice> {
        if j <= i || j >= self.h || self.values[j * self.h + i].is_inf() {
            return None;
        }
        self.witness.as_ref().map(|w| w[j * self.h + i])
    }

    /// The alternating decomposition `b_0, a_1, b_1, …, a_r, b_r, a_{r+1}`
    /// (as path positions) of a shortest path realizing `f(p_j, p_i)`.
    pub fn decomposition(&self, j: usize, i: usize) -> Option<DecompositionWitness> {
        let mut tail = Vec::new();
        let (jj, mut ii) = (j, i);
        loop {
            match self.choice(jj, ii)? {
                FChoice::Direct => {
                    let mut points = vec![jj, ii];
                    points.extend(tail.into_iter().rev());
                    return Some(DecompositionWitness { points });
                }
                FChoice::Via { a, b } => {
                    tail.push(ii);
                    tail.push(b);
                    ii = a;
                }
            }
        }
    }

    /// Edge ids of a walk realizing `f(p_j, p_i)`, reconstructed from the
    /// witnesses and the off-path shortest-path trees.
    pub fn path_edges(&self, j: usize, i: usize, apsp: &OffPathApsp, path: &PathSeq) -> Option<Vec<EdgeId>> {
        let dec = self.decomposition(j, i)?;
        let mut edges = Vec::new();
        for (k, w) in dec.points.windows(2).enumerate() {
            let (from, to) = (w[0], w[1]);
            if k % 2 == 0 {
                edges.extend(apsp.off_path_edges(from, path.vertex(to))?);
            } else {
                edges.extend_from_slice(&path.edge_ids()[from..to]);
            }
        }
        Some(edges)
    }
}

/// Positions `b_0, a_1, b_1, …, a_r, b_r, a_{r+1}` of a decomposed
/// backwards path: `b_k → a_{k+1}` are shortest paths in `G ∖ π`, and
/// `a_k → b_k` are runs along `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionWitness {
    /// The alternating positions, starting with `b_0 = j` and ending with
    /// `a_{r+1} = i`.
    pub points: Vec<usize>,
}

impl DecompositionWitness {
    /// Number of on-path runs `r`.
    pub fn runs(&self) -> usize {
        self.points.len() / 2 - 1
    }

    /// Whether the positions satisfy
    /// `a_{r+1} < a_r < b_r < a_{r−1} < … < a_1 < b_1 < b_0`.
    pub fn is_ordered(&self) -> bool {
        let p = &self.points;
        if p.len() < 2 || p.len() % 2 != 0 {
            return false;
        }
        // Reading the sequence b_0, a_1, b_1, a_2, …: each run goes forward
        // (a_k < b_k), every later run lies strictly before the earlier one
        // (b_k < a_{k−1}), and the endpoints bracket everything.
        let r = self.runs();
        let a = |k: usize| p[2 * k - 1];
        let b = |k: usize| p[2 * k];
        let last = p[p.len() - 1];
        if r == 0 {
            return last < p[0];
        }
        (1..=r).all(|k| a(k) < b(k)) && (2..=r).all(|k| b(k) < a(k - 1)) && b(1) < p[0] && last < a(r)
    }
}

/// Shortest-path trees of `G ∖ π` from and to every path vertex.
#[derive(Clone, Debug)]
pub struct OffPathApsp {
    graph: Graph,
    rows: Vec<SsspResult>,
    cols: Vec<SsspResult>,
    path_vertices: Vec<VertexId>,
}

impl OffPathApsp {
    /// Runs `2h` searches in `view ∖ π`.
    pub fn build(view: &GraphView<'_>, path: &PathSeq) -> OffPathApsp {
        let off = view.without(path.edge_ids().iter().copied()).expect("path edges exist");
        let rows = path.vertices().iter().map(|&p| off.sssp(p)).collect();
        let rev = reverse(view.graph());
        let rev_off = off.transplant(&rev);
        let cols = path.vertices().iter().map(|&p| rev_off.sssp(p)).collect();
        OffPathApsp { graph: view.graph().clone(), rows, cols, path_vertices: path.vertices().to_vec() }
    }

    /// Number of path vertices.
    #[inline]
    pub fn h(&self) -> usize {
        self.rows.len()
    }

    /// `d_{G∖π}(p_j, v)`.
    #[inline]
    pub fn from_path(&self, j: usize, v: VertexId) -> Dist {
        self.rows[j].dist[v]
    }

    /// `d_{G∖π}(v, p_i)`.
    #[inline]
    pub fn to_path(&self, v: VertexId, i: usize) -> Dist {
        self.cols[i].dist[v]
    }

    /// `d_{G∖π}(p_j, p_i)`.
    #[inline]
    pub fn between(&self, j: usize, i: usize) -> Dist {
        self.rows[j].dist[self.path_vertices[i]]
    }

    /// Edge ids of a shortest `p_j → v` path in `G ∖ π`.
    pub fn off_path_edges(&self, j: usize, v: VertexId) -> Option<Vec<EdgeId>> {
        self.rows[j].path_edges(&self.graph, v)
    }

    /// The `h × h` matrix `d_{G∖π}(p_j, p_i)`, row-major.
    pub fn path_matrix(&self) -> Vec<Dist> {
        let h = self.h();
        (0..h).flat_map(|j| (0..h).map(move |i| (j, i))).map(|(j, i)| self.between(j, i)).collect()
    }
}
