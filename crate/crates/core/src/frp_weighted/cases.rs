use alloc::vec;
use alloc::vec::Vec;

use crate::backwards_f::{FTable, OffPathApsp};
use crate::graph_core::{Dist, PathSeq};
use crate::range_structures::{GridMin2D, GridPoint, Rmq1D};

/// Where a path that avoids the middle leaves and rejoins `π`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AvoidMiddleWitness {
    /// Last position before the first failure.
    pub x: usize,
    /// First position after the second failure.
    pub y: usize,
}

/// Shape of a path that returns to `π` between the failures: `s → p_x`
/// along `π`, off-path to `p_y`, along `π` to `p_k`, backwards to `p_{k2}`,
/// along `π` to `p_{x2}`, off-path to `p_{y2}`, along `π` to `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UsesMiddleWitness {
    /// Leaves `π` before the first failure.
    pub x: usize,
    /// Rejoins `π` between the failures.
    pub y: usize,
    /// Rightmost middle vertex reached.
    pub k: usize,
    /// Leftmost middle vertex reached afterwards.
    pub k2: usize,
    /// Leaves `π` before the second failure.
    pub x2: usize,
    /// Rejoins `π` after the second failure.
    pub y2: usize,
}

/// Both structured solvers for all pairs of path-edge positions `i < j`
/// (edge `i` joins `p_i` and `p_{i+1}`).
#[derive(Clone, Debug)]
pub struct MiddleCases {
    edges: usize,
    avoid: Vec<(Dist, Option<AvoidMiddleWitness>)>,
    uses: Vec<(Dist, Option<UsesMiddleWitness>)>,
}

/// `T(x, y) = d(s, p_x) + d_{G∖π}(p_x, p_y) + d(p_y, t)` over finite
/// entries with `x < y`.
fn t_grid(path: &PathSeq, apsp: &OffPathApsp) -> GridMin2D {
    let h = path.h();
    let pre = path.prefix_dist();
    let total = path.length();
    let mut points = Vec::new();
    for x in 0..h {
        for y in x + 1..h {
            if let Some(d) = apsp.between(x, y).value() {
                points.push(GridPoint { x, y, value: Dist::finite(pre[x] + d + total - pre[y]) });
            }
        }
    }
    GridMin2D::build(points)
}

fn avoid_table(path: &PathSeq, grid: &GridMin2D) -> Vec<(Dist, Option<AvoidMiddleWitness>)> {
    let h = path.h();
    let edges = h.saturating_sub(1);
    let mut out = vec![(Dist::INF, None); edges * edges];
    for i in 0..edges {
        for j in i + 1..edges {
            let (d, w) = grid.query(0, i, j + 1, h - 1);
            out[i * edges + j] = (d, w.map(|(x, y)| AvoidMiddleWitness { x, y }));
        }
    }
    out
}

impl MiddleCases {
    /// Runs both solvers. `f` must be exact.
    pub fn build(path: &PathSeq, apsp: &OffPathApsp, f: &FTable) -> MiddleCases {
        let grid = t_grid(path, apsp);
        let avoid = avoid_table(path, &grid);
        let uses = uses_table(path, &grid, f);
        MiddleCases { edges: path.h().saturating_sub(1), avoid, uses }
    }

    fn idx(&self, i: usize, j: usize) -> Option<usize> {
        (i < j && j < self.edges).then(|| i * self.edges + j)
    }

    /// Best path avoiding `π` strictly between edges `i < j`.
    pub fn avoid(&self, i: usize, j: usize) -> Dist {
        self.idx(i, j).map_or(Dist::INF, |k| self.avoid[k].0)
    }

    /// Best path touching `π` strictly between edges `i < j`.
    pub fn uses(&self, i: usize, j: usize) -> Dist {
        self.idx(i, j).map_or(Dist::INF, |k| self.uses[k].0)
    }

    /// Witness for [`MiddleCases::avoid`].
    pub fn avoid_witness(&self, i: usize, j: usize) -> Option<AvoidMiddleWitness> {
        self.idx(i, j).and_then(|k| self.avoid[k].1)
    }

    /// Witness for [`MiddleCases::uses`].
    pub fn uses_witness(&self, i: usize, j: usize) -> Option<UsesMiddleWitness> {
        self.idx(i, j).and_then(|k| self.uses[k].1)
    }
}

fn uses_table(path: &PathSeq, grid: &GridMin2D, f: &FTable) -> Vec<(Dist, Option<UsesMiddleWitness>)> {
    let h = path.h();
    let edges = h.saturating_sub(1);
    let pre = path.prefix_dist();
    let total = path.length();
    let mut out = vec![(Dist::INF, None); edges * edges];
    if edges < 2 {
        return out;
    }

    // g_s(i, k) = d(s,p_k) + min_{x ≤ i < y ≤ k} {d(s,p_x) + d_{G∖π}(p_x,p_y) − d(s,p_y)}.
    let mut gs = vec![(Dist::INF, (0, 0)); h * h];
    for i in 0..edges {
        for k in i + 1..h {
            let (d, w) = grid.query(0, i, i + 1, k);
            if let Some(w) = w {
                gs[i * h + k] = (d.offset(pre[k] - total), w);
            }
        }
    }
    // g_t(j, k') = min_{k' ≤ x' ≤ j < y'} {d(p_k',p_x') + d_{G∖π}(p_x',p_y') + d(p_y',t)}.
    let mut gt = vec![(Dist::INF, (0, 0)); h * h];
    for j in 0..edges {
        for k2 in 0..=j {
            let (d, w) = grid.query(k2, j, j + 1, h - 1);
            if let Some(w) = w {
                gt[j * h + k2] = (d.offset(-pre[k2]), w);
            }
        }
    }
    let back = |k: usize, k2: usize| if k == k2 { Dist::ZERO } else { f.get(k, k2) };

    for j in 1..edges {
        // A_{k,j}(k') = f(p_k, p_k') + g_t(j, k') for k' ≤ k ≤ j.
        let arrays: Vec<Rmq1D> =
            (0..=j).map(|k| Rmq1D::build((0..=k).map(|k2| back(k, k2) + gt[j * h + k2].0).collect())).collect();
        for i in 0..j {
            let mut best = (Dist::INF, None);
            for k in i + 1..=j {
                let (gsv, (x, y)) = gs[i * h + k];
                if gsv.is_inf() {
                    continue;
                }
                let Ok((tail, k2)) = arrays[k].query(i + 1, k) else { continue };
                let cand = gsv + tail;
                if cand < best.0 {
                    let (x2, y2) = gt[j * h + k2].1;
                    best = (cand, Some(UsesMiddleWitness { x, y, k, k2, x2, y2 }));
                }
            }
            out[i * edges + j] = best;
        }
    }
    out
}

/// Distances of paths avoiding `π` between the failures, for every pair of
/// edge positions `i < j` (row-major over `h − 1` positions; `INF` elsewhere).
pub fn solve_avoid_middle(path: &PathSeq, apsp: &OffPathApsp) -> Vec<Dist> {
    avoid_table(path, &t_grid(path, apsp)).into_iter().map(|(d, _)| d).collect()
}

/// Distances of paths returning to `π` between the failures, laid out like
/// [`solve_avoid_middle`]. `f` must be exact.
pub fn solve_uses_middle(path: &PathSeq, apsp: &OffPathApsp, f: &FTable) -> Vec<Dist> {
    uses_table(path, &t_grid(path, apsp), f).into_iter().map(|(d, _)| d).collect()
}
