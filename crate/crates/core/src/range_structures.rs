//! Static range-minimum structures with deterministic witnesses.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph_core::Dist;
use crate::{Error, Result};

/// Sparse table over a slice of [`Dist`]: `O(n log n)` build, `O(1)` query,
/// ties resolved to the smallest index.
#[derive(Clone, Debug)]
pub struct Rmq1D {
    values: Vec<Dist>,
    // levels[k][i] = argmin of values[i .. i + 2^k]
    levels: Vec<Vec<u32>>,
}

impl Rmq1D {
    /// Builds the table.
    pub fn build(values: Vec<Dist>) -> Rmq1D {
        let n = values.len();
        let mut levels = vec![(0..n as u32).collect::<Vec<_>>()];
        let mut width = 1;
        while 2 * width <= n {
            let prev = &levels[levels.len() - 1];
            let next = (0..=n - 2 * width)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + width]);
                    if values[b as usize] < values[a as usize] {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            levels.push(next);
            width *= 2;
        }
        Rmq1D { values, levels }
    }

    /// Number of values.
    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Whether the table is empty.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Minimum of `values[l..=r]` and its smallest argmin.
    pub fn query(&self, l: usize, r: usize) -> Result<(Dist, usize)> {
        if l > r || r >= self.values.len() {
            return Err(Error::RangeOutOfBounds { l, r, len: self.values.len() });
        }
        let k = (r - l + 1).ilog2() as usize;
        let a = self.levels[k][l] as usize;
        let b = self.levels[k][r + 1 - (1 << k)] as usize;
        // Both halves cover overlapping ranges; on ties `a ≤ b` wins.
        Ok(if self.values[b] < self.values[a] { (self.values[b], b) } else { (self.values[a], a) })
    }

    /// Minimum over `values[l..=r]`, or `INF` for an empty range (`l > r`).
    #[inline]
    pub fn min_or_inf(&self, l: usize, r: usize) -> Dist {
        if l > r {
            Dist::INF
        } else {
            self.query(l, r).map_or(Dist::INF, |(d, _)| d)
        }
    }
}

/// A weighted point for [`GridMin2D`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GridPoint {
    /// First coordinate.
    pub x: usize,
    /// Second coordinate.
    pub y: usize,
    /// Weight.
    pub value: Dist,
}

// Comparison key: value first, then the lexicographically smaller point.
type Key = (Dist, usize, usize);

/// Merge-sort tree over `x` whose nodes keep their points sorted by `y`
/// with a min segment tree on top: `O(P log P)` build, `O(log² P)` query.
#[derive(Clone, Debug)]
pub struct GridMin2D {
    xs: Vec<usize>,
    size: usize,
    // nodes[v] = (sorted ys, segment tree of keys in that order)
    nodes: Vec<(Vec<usize>, Vec<Key>)>,
}

const NONE: Key = (Dist::INF, usize::MAX, usize::MAX);

impl GridMin2D {
    /// Builds the structure over `points`.
    pub fn build(mut points: Vec<GridPoint>) -> GridMin2D {
        points.sort_by_key(|p| (p.x, p.y));
        let size = points.len().next_power_of_two().max(1);
        let mut lists: Vec<Vec<(usize, Key)>> = vec![Vec::new(); 2 * size];
        for (i, p) in points.iter().enumerate() {
            lists[size + i] = vec![(p.y, (p.value, p.x, p.y))];
        }
        for v in (1..size).rev() {
            let (l, r) = (&lists[2 * v], &lists[2 * v + 1]);
            let mut merged = Vec::with_capacity(l.len() + r.len());
            let (mut i, mut j) = (0, 0);
            while i < l.len() || j < r.len() {
                if j == r.len() || (i < l.len() && l[i].0 <= r[j].0) {
                    merged.push(l[i]);
                    i += 1;
                } else {
                    merged.push(r[j]);
                    j += 1;
                }
            }
            lists[v] = merged;
        }
        let nodes = lists
            .into_iter()
            .map(|list| {
                let len = list.len();
                let mut tree = vec![NONE; 2 * len];
                for (i, (_, key)) in list.iter().enumerate() {
                    tree[len + i] = *key;
                }
                for i in (1..len).rev() {
                    tree[i] = tree[2 * i].min(tree[2 * i + 1]);
                }
                (list.into_iter().map(|(y, _)| y).collect(), tree)
            })
            .collect();
        GridMin2D { xs: points.iter().map(|p| p.x).collect(), size, nodes }
    }

    /// Number of stored points.
    #[inline]
    pub fn len(&self) -> usize {
        self.xs.len()
    }

    /// Whether no points are stored.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Minimum value over points with `x1 ≤ x ≤ x2` and `y1 ≤ y ≤ y2`, with
    /// the lexicographically smallest minimizing point; `(INF, None)` when
    /// the rectangle holds no point.
    pub fn query(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> (Dist, Option<(usize, usize)>) {
        if x1 > x2 || y1 > y2 {
            return (Dist::INF, None);
        }
        let mut lo = self.xs.partition_point(|&x| x < x1) + self.size;
        let mut hi = self.xs.partition_point(|&x| x <= x2) + self.size;
        let mut best = NONE;
        while lo < hi {
            if lo & 1 == 1 {
                best = best.min(self.node_min(lo, y1, y2));
                lo += 1;
            }
            if hi & 1 == 1 {
                hi -= 1;
                best = best.min(self.node_min(hi, y1, y2));
            }
            lo >>= 1;
            hi >>= 1;
        }
        if best.1 == usize::MAX {
            (Dist::INF, None)
        } else {
            (best.0, Some((best.1, best.2)))
        }
    }

    fn node_min(&self, v: usize, y1: usize, y2: usize) -> Key {
        let (ys, tree) = &self.nodes[v];
        let len = ys.len();
        let mut lo = ys.partition_point(|&y| y < y1) + len;
        let mut hi = ys.partition_point(|&y| y <= y2) + len;
        let mut best = NONE;
        while lo < hi {
            if lo & 1 == 1 {
                best = best.min(tree[lo]);
                lo += 1;
            }
            if hi & 1 == 1 {
                hi -= 1;
                best = best.min(tree[hi]);
            }
            lo >>= 1;
            hi >>= 1;
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rmq_examples() {
        let d = |v: i64| Dist::finite(v);
        let r = Rmq1D::build(vec![d(3), d(1), d(4), d(1), d(5)]);
        assert_eq!(r.query(1, 4).unwrap(), (d(1), 1));
        assert_eq!(r.query(2, 4).unwrap(), (d(1), 3));
        assert!(r.query(3, 5).is_err());
        let r = Rmq1D::build(vec![Dist::INF, Dist::INF]);
        assert_eq!(r.query(0, 1).unwrap(), (Dist::INF, 0));
    }

    #[test]
    fn grid_examples() {
        let g = GridMin2D::build(vec![GridPoint { x: 2, y: 3, value: Dist::finite(7) }]);
        assert_eq!(g.query(0, 5, 0, 5), (Dist::finite(7), Some((2, 3))));
        assert_eq!(g.query(3, 5, 0, 5), (Dist::INF, None));
        let empty = GridMin2D::build(Vec::new());
        assert_eq!(empty.query(0, 9, 0, 9), (Dist::INF, None));
    }
}
