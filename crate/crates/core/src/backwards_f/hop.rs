use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{compute_f_dp, FTable, OffPathApsp};
use crate::graph_core::{Dist, GraphView, PathSeq, VertexId};
use crate::range_structures::Rmq1D;
use crate::{Error, Result};

/// A table valid under hop-bounded semantics: every entry is at least the
/// true `f`, and equals it whenever some decomposable shortest path uses at
/// most `ell` vertices. Finite entries satisfy `|value| ≤ ell · M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopBoundedF {
    /// The hop bound `ℓ` (in vertices).
    pub ell: usize,
    /// The values.
    pub table: FTable,
}

/// Which algorithm produced a round.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoundKind {
    /// Diamond products.
    Short,
    /// Random hitting set.
    Long,
}

/// One step of the scaled driver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoundLog {
    /// Hop bound after the round.
    pub ell: usize,
    /// Algorithm used.
    pub kind: RoundKind,
    /// Hitting-set size (0 for short rounds).
    pub sample_size: usize,
    /// Whether any entry improved.
    pub changed: bool,
}

/// Parameters of [`compute_f_scaled`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledConfig {
    /// Weight bound `M`: every weight must lie in `[−M, M]`.
    pub m_bound: i64,
    /// Crossover `L`: short rounds while `ℓ ≤ L`, long rounds after.
    /// `None` picks `max(1, ⌊(n / M)^{1/3}⌋)`.
    pub crossover: Option<usize>,
    /// Hitting-set constant `c`; samples have `⌈c · n · ln n / ℓ⌉` vertices.
    pub c: f64,
    /// Seed for the hitting sets.
    pub seed: u64,
    /// Compare the result with [`compute_f_dp`] and retry on mismatch.
    pub verify: bool,
    /// Extra attempts (with fresh seeds) after a failed verification.
    pub retries: usize,
}

impl ScaledConfig {
    /// Defaults for weight bound `m_bound`: automatic crossover, `c = 3`,
    /// seed 0, verification on with one retry.
    pub fn new(m_bound: i64) -> ScaledConfig {
        ScaledConfig { m_bound, crossover: None, c: 3.0, seed: 0, verify: true, retries: 1 }
    }

    /// The crossover used for an `n`-vertex graph.
    pub fn crossover_for(&self, n: usize) -> usize {
        self.crossover.unwrap_or_else(|| {
            let ratio = n as f64 / self.m_bound.max(1) as f64;
            (libm::floor(libm::cbrt(ratio)) as usize).max(1)
        })
    }
}

/// Outcome of [`compute_f_scaled`].
#[derive(Clone, Debug)]
pub struct ScaledReport {
    /// The final table.
    pub table: FTable,
    /// Rounds of the accepted attempt.
    pub rounds: Vec<RoundLog>,
    /// Attempts used (1 unless verification forced a retry).
    pub attempts: usize,
}

/// `f^{≤2}`: the cheapest off-path edge `p_j → p_i`.
pub fn initial_hop_table(view: &GraphView<'_>, path: &PathSeq) -> HopBoundedF {
    let h = path.h();
    let mut values = vec![Dist::INF; h * h];
    for (j, &v) in path.vertices().iter().enumerate() {
        for e in view.out_edges(v) {
            if path.contains_edge(e.id) {
                continue;
            }
            if let Some(i) = path.position(e.head) {
                if i < j {
                    values[j * h + i] = values[j * h + i].min(Dist::finite(e.weight));
                }
            }
        }
    }
    HopBoundedF { ell: 2, table: FTable::from_values(h, values) }
}

/// Min-plus product of a `rows × inner` and an `inner × cols` matrix
/// (row-major), by the naive triple loop.
pub fn min_plus(left: &[Dist], right: &[Dist], rows: usize, inner: usize, cols: usize) -> Result<Vec<Dist>> {
    if left.len() != rows * inner {
        return Err(Error::DimensionMismatch { left: left.len(), right: rows * inner });
    }
    if right.len() != inner * cols {
        return Err(Error::DimensionMismatch { left: right.len(), right: inner * cols });
    }
    let mut out = vec![Dist::INF; rows * cols];
    for r in 0..rows {
        let row = &mut out[r * cols..(r + 1) * cols];
        for k in 0..inner {
            let x = left[r * inner + k];
            if x.is_inf() {
                continue;
            }
            for (c, slot) in row.iter_mut().enumerate() {
                let cand = x + right[k * cols + c];
                if cand < *slot {
                    *slot = cand;
                }
            }
        }
    }
    Ok(out)
}

/// The diamond product `A ⋄_ℓ B` of two `h × h` matrices indexed by path
/// positions (row-major, entry `(j, i)` at `j * h + i`).
///
/// For `j > i` the entry is the minimum of `A(j,i)`, `B(j,i)` and
/// `B(j,k) + d_G(p_k, p_{k'}) + A(k',i)` over `i < k < k' < j` with
/// `k' − k < ℓ`; for `j ≤ i` it is `d_G(p_j, p_i)` along the path.
///
/// The combined term is evaluated as one min-plus product over the
/// expanded index of admissible pairs `(k, k')`.
pub fn diamond(a: &[Dist], b: &[Dist], h: usize, ell: usize, prefix: &[i64]) -> Result<Vec<Dist>> {
    for len in [a.len(), b.len()] {
        if len != h * h {
            return Err(Error::DimensionMismatch { left: len, right: h * h });
        }
    }
    if prefix.len() != h {
        return Err(Error::DimensionMismatch { left: prefix.len(), right: h });
    }
    let pairs: Vec<(usize, usize)> =
        (0..h).flat_map(|k| (k + 1..h.min(k + ell.max(1))).map(move |k2| (k, k2))).collect();
    let p = pairs.len();
    let mut a_exp = vec![Dist::INF; p * h];
    for (row, &(k, k2)) in pairs.iter().enumerate() {
        let run = prefix[k2] - prefix[k];
        for i in 0..k {
            a_exp[row * h + i] = a[k2 * h + i].offset(run);
        }
    }
    let mut b_exp = vec![Dist::INF; h * p];
    for j in 0..h {
        for (col, &(k, k2)) in pairs.iter().enumerate() {
            if k2 < j {
                b_exp[j * p + col] = b[j * h + k];
            }
        }
    }
    let prod = min_plus(&b_exp, &a_exp, h, p, h)?;
    let mut out = vec![Dist::INF; h * h];
    for j in 0..h {
        for i in 0..h {
            let idx = j * h + i;
            out[idx] = if j > i { a[idx].min(b[idx]).min(prod[idx]) } else { Dist::finite(prefix[i] - prefix[j]) };
        }
    }
    Ok(out)
}

fn clamp_table(h: usize, values: Vec<Dist>, bound: i64) -> FTable {
    FTable::from_values(h, values.into_iter().map(|v| v.clamp_abs(bound)).collect())
}

/// `f^{≤ℓ'} = (f^{≤ℓ} ⋄_{ℓ'} d') ⋄_{ℓ'} f^{≤ℓ}` where `d'` is the off-path
/// distance matrix truncated to magnitude `ℓ' · M`.
///
/// `d_off` is the full `h × h` matrix `d_{G∖π}(p_j, p_i)`.
pub fn hop_short_round(
    f: &HopBoundedF,
    d_off: &[Dist],
    path: &PathSeq,
    m_bound: i64,
    ell_new: usize,
) -> Result<HopBoundedF> {
    let h = path.h();
    let bound = ell_new as i64 * m_bound;
    let truncated: Vec<Dist> = d_off.iter().map(|d| d.clamp_abs(bound)).collect();
    let fv = f.table.values();
    let inner = diamond(fv, &truncated, h, ell_new, path.prefix_dist())?;
    let outer = diamond(&inner, fv, h, ell_new, path.prefix_dist())?;
    Ok(HopBoundedF { ell: ell_new, table: clamp_table(h, outer, bound) })
}

/// One hitting-set round: every pair whose decomposable shortest path has
/// at most `ℓ'` vertices, one of which (in the middle third) lies in
/// `sample`, gets its exact value. Other entries keep the old value.
pub fn hop_long_round(
    f: &HopBoundedF,
    apsp: &OffPathApsp,
    path: &PathSeq,
    sample: &[VertexId],
    m_bound: i64,
    ell_new: usize,
) -> HopBoundedF {
    let h = path.h();
    let pre = path.prefix_dist();
    let fv = |j: usize, i: usize| f.table.get(j, i);
    let mut best: Vec<Dist> = f.table.values().to_vec();

    // The sampled vertex lies inside an on-path run a_k → b_k.
    let alpha: Vec<Rmq1D> = (0..h).map(|j| Rmq1D::build((0..h).map(|a| fv(j, a).offset(-pre[a])).collect())).collect();
    let beta: Vec<Rmq1D> = (0..h).map(|i| Rmq1D::build((0..h).map(|b| fv(b, i).offset(pre[b])).collect())).collect();
    for &x in sample {
        let Some(xp) = path.position(x) else { continue };
        for j in xp + 1..h {
            for i in 0..xp {
                let cand = alpha[j].min_or_inf(i + 1, xp) + beta[i].min_or_inf(xp, j - 1);
                let slot = &mut best[j * h + i];
                if cand < *slot {
                    *slot = cand;
                }
            }
        }
    }

    // The sampled vertex lies on an off-path segment b_{k−1} → a_k.
    let mut to_x = vec![Dist::INF; h * h];
    let mut from_x = vec![Dist::INF; h * h];
    for &x in sample {
        let gamma = Rmq1D::build((0..h).map(|b| apsp.from_path(b, x).offset(pre[b])).collect());
        let delta = Rmq1D::build((0..h).map(|a| apsp.to_path(x, a).offset(-pre[a])).collect());
        // to_x(j, i): p_j → x allowed to use π only strictly between p_i and p_j.
        for j in 0..h {
            let mut cur = apsp.from_path(j, x);
            for i in (0..j).rev() {
                let a = i + 1;
                if a < j {
                    let t = fv(j, a).offset(-pre[a]) + gamma.min_or_inf(a + 1, j - 1);
                    cur = cur.min(t);
                }
                to_x[j * h + i] = cur;
            }
        }
        // from_x(j, i): x → p_i with the same restriction.
        for i in 0..h {
            let mut cur = apsp.to_path(x, i);
            for j in i + 1..h {
                let b = j - 1;
                if b > i {
                    let u = fv(b, i).offset(pre[b]) + delta.min_or_inf(i + 1, b - 1);
                    cur = cur.min(u);
                }
                from_x[j * h + i] = cur;
            }
        }
        for j in 0..h {
            for i in 0..j {
                let cand = to_x[j * h + i] + from_x[j * h + i];
                let slot = &mut best[j * h + i];
                if cand < *slot {
                    *slot = cand;
                }
            }
        }
    }
    HopBoundedF { ell: ell_new, table: clamp_table(h, best, ell_new as i64 * m_bound) }
}

fn sample_size(n: usize, ell: usize, c: f64) -> usize {
    if n <= 1 {
        return n;
    }
    let raw = libm::ceil(c * n as f64 * libm::log(n as f64) / ell.max(1) as f64);
    (raw.max(0.0) as usize).min(n)
}

fn run_rounds(
    view: &GraphView<'_>,
    path: &PathSeq,
    apsp: &OffPathApsp,
    cfg: &ScaledConfig,
    seed: u64,
) -> Result<(FTable, Vec<RoundLog>)> {
    let n = view.n();
    let m_bound = cfg.m_bound.max(1);
    let crossover = cfg.crossover_for(n);
    let target = n.max(2);
    let d_off = apsp.path_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = initial_hop_table(view, path);
    let mut rounds = Vec::new();
    // Rounds continue until ℓ covers every simple path and one full-budget
    // round leaves the table unchanged.
    let mut settled = f.ell >= target && path.h() <= 2;
    let mut budget = n + 2;
    while !settled {
        let ell = f.ell;
        let ell_new = ell.saturating_mul(3).div_ceil(2).min(target).max(ell);
        let (next, kind, size) = if ell <= crossover {
            (hop_short_round(&f, &d_off, path, m_bound, ell_new)?, RoundKind::Short, 0)
        } else {
            let size = sample_size(n, ell, cfg.c);
            let sample: Vec<VertexId> = rand::seq::index::sample(&mut rng, n, size).into_vec();
            (hop_long_round(&f, apsp, path, &sample, m_bound, ell_new), RoundKind::Long, size)
        };
        let changed = next.table != f.table;
        rounds.push(RoundLog { ell: ell_new, kind, sample_size: size, changed });
        f = next;
        if f.ell >= target {
            settled = !changed;
            budget -= 1;
            if budget == 0 {
                break;
            }
        }
    }
    Ok((f.table, rounds))
}

/// `f` by hop-bounded rounds starting from `ℓ = 2` and growing `ℓ` by a
/// factor `3/2` (rounded up) until it reaches `n`.
///
/// With `cfg.verify` the result is compared with [`compute_f_dp`]; on a
/// mismatch (a hitting set that missed) the rounds are rerun with a fresh
/// seed up to `cfg.retries` times before failing.
pub fn compute_f_scaled(view: &GraphView<'_>, path: &PathSeq, cfg: &ScaledConfig) -> Result<ScaledReport> {
    if cfg.m_bound < 0 {
        return Err(Error::BadParameter(alloc::format!("weight bound {} is negative", cfg.m_bound)));
    }
    if let Some(e) = view.edges().find(|e| e.weight.abs() > cfg.m_bound) {
        return Err(Error::WeightOutOfRange { weight: e.weight, bound: cfg.m_bound });
    }
    let apsp = OffPathApsp::build(view, path);
    let reference = cfg.verify.then(|| compute_f_dp(path, &apsp));
    let mut attempts = 0;
    loop {
        let seed = cfg.seed.wrapping_add((attempts as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        attempts += 1;
        let (table, rounds) = run_rounds(view, path, &apsp, cfg, seed)?;
        match &reference {
            Some(dp) if dp.values() != table.values() => {
                if attempts > cfg.retries {
                    return Err(Error::VerificationFailed { attempts });
                }
            }
            _ => return Ok(ScaledReport { table, rounds, attempts }),
        }
    }
}
