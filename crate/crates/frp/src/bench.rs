//! Timing sweeps and the CSV they produce.

use std::time::Instant;

use frp_core::frp_bounded::BoundedDso;
use frp_core::frp_weighted::{enumerate_query_pairs, two_frp};
use frp_core::graph_core::{Graph, VertexId};
use frp_core::oracle::gen;
use rand::Rng;

/// CSV header written by [`to_csv`].
pub const CSV_HEADER: &str = "n,algorithm,g,wall_ms,queries";

/// What a row measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    /// The full two-fault table on a dense random digraph.
    #[value(name = "2frp")]
    TwoFrp,
    /// Building the bounded-weight structure on a long-path graph.
    #[value(name = "frp-bounded-precompute")]
    BoundedPrecompute,
    /// Answering sampled pairs with the bounded-weight structure.
    #[value(name = "frp-bounded-query")]
    BoundedQuery,
}

impl Algorithm {
    /// Name used in the CSV.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::TwoFrp => "2frp",
            Algorithm::BoundedPrecompute => "frp-bounded-precompute",
            Algorithm::BoundedQuery => "frp-bounded-query",
        }
    }
}

/// Sweep parameters.
#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub algorithms: Vec<Algorithm>,
    /// Interval sizes for the bounded rows.
    pub g_values: Vec<usize>,
    /// Edge probability of the dense graphs.
    pub p: f64,
    /// Weight range of the dense graphs.
    pub w: (i64, i64),
    /// Runs per row; the median is reported.
    pub reps: usize,
    /// Pairs answered per bounded query row.
    pub max_queries: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![64, 128, 256],
            algorithms: vec![Algorithm::TwoFrp, Algorithm::BoundedPrecompute, Algorithm::BoundedQuery],
            g_values: vec![2, 8, 32],
            p: 0.5,
            w: (-4, 10),
            reps: 3,
            max_queries: 200,
            seed: 0,
        }
    }
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub algorithm: Algorithm,
    pub g: Option<usize>,
    /// Median wall time over the repetitions, in milliseconds.
    pub wall_ms: f64,
    /// Queries answered per run (table entries for `2frp`).
    pub queries: usize,
}

/// A digraph whose shortest `0 → n−1` path is the backbone `0 → 1 → … → n−1`
/// of unit edges, with short forward chords that are strictly longer than
/// the backbone stretch they skip and short backward chords. Every weight
/// lies in `1..=7`, and `h = n − 1`, so interval sizes actually matter.
pub fn backbone_instance(n: usize, seed: u64) -> (Graph, VertexId, VertexId) {
    assert!(n >= 2, "a backbone needs two vertices");
    let mut rng = gen::rng(seed);
    let mut edges: Vec<(usize, usize, i64)> = (0..n - 1).map(|u| (u, u + 1, 1)).collect();
    for u in 0..n {
        for span in 2..=4 {
            if u + span < n && rng.random_bool(0.5) {
                edges.push((u, u + span, span as i64 + rng.random_range(1..=3)));
            }
        }
        if u >= 1 && rng.random_bool(0.5) {
            let span = rng.random_range(1..=u.min(8));
            edges.push((u, u - span, rng.random_range(1..=4)));
        }
    }
    let g = Graph::new(n, edges).expect("positive weights admit no negative cycle");
    (g, 0, n - 1)
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k == 0 {
        0.0
    } else if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

fn timed<R>(f: impl FnOnce() -> R) -> (f64, R) {
    let start = Instant::now();
    let r = f();
    (start.elapsed().as_secs_f64() * 1e3, r)
}

/// A dense instance of size exactly `n` whose target is reachable.
pub fn dense_instance(n: usize, p: f64, w: (i64, i64), seed: u64) -> (Graph, VertexId, VertexId) {
    (0..)
        .find_map(|k: u64| gen::random_instance(&mut gen::rng(seed.wrapping_add(k)), n, p, w.0, w.1))
        .expect("some seed yields a reachable target")
}

/// Runs the sweep. Rows come in `sizes × algorithms (× g)` order.
pub fn run(cfg: &BenchConfig) -> Vec<BenchRow> {
    let reps = cfg.reps.max(1);
    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        for &algorithm in &cfg.algorithms {
            match algorithm {
                Algorithm::TwoFrp => {
                    let (g, s, t) = dense_instance(n, cfg.p, cfg.w, cfg.seed ^ n as u64);
                    let mut queries = 0;
                    let times = (0..reps)
                        .map(|_| {
                            let (ms, table) = timed(|| two_frp(&g.view(), s, t).expect("target is reachable"));
                            queries = table.len();
                            ms
                        })
                        .collect();
                    rows.push(BenchRow { n, algorithm, g: None, wall_ms: median(times), queries });
                }
                Algorithm::BoundedPrecompute | Algorithm::BoundedQuery => {
                    let (graph, s, t) = backbone_instance(n, cfg.seed ^ n as u64);
                    let view = graph.view();
                    for &g in &cfg.g_values {
                        rows.push(bounded_row(&view, s, t, n, g, algorithm, reps, cfg.max_queries));
                    }
                }
            }
        }
    }
    rows
}

#[allow(clippy::too_many_arguments)]
fn bounded_row(
    view: &frp_core::GraphView<'_>,
    s: VertexId,
    t: VertexId,
    n: usize,
    g: usize,
    algorithm: Algorithm,
    reps: usize,
    max_queries: usize,
) -> BenchRow {
    let build = || BoundedDso::precompute(view, s, t, g).expect("target is reachable");
    if algorithm == Algorithm::BoundedPrecompute {
        let times = (0..reps).map(|_| timed(build).0).collect();
        return BenchRow { n, algorithm, g: Some(g), wall_ms: median(times), queries: 0 };
    }
    let dso = build();
    let (pairs, _) = enumerate_query_pairs(view, dso.path());
    let step = pairs.len().div_ceil(max_queries.max(1)).max(1);
    let sample: Vec<_> = pairs.iter().step_by(step).copied().collect();
    let times = (0..reps)
        .map(|_| {
            timed(|| {
                for &(e1, e2) in &sample {
                    std::hint::black_box(dso.query(e1, e2));
                }
            })
            .0
        })
        .collect();
    BenchRow { n, algorithm, g: Some(g), wall_ms: median(times), queries: sample.len() }
}

/// Renders rows as CSV, header first.
pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in rows {
        let g = r.g.map_or(String::new(), |g| g.to_string());
        out.push_str(&format!("{},{},{},{:.3},{}\n", r.n, r.algorithm.name(), g, r.wall_ms, r.queries));
    }
    out
}

/// Least-squares slope of `ln y` against `ln x`; `None` with fewer than two
/// distinct positive points.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    let k = pts.len() as f64;
    if pts.len() < 2 {
        return None;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use frp_core::graph_core::shortest_path;

    #[test]
    fn slope_of_a_power_law() {
        let pts: Vec<_> = [2.0f64, 4.0, 8.0].iter().map(|&x| (x, 5.0 * x.powi(3))).collect();
        assert!((loglog_slope(&pts).unwrap() - 3.0).abs() < 1e-9);
        assert_eq!(loglog_slope(&[(1.0, 1.0)]), None);
    }

    #[test]
    fn empty_sweep_is_header_only() {
        let cfg = BenchConfig { sizes: vec![], ..BenchConfig::default() };
        assert_eq!(to_csv(&run(&cfg)), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn backbone_is_the_shortest_path() {
        for seed in 0..5 {
            let (g, s, t) = backbone_instance(40, seed);
            let p = shortest_path(&g.view(), s, t).unwrap();
            assert_eq!(p.vertices(), (0..40).collect::<Vec<_>>());
            assert!(g.max_abs_weight() <= 7);
        }
    }
}
