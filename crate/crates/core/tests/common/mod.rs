//! Seeded instance suites shared by the integration tests.
#![allow(dead_code)]

use frp_core::oracle::gen;
use frp_core::{Graph, VertexId};
use rand::Rng;

/// One generated instance with its generator settings.
pub struct Instance {
    pub seed: u64,
    pub graph: Graph,
    pub s: VertexId,
    pub t: VertexId,
}

/// `count` instances with `n ∈ [lo_n, hi_n]`, edge probability drawn from
/// `probs` and weights in `[lo, hi]`. Seeds whose source reaches nothing
/// are skipped and redrawn.
pub fn suite(
    count: usize,
    base_seed: u64,
    (lo_n, hi_n): (usize, usize),
    probs: &[f64],
    (lo, hi): (i64, i64),
) -> Vec<Instance> {
    let mut out = Vec::with_capacity(count);
    let mut seed = base_seed;
    while out.len() < count {
        let mut rng = gen::rng(seed);
        let n = rng.random_range(lo_n..=hi_n);
        let p = probs[rng.random_range(0..probs.len())];
        if let Some((graph, s, t)) = gen::random_instance(&mut rng, n, p, lo, hi) {
            out.push(Instance { seed, graph, s, t });
        }
        seed += 1;
    }
    out
}
