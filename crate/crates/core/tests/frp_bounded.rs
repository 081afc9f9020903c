mod common;

use std::collections::BTreeMap;

use frp_core::fixtures::cex;
use frp_core::frp_bounded::{default_interval_size, two_frp_bounded, BoundedDso, Interval, IntervalPartition};
use frp_core::frp_weighted::{enumerate_query_pairs, two_frp, CaseTag};
use frp_core::graph_core::{reverse, shortest_path, Dist, EdgeId, Graph};
use frp_core::oracle::{brute_dist, gen};
use frp_core::Error;
use proptest::prelude::*;

fn d(v: i64) -> Dist {
    Dist::finite(v)
}

#[test]
fn cex_intervals() {
    let g = cex();
    let dso = BoundedDso::precompute(&g.view(), 0, 5, 2).unwrap();
    assert_eq!(dso.partition().len(), 3);
    assert_eq!(
        dso.partition().intervals,
        vec![Interval { l: 0, r: 2 }, Interval { l: 2, r: 4 }, Interval { l: 4, r: 5 }]
    );
    assert_eq!(BoundedDso::precompute(&g.view(), 0, 5, 5).unwrap().partition().len(), 1);
    assert_eq!(BoundedDso::precompute(&g.view(), 0, 5, 1).unwrap().partition().len(), 5);
    assert!(matches!(BoundedDso::precompute(&g.view(), 0, 5, 0), Err(Error::BadParameter(_))));
}

#[test]
fn cex_stored_distances_match_brute() {
    let g = cex();
    let v = g.view();
    let dso = BoundedDso::precompute(&v, 0, 5, 2).unwrap();
    let p = dso.path().clone();
    assert_eq!(dso.base(), d(0));
    for &e in p.edge_ids() {
        assert_eq!(dso.single(e), brute_dist(&v, 0, 5, &[e]));
        for &x in p.vertices() {
            assert_eq!(dso.single_to_t(x, e), brute_dist(&v, x, 5, &[e]));
        }
    }
    let pi: Vec<EdgeId> = p.edge_ids().to_vec();
    let off: Vec<EdgeId> = (0..g.m()).filter(|e| !p.contains_edge(*e)).collect();
    for (k, iv) in dso.partition().intervals.iter().enumerate() {
        let cut: Vec<EdgeId> = pi[iv.l..iv.r].to_vec();
        let (l, r) = (p.vertex(iv.l), p.vertex(iv.r));
        for x in iv.l..=iv.r {
            let u = p.vertex(x);
            for e in [None, Some(pi[iv.l])] {
                let with = |extra: Option<EdgeId>| cut.iter().copied().chain(extra).collect::<Vec<_>>();
                assert_eq!(dso.interval_from_s(k, u, e), brute_dist(&v, 0, u, &with(e)), "from_s k{k} u{u}");
                assert_eq!(dso.interval_to_t(k, u, e), brute_dist(&v, u, 5, &with(e)), "to_t k{k} u{u}");
                assert_eq!(dso.interval_from_r(k, u, e), brute_dist(&v, r, u, &with(e)), "from_r k{k} u{u}");
                assert_eq!(dso.interval_to_l(k, u, e), brute_dist(&v, u, l, &with(e)), "to_l k{k} u{u}");
            }
            for y in iv.l..=iv.r {
                let w = p.vertex(y);
                for e in off.iter().map(|&e| Some(e)).chain([None]) {
                    let removed: Vec<_> = pi.iter().copied().chain(e).collect();
                    assert_eq!(dso.off_path_avoiding(u, w, e), brute_dist(&v, u, w, &removed));
                }
            }
        }
    }
}

#[test]
fn cex_queries() {
    let g = cex();
    for gp in [1, 2, 5] {
        let dso = BoundedDso::precompute(&g.view(), 0, 5, gp).unwrap();
        assert_eq!(dso.query(0, 4), d(6), "g = {gp}");
        assert_eq!(dso.query(4, 0), d(6), "g = {gp}");
        assert_eq!(dso.query(6, 7), d(0));
        assert_eq!(dso.query_traced(6, 7).case, CaseTag::Trivial);
        assert_eq!(dso.query_one_off(0, 6).unwrap(), brute_dist(&g.view(), 0, 5, &[0, 6]));
        assert_eq!(dso.query_traced(6, 0).case, CaseTag::OneOff);
    }
    let single = BoundedDso::precompute(&g.view(), 0, 5, 5).unwrap();
    assert_eq!(single.query_traced(0, 4).case, CaseTag::SameInterval);
    assert_eq!(single.query_same_interval(0, 4).unwrap(), d(6));
    assert!(matches!(single.query_diff_intervals(0, 4), Err(Error::WrongCase(_))));
    let split = BoundedDso::precompute(&g.view(), 0, 5, 2).unwrap();
    assert_eq!(split.query_diff_intervals(0, 4).unwrap(), d(6));
    assert!(matches!(split.query_traced(0, 4).case, CaseTag::DiffIntervalsGood | CaseTag::DiffIntervalsReverse));
    assert!(matches!(split.query_same_interval(0, 4), Err(Error::WrongCase(_))));
    assert!(matches!(split.query_one_off(0, 4), Err(Error::WrongCase(_))));
    // Adjacent path edges with every detour gone.
    let path = Graph::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
    let dso = BoundedDso::precompute(&path.view(), 0, 3, 3).unwrap();
    assert_eq!(dso.query_same_interval(0, 1).unwrap(), Dist::INF);
}

#[test]
fn unreachable_failure_is_irrelevant() {
    let g = Graph::new(8, cex().edges().iter().map(|e| (e.tail, e.head, e.weight)).chain([(6, 7, 1)])).unwrap();
    let dso = BoundedDso::precompute(&g.view(), 0, 5, 2).unwrap();
    for e1 in 0..5 {
        assert_eq!(dso.query_one_off(e1, 9).unwrap(), dso.single(e1));
    }
}

#[test]
fn weights_above_the_bound_are_rejected() {
    let g = cex();
    assert!(matches!(two_frp_bounded(&g.view(), 0, 5, 1, None), Err(Error::WeightOutOfRange { weight: 2, bound: 1 })));
}

#[test]
fn cex_table_matches_weighted_solver() {
    let g = cex();
    let weighted = two_frp(&g.view(), 0, 5).unwrap();
    for gp in [None, Some(1), Some(2), Some(5)] {
        let bounded = two_frp_bounded(&g.view(), 0, 5, 2, gp).unwrap();
        let a: Vec<_> = bounded.entries().map(|(k, e)| (k, e.d)).collect();
        let b: Vec<_> = weighted.entries().map(|(k, e)| (k, e.d)).collect();
        assert_eq!(a, b, "g = {gp:?}");
        assert_eq!(bounded.single, weighted.single);
    }
}

#[test]
fn default_interval_sizes() {
    assert_eq!(default_interval_size(0), 1);
    assert_eq!(default_interval_size(1), 1);
    assert_eq!(default_interval_size(8), 4);
    assert_eq!(default_interval_size(27), 9);
}

/// The pairs a sweep asks about: the enumerated ones, both orders, plus a
/// few with neither edge on the path.
fn sweep_pairs(g: &Graph, pairs: &[(EdgeId, EdgeId)], on: impl Fn(EdgeId) -> bool) -> Vec<(EdgeId, EdgeId)> {
    let off: Vec<_> = (0..g.m()).filter(|&e| !on(e)).collect();
    let mut out: Vec<_> = pairs.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    out.extend(off.windows(2).take(3).map(|w| (w[0], w[1])));
    out.sort_unstable();
    out.dedup();
    out
}

#[test]
fn random_sweep_by_branch() {
    let mut by_case: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut worst_ratio = 0.0f64;
    for inst in common::suite(30, 21_000, (6, 40), &[0.2, 0.5], (-4, 4)) {
        let v = inst.graph.view();
        let p = shortest_path(&v, inst.s, inst.t).unwrap();
        let h = p.h();
        let n = inst.graph.n();
        let (pairs, _) = enumerate_query_pairs(&v, &p);
        let queries = sweep_pairs(&inst.graph, &pairs, |e| p.contains_edge(e));
        let rev = reverse(&inst.graph);
        let rev_path = p.reversed(&rev);
        let sizes = [1, 2, (n as f64).sqrt().ceil() as usize, n.div_ceil(2), h];
        for gp in sizes {
            let dso = BoundedDso::with_path(&v, p.clone(), gp).unwrap();
            let mirror = BoundedDso::with_partition(&rev.view(), rev_path.clone(), dso.partition().mirrored()).unwrap();
            for &(e1, e2) in &queries {
                let want = brute_dist(&v, inst.s, inst.t, &[e1, e2]);
                let out = dso.query_traced(e1, e2);
                assert_eq!(out.d, want, "seed {} g {gp} ({e1},{e2}) via {}", inst.seed, out.case);
                *by_case.entry(out.case.name()).or_default() += 1;
                if let Ok((good, back)) = dso.diff_parts(e1, e2) {
                    assert!(good >= want && back >= want);
                    let (mgood, mback) = mirror.diff_parts(e1, e2).unwrap();
                    assert_eq!(mgood, back, "seed {} g {gp} ({e1},{e2}) mirrored", inst.seed);
                    assert_eq!(mback, good, "seed {} g {gp} ({e1},{e2}) mirrored", inst.seed);
                }
                let side = (gp + 2) as f64;
                worst_ratio = worst_ratio.max(out.stats.aux_edges as f64 / (side * side));
                // At most two auxiliary graphs (forward and mirrored), each on
                // s, t and two intervals of at most g + 1 vertices.
                assert!(
                    out.stats.aux_vertices <= 4 * (gp + 2),
                    "{} vertices for g {gp} via {}",
                    out.stats.aux_vertices,
                    out.case
                );
            }
        }
    }
    for case in ["Trivial", "OneOff", "SameInterval", "DiffIntervals(Good)"] {
        assert!(by_case.get(case).copied().unwrap_or(0) > 0, "{case} never dispatched: {by_case:?}");
    }
    // Each auxiliary graph has O(g) vertices and at most a few edges per
    // vertex pair.
    assert!(worst_ratio <= 12.0, "aux edges / (g+2)² reached {worst_ratio}");
}

#[test]
fn bounded_table_matches_weighted_table() {
    for inst in common::suite(20, 22_000, (6, 30), &[0.2, 0.5], (-4, 4)) {
        let v = inst.graph.view();
        let weighted = two_frp(&v, inst.s, inst.t).unwrap();
        let bounded = two_frp_bounded(&v, inst.s, inst.t, 4, None).unwrap();
        let a: Vec<_> = bounded.entries().map(|(k, e)| (k, e.d)).collect();
        let b: Vec<_> = weighted.entries().map(|(k, e)| (k, e.d)).collect();
        assert_eq!(a, b, "seed {}", inst.seed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn partitions_cover_path_edges(h in 1usize..60, g in 1usize..20) {
        let p = IntervalPartition::new(h, g).unwrap();
        let edges = h.saturating_sub(1);
        let mut next = 0;
        for iv in &p.intervals {
            prop_assert_eq!(iv.l, next);
            prop_assert!(iv.edges() >= 1 && iv.edges() <= g);
            next = iv.r;
        }
        prop_assert_eq!(next, edges);
        for x in 0..edges {
            let k = p.interval_of(x);
            prop_assert!(p.intervals[k].owns_edge(x));
            prop_assert_eq!(p.intervals.iter().filter(|iv| iv.owns_edge(x)).count(), 1);
        }
        prop_assert_eq!(p.mirrored().mirrored(), p);
    }

    #[test]
    fn queries_match_brute(seed in any::<u64>(), n in 4usize..20, p in 0.15f64..0.5, gp in 1usize..6) {
        let mut rng = gen::rng(seed);
        if let Some((g, s, t)) = gen::random_instance(&mut rng, n, p, -4, 4) {
            let v = g.view();
            let dso = BoundedDso::precompute(&v, s, t, gp).unwrap();
            let path = dso.path().clone();
            let (pairs, _) = enumerate_query_pairs(&v, &path);
            for (e1, e2) in sweep_pairs(&g, &pairs, |e| path.contains_edge(e)) {
                prop_assert_eq!(dso.query(e1, e2), brute_dist(&v, s, t, &[e1, e2]));
            }
        }
    }
}
