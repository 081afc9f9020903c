mod common;

use frp_core::backwards_f::{compute_f_dp, OffPathApsp};
use frp_core::fixtures::cex;
use frp_core::frp_weighted::{
    enumerate_query_pairs, f_frp, report_path, solve_avoid_middle, solve_uses_middle, two_frp, CaseTag, TwoFaultTable,
    TwoFrpSolver,
};
use frp_core::graph_core::{shortest_path, Dist, Graph, GraphView, VertexId};
use frp_core::oracle::{brute_dist, brute_two_fault_table, gen};
use frp_core::Error;
use proptest::prelude::*;

fn d(v: i64) -> Dist {
    Dist::finite(v)
}

/// Every stored key of the oracle is stored by `table` with the same value,
/// and vice versa.
fn assert_tables_equal(label: &str, table: &TwoFaultTable, oracle: &TwoFaultTable) {
    let got: Vec<_> = table.entries().map(|(k, e)| (k, e.d)).collect();
    let want: Vec<_> = oracle.entries().map(|(k, e)| (k, e.d)).collect();
    if got != want {
        let first = got.iter().zip(&want).find(|(a, b)| a != b);
        panic!("{label}: tables differ (sizes {} vs {}), first difference {first:?}", got.len(), want.len());
    }
    assert_eq!(table.base, oracle.base, "{label}");
    assert_eq!(table.single, oracle.single, "{label}");
}

#[test]
fn cex_entry_and_report() {
    let g = cex();
    let table = two_frp(&g.view(), 0, 5).unwrap();
    assert_eq!(table.lookup(0, 4), d(6));
    assert_eq!(table.lookup(4, 0), d(6));
    let path = report_path(&g.view(), 0, 5, 0, 4).unwrap();
    assert_eq!(path.vertices(), &[0, 3, 4, 1, 2, 5]);
    assert_eq!(path.length(), 6);
    assert_tables_equal("cex", &table, &brute_two_fault_table(&g.view(), 0, 5).unwrap());
}

#[test]
fn cex_pair_enumeration() {
    let g = cex();
    let p = shortest_path(&g.view(), 0, 5).unwrap();
    let (pairs, detours) = enumerate_query_pairs(&g.view(), &p);
    assert_eq!(detours.len(), 5);
    let second: Vec<_> = pairs.iter().filter(|(e1, _)| *e1 == 0).map(|&(_, e2)| e2).collect();
    // π_{G∖(0,1)} = 0 → 3 → 4 → 5.
    assert_eq!(second, vec![5, 3, 4]);
    assert!(pairs.len() <= (p.h() - 2) * (g.n() - 1) + (g.n() - 1));

    let path_only = Graph::new(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
    let p = shortest_path(&path_only.view(), 0, 2).unwrap();
    assert!(enumerate_query_pairs(&path_only.view(), &p).0.is_empty());
}

#[test]
fn cex_case_solvers() {
    let g = cex();
    let p = shortest_path(&g.view(), 0, 5).unwrap();
    let apsp = OffPathApsp::build(&g.view(), &p);
    let f = compute_f_dp(&p, &apsp);
    let edges = p.h() - 1;
    let avoid = solve_avoid_middle(&p, &apsp);
    let uses = solve_uses_middle(&p, &apsp, &f);
    // e1 = (0,1) at position 0, e2 = (4,5) at position 4.
    assert_eq!(avoid[4], Dist::INF);
    assert_eq!(uses[4], d(6));
    assert_eq!(avoid.len(), edges * edges);
}

#[test]
fn single_off_path_edge_is_the_only_way() {
    // s → t directly with weight 9, plus the path s → a → b → t.
    let g = Graph::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 9)]).unwrap();
    let p = shortest_path(&g.view(), 0, 3).unwrap();
    let avoid = solve_avoid_middle(&p, &OffPathApsp::build(&g.view(), &p));
    let edges = p.h() - 1;
    for i in 0..edges {
        for j in i + 1..edges {
            assert_eq!(avoid[i * edges + j], d(9));
        }
    }
    let table = two_frp(&g.view(), 0, 3).unwrap();
    assert_eq!(table.lookup(0, 2), d(9));
}

#[test]
fn unreachable_target_is_an_error() {
    let g = Graph::new(3, [(0, 1, 1)]).unwrap();
    assert!(matches!(two_frp(&g.view(), 0, 2), Err(Error::Unreachable { s: 0, t: 2 })));
}

fn check_instance(label: &str, v: &GraphView<'_>, s: VertexId, t: VertexId) {
    let mut solver = TwoFrpSolver::new(v, s, t).unwrap();
    let table = solver.table().unwrap();
    let oracle = brute_two_fault_table(v, s, t).unwrap();
    assert_tables_equal(label, &table, &oracle);
    let g = v.graph();
    for ((e1, e2), entry) in table.entries() {
        // Monotone under removal.
        assert!(entry.d >= table.lookup_single(e1), "{label} ({e1},{e2})");
        assert!(table.lookup_single(e1) >= table.base);
        if entry.d.is_inf() {
            assert!(matches!(solver.report(&table, e1, e2), Err(Error::NoFiniteEntry { .. })));
            continue;
        }
        let path = solver.report(&table, e1, e2).unwrap();
        assert_eq!(path.source(), s);
        assert_eq!(path.target(), t);
        assert_eq!(Dist::finite(path.length()), entry.d, "{label} ({e1},{e2}) via {:?}", entry.case);
        assert!(!path.contains_edge(e1) && !path.contains_edge(e2), "{label} ({e1},{e2})");
        assert!(path.edge_ids().iter().all(|&e| v.contains(e) && e < g.m()));
    }
}

#[test]
fn random_suite_matches_oracle() {
    for inst in common::suite(60, 11_000, (6, 40), &[0.2, 0.5], (-4, 10)) {
        check_instance(&format!("seed {}", inst.seed), &inst.graph.view(), inst.s, inst.t);
    }
}

#[test]
fn every_pair_on_small_graphs() {
    for inst in common::suite(25, 12_000, (5, 10), &[0.3, 0.5], (-3, 6)) {
        let v = inst.graph.view();
        let table = two_frp(&v, inst.s, inst.t).unwrap();
        let m = inst.graph.m();
        for e1 in 0..m {
            for e2 in 0..m {
                assert_eq!(
                    table.lookup(e1, e2),
                    brute_dist(&v, inst.s, inst.t, &[e1, e2]),
                    "seed {} ({e1},{e2}) via {:?}",
                    inst.seed,
                    table.resolve(e1, e2).case
                );
            }
        }
    }
}

#[test]
fn every_case_appears() {
    let mut seen = std::collections::BTreeSet::new();
    for inst in common::suite(40, 13_000, (10, 30), &[0.2, 0.5], (-4, 10)) {
        let table = two_frp(&inst.graph.view(), inst.s, inst.t).unwrap();
        seen.extend(table.entries().map(|(_, e)| e.case));
    }
    for case in [CaseTag::OneOff, CaseTag::AvoidMiddle, CaseTag::UsesMiddle] {
        assert!(seen.contains(&case), "{case} never decided an entry");
    }
}

#[test]
fn case_names_round_trip() {
    for case in [
        CaseTag::OneOff,
        CaseTag::AvoidMiddle,
        CaseTag::UsesMiddle,
        CaseTag::SameAsSingleFault,
        CaseTag::Trivial,
        CaseTag::SameInterval,
        CaseTag::DiffIntervalsGood,
        CaseTag::DiffIntervalsReverse,
        CaseTag::Oracle,
    ] {
        assert_eq!(CaseTag::from_name(case.name()), Some(case));
        assert_eq!(case.to_string(), case.name());
    }
    assert_eq!(CaseTag::DiffIntervalsGood.name(), "DiffIntervals(Good)");
}

#[test]
fn ffrp_two_faults_is_two_frp() {
    let g = cex();
    let tree = f_frp(&g.view(), 0, 5, 2).unwrap();
    let table = two_frp(&g.view(), 0, 5).unwrap();
    for e1 in 0..g.m() {
        for e2 in 0..g.m() {
            assert_eq!(tree.lookup(&[e1, e2]), table.lookup(e1, e2));
        }
    }
    assert!(matches!(f_frp(&g.view(), 0, 5, 1), Err(Error::BadParameter(_))));
}

fn check_triples(label: &str, g: &Graph, s: VertexId, t: VertexId) -> usize {
    let v = g.view();
    let tree = f_frp(&v, s, t, 3).unwrap();
    let mut checked = 0;
    for (key, dist) in tree.entries() {
        assert_eq!(dist, brute_dist(&v, s, t, &key), "{label} {key:?}");
        checked += 1;
    }
    checked
}

#[test]
fn ffrp_three_faults_on_cex() {
    let g = cex();
    assert!(check_triples("cex", &g, 0, 5) > 0);
    let tree = f_frp(&g.view(), 0, 5, 3).unwrap();
    for a in 0..g.m() {
        for b in 0..g.m() {
            for c in 0..g.m() {
                assert_eq!(tree.lookup(&[a, b, c]), brute_dist(&g.view(), 0, 5, &[a, b, c]), "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn ffrp_three_faults_random() {
    let mut total = 0;
    for inst in common::suite(15, 14_000, (6, 18), &[0.2, 0.4], (-4, 10)) {
        total += check_triples(&format!("seed {}", inst.seed), &inst.graph, inst.s, inst.t);
    }
    assert!(total > 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn two_frp_matches_oracle(seed in any::<u64>(), n in 4usize..18, p in 0.15f64..0.6) {
        let mut rng = gen::rng(seed);
        if let Some((g, s, t)) = gen::random_instance(&mut rng, n, p, -4, 10) {
            let v = g.view();
            let table = two_frp(&v, s, t).unwrap();
            let oracle = brute_two_fault_table(&v, s, t).unwrap();
            for ((e1, e2), entry) in oracle.entries() {
                prop_assert_eq!(table.lookup(e1, e2), entry.d);
                // Neither case solver undercuts the truth.
                let got = table.get(e1, e2).unwrap();
                prop_assert!(got.d >= entry.d);
            }
        }
    }
}
