use frp::formats::{load_undirected, write_undirected, FTableJson, LayoutJson, TableJson};
use frp::genspec::GenSpec;
use frp_core::backwards_f::{compute_f_dp, OffPathApsp};
use frp_core::fixtures::cex;
use frp_core::frp_weighted::two_frp;
use frp_core::graph_core::shortest_path;
use frp_core::lowerbound_gadget::{build_gadget, UndirectedGraph};
use frp_core::oracle::gen;
use frp_core::Error;
use proptest::prelude::*;

#[test]
fn undirected_parse_errors_name_the_line() {
    let cases = [
        ("", 1),
        ("3 1\n0 5\n", 2),
        ("3 2\n0 1\n", 3),
        ("3 1\n# comment\n1 1\n", 3),
        ("3 1\n0 1\n1 2\n", 3),
        ("3 1\n0 one\n", 2),
    ];
    for (text, line) in cases {
        match load_undirected(text) {
            Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn table_json_round_trip() {
    let g = cex();
    let table = two_frp(&g.view(), 0, 5).unwrap();
    let json = TableJson::new(&g, &table);
    let back: TableJson = serde_json::from_str(&serde_json::to_string(&json).unwrap()).unwrap();
    assert_eq!(back, json);
    assert_eq!(back.entries.len(), table.len());
    for ((e1, e2), entry) in table.entries() {
        assert_eq!(back.get(e1, e2), Some((entry.d, Some(entry.case))));
    }
}

#[test]
fn f_table_json_is_the_lower_triangle() {
    let g = cex();
    let path = shortest_path(&g.view(), 0, 5).unwrap();
    let f = compute_f_dp(&path, &OffPathApsp::build(&g.view(), &path));
    let json = FTableJson::from(&f);
    assert_eq!(json.h, f.h());
    assert_eq!(json.entries.len(), f.h() * (f.h() - 1) / 2);
    assert!(json.entries.iter().all(|e| e.j > e.i));
}

#[test]
fn layout_json_mirrors_the_layout() {
    let tri = UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
    let (g, layout) = build_gadget(&tri, 0, 4, 2).unwrap();
    let json = LayoutJson::from(&layout);
    assert_eq!((json.vertex_count, json.edge_count), (g.n(), g.m()));
    assert_eq!(json.chunk_edges.len(), layout.chunk_edges.len());
    assert_eq!((json.source, json.target), (layout.source, layout.target));
}

proptest! {
    #[test]
    fn undirected_round_trip(seed in any::<u64>(), n in 1usize..30, p in 0.0f64..1.0) {
        let g = gen::random_undirected(&mut gen::rng(seed), n, p);
        let text = write_undirected(&g);
        let back = load_undirected(&text).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn gen_spec_display_round_trip(
        lo in 1usize..50, span in 0usize..50, p in 0.0f64..1.0,
        wl in -20i64..20, ws in 0i64..20, seed in proptest::option::of(any::<u64>()),
    ) {
        let spec = GenSpec { n: (lo, lo + span), p, w: (wl, wl + ws), seed };
        prop_assert_eq!(spec.to_string().parse::<GenSpec>().unwrap(), spec);
    }

    #[test]
    fn generated_instances_reach_their_target(seed in any::<u64>(), n in 2usize..25, p in 0.05f64..0.6) {
        let spec = GenSpec { n: (n, n), p, w: (-3, 6), seed: None };
        let inst = spec.instance(seed).unwrap();
        prop_assert!(inst.graph.view().sssp(inst.s).dist[inst.t].is_finite());
        prop_assert_eq!(inst.graph.n(), n);
    }
}
