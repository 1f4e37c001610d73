use dsi_bounds::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, Family, Graph};
use dsi_bounds::harness::{
    corpus_scan, verify_domination_chain, verify_independence_chain, ChainOptions, ScanConfig,
};
use dsi_bounds::oracle::OracleConfig;
use proptest::prelude::*;

fn random_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (2..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn chain_holds_without_isolated_vertices(g in random_graph(10), j in 1usize..=3) {
        prop_assume!(g.min_degree() >= 1);
        let opts = ChainOptions { claw_p: Some(3), ..Default::default() };
        let r = verify_independence_chain(&g, j, &opts).unwrap();
        prop_assert!(r.passed(), "{} {:?}", r.graph6, r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn upper_side_holds_on_every_graph(g in random_graph(10), j in 1usize..=3) {
        let r = verify_independence_chain(&g, j, &ChainOptions::default()).unwrap();
        let bad: Vec<_> = r.failures().filter(|c| c.name != "c_weak<=c_j").collect();
        prop_assert!(bad.is_empty(), "{} {:?}", r.graph6, bad);
    }

    #[test]
    fn domination_chain_holds(g in random_graph(10), j in 1usize..=3) {
        let r = verify_domination_chain(&g, j, &OracleConfig::default()).unwrap();
        prop_assert!(r.passed(), "{} {:?}", r.graph6, r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn text_formats_round_trip(g in random_graph(12)) {
        prop_assert_eq!(&parse_graph6(&to_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_edge_list(&to_edge_list(&g)).unwrap(), &g);
    }
}

#[test]
fn report_from_graph6_text() {
    let g = parse_graph6(">>graph6<<Dhc").unwrap();
    let r = verify_independence_chain(&g, 1, &ChainOptions::default()).unwrap();
    let line = r.to_json_line();
    assert!(
        line.starts_with(r#"{"graph6":"Dhc","n":5,"m":5,"j":1,"alpha_j":2,"#),
        "{line}"
    );
    assert!(r.passed());
}

#[test]
fn scan_errors_name_the_offending_graph() {
    // order 2 with j = 1: only K_2 and E_2, and E_2 trips c' <= c_1
    let err = corpus_scan(&ScanConfig::new(2, vec![1])).unwrap_err();
    assert!(err.to_string().contains("A?"), "{err}");

    let mut cfg = ScanConfig::new(4, vec![1, 2]);
    cfg.domination = true;
    cfg.claw_p = Some(3);
    let s = dsi_bounds::harness::corpus_scan_collect(&cfg).unwrap();
    assert_eq!(s.graphs, 64);
    assert!(s.tightness["j=1:alpha_j==a_j"] > 0);
    assert!(s.violations.iter().all(|v| v.check == "c_weak<=c_j"));
}

#[test]
fn generated_families_pass_their_chains() {
    for family_spec in [
        "complete:5",
        "cycle:7",
        "path:6",
        "complete_split:3:4",
        "matched_cliques:4",
        "clique_union_join:2",
        "double_hub_wheel:2",
        "hub_attached_copies:1:2:2:1",
    ] {
        let family: Family = family_spec.parse().unwrap();
        let g = family.build().unwrap();
        let opts = ChainOptions {
            claw_p: Some(3),
            planar: family.planar_certificate(),
            ..Default::default()
        };
        for j in 1..=3 {
            let r = verify_independence_chain(&g, j, &opts).unwrap();
            assert!(
                r.passed(),
                "{family_spec} j={j}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
            let d = verify_domination_chain(&g, j, &OracleConfig::default()).unwrap();
            assert!(
                d.passed(),
                "{family_spec} j={j}: {:?}",
                d.failures().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn every_violator_has_an_isolated_vertex() {
    for n in 1..=5 {
        let mut cfg = ScanConfig::new(n, vec![1, 2, 3]);
        cfg.domination = true;
        cfg.claw_p = Some(3);
        let s = dsi_bounds::harness::corpus_scan_collect(&cfg).unwrap();
        for v in &s.violations {
            assert_eq!(v.check, "c_weak<=c_j");
            assert_eq!(parse_graph6(&v.graph6).unwrap().min_degree(), 0, "{v:?}");
        }
    }
}
