use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ocm_core::control_matching::max_weight_matching_value;
use ocm_core::generate::{complete_bipartite, complete_graph, random_connected_graph, random_instance};
use ocm_core::graph::uniform_instance;
use ocm_core::io::{parse_edge_list, write_directed, write_undirected, write_weighted, EdgeListFile};
use ocm_core::oracles::{
    brute_2matching, brute_3dcc, brute_control_matching, brute_mwis, brute_weighted_control_matching,
    enumerate_orientations,
};
use ocm_core::reductions::{
    aocm_to_wis, build_gadget_f, check_lemma3, dcc3_to_aocm, decode_g, extract_cycle_cover, wis_to_aocm_solution,
};
use ocm_core::*;

fn digraph() -> impl Strategy<Value = Digraph> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=14).prop_map(move |raw| {
            let arcs: Vec<Arc> = raw.into_iter().filter(|(u, v)| u != v).collect();
            Digraph::new(n, &arcs).unwrap()
        })
    })
}

fn graph() -> impl Strategy<Value = UndirectedGraph> {
    (1usize..=7).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=12).prop_map(move |raw| {
            let edges: Vec<_> = raw.into_iter().filter(|(u, v)| u != v).collect();
            UndirectedGraph::new(n, &edges).unwrap()
        })
    })
}

fn instance() -> impl Strategy<Value = ExactInstance> {
    (any::<u64>(), 1usize..=6).prop_map(|(seed, n)| {
        random_instance(&mut ChaCha8Rng::seed_from_u64(seed), n, 10, -2, 6)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn control_matching_is_maximum(d in digraph()) {
        let m = max_control_matching(&d);
        prop_assert!(is_control_matching(d.node_count(), m.arcs()));
        prop_assert!(m.arcs().iter().all(|&(u, v)| d.has_arc(u, v)));
        prop_assert_eq!(m.value(), m.len());
        prop_assert_eq!(m.len(), brute_control_matching(&d).unwrap().value());
        prop_assert_eq!(driver_count(&d), 1.max(d.node_count() - m.len()));
    }

    #[test]
    fn adding_an_arc_never_shrinks_the_matching(d in digraph(), u in 0usize..6, v in 0usize..6) {
        let n = d.node_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let mut arcs = d.arcs().to_vec();
        arcs.push((u, v));
        let bigger = Digraph::new(n, &arcs).unwrap();
        prop_assert!(max_control_matching(&bigger).len() >= max_control_matching(&d).len());
    }

    #[test]
    fn uniform_weights_match_cardinality(g in graph(), seed in any::<u64>()) {
        let inst = uniform_instance::<i64>(&g);
        let o = generate::random_orientation(&mut ChaCha8Rng::seed_from_u64(seed), &g);
        let weighted = max_weight_control_matching(&inst, &o).unwrap();
        prop_assert_eq!(weighted.value() as usize, max_control_matching(&o).len());
    }

    #[test]
    fn weighted_matching_matches_oracle(inst in instance(), seed in any::<u64>()) {
        let o = generate::random_orientation(&mut ChaCha8Rng::seed_from_u64(seed), inst.graph());
        let m = max_weight_control_matching(&inst, &o).unwrap();
        prop_assert!(is_control_matching(inst.node_count(), m.arcs()));
        prop_assert_eq!(m.value(), brute_weighted_control_matching(&inst, &o).unwrap().value());
        prop_assert_eq!(m.value(), max_weight_matching_value(&inst, &o).unwrap());
        prop_assert!(m.value() >= 0);
    }

    #[test]
    fn ocm_is_optimal_over_all_orientations(g in graph()) {
        let sol = solve_ocm(&g);
        prop_assert!(validate_orientation(&g, &sol.orientation));
        prop_assert_eq!(sol.matching.len(), sol.two_matching.len());
        prop_assert_eq!(sol.two_matching.len(), brute_2matching(&g).unwrap());
        let best = enumerate_orientations(&g).unwrap().map(|o| max_control_matching(&o).len()).max().unwrap();
        prop_assert_eq!(sol.matching.len(), best);
        prop_assert_eq!(sol.driver_count(), 1.max(g.node_count() - best));
    }

    #[test]
    fn aocm_solvers_agree(inst in instance()) {
        let brute = solve_aocm_brute(&inst).unwrap();
        let exact = solve_aocm_exact(&inst).unwrap();
        let greedy = solve_aocm_greedy(&inst);
        prop_assert!(brute.is_consistent(&inst));
        prop_assert!(exact.is_consistent(&inst));
        prop_assert!(greedy.is_consistent(&inst));
        prop_assert_eq!(brute.value, exact.value);
        prop_assert!(greedy.value <= exact.value);
        let oracle = enumerate_orientations(inst.graph())
            .unwrap()
            .map(|o| brute_weighted_control_matching(&inst, &o).unwrap().value())
            .max()
            .unwrap();
        prop_assert_eq!(brute.value, oracle);
    }

    #[test]
    fn conflict_graph_optimum_is_aocm_optimum(inst in instance()) {
        let cg = aocm_to_wis(&inst);
        let (set, weight) = brute_mwis(cg.weights(), cg.edges()).unwrap();
        prop_assert!(cg.is_independent(&set));
        let sol = wis_to_aocm_solution(&cg, &set).unwrap();
        prop_assert!(sol.is_consistent(&inst));
        prop_assert_eq!(sol.value, weight);
        prop_assert_eq!(weight, solve_aocm_brute(&inst).unwrap().value);
    }

    #[test]
    fn cycle_cover_iff_value_n(d in digraph()) {
        let inst: ExactInstance = dcc3_to_aocm(&d);
        let sol = solve_aocm_exact(&inst).unwrap();
        let cover = extract_cycle_cover(&d, &sol).unwrap();
        let oracle = brute_3dcc(&d).unwrap();
        prop_assert_eq!(cover.is_some(), oracle.is_some());
        if let Some(c) = cover {
            prop_assert!(c.is_valid_for(&d));
        }
    }

    #[test]
    fn text_round_trip(g in graph(), d in digraph(), inst in instance()) {
        prop_assert_eq!(parse_edge_list::<f64>(&write_undirected(&g)).unwrap(), EdgeListFile::Undirected(g));
        let parsed = parse_edge_list::<f64>(&write_directed(&d)).unwrap();
        prop_assert_eq!(parsed, EdgeListFile::Directed { digraph: d, self_loops_dropped: 0 });
        prop_assert_eq!(parse_edge_list::<i64>(&write_weighted(&inst)).unwrap(), EdgeListFile::Weighted(inst));
    }

    #[test]
    fn rebuilding_is_idempotent(g in graph()) {
        let again = build_undirected(g.node_count(), g.edges()).unwrap();
        prop_assert_eq!(again.duplicates_collapsed, 0);
        prop_assert_eq!(again.graph, g);
    }

    #[test]
    fn gadget_bound_on_random_orientations(mask in any::<u64>(), bipartite in any::<bool>()) {
        let g = if bipartite { complete_bipartite(3, 3) } else { complete_graph(4) };
        let gi = build_gadget_f::<i64>(&g).unwrap();
        let o = Orientation::from_mask(gi.host().graph(), mask);
        let check = check_lemma3(&gi, &o).unwrap();
        prop_assert!(check.bound_holds);
        let decoded = decode_g(&gi, &o).unwrap();
        prop_assert!(g.is_independent_set(&decoded));
    }
}

#[test]
fn float_and_integer_weights_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n = 2 + (rand::Rng::gen_range(&mut rng, 0..5));
        let exact: ExactInstance = random_instance(&mut rng, n, 9, -3, 9);
        let weights = (0..exact.edge_count())
            .map(|i| exact.edge_weights(i).map(|w| w as f64 / 4.0))
            .collect();
        let float = Instance::new(exact.graph().clone(), weights).unwrap();
        let a = solve_aocm_exact(&exact).unwrap();
        let b = solve_aocm_exact(&float).unwrap();
        assert!((a.value as f64 / 4.0 - b.value).abs() < 1e-9);
        assert_eq!(a.orientation, b.orientation);
    }
}

#[test]
fn connected_generator_feeds_ocm() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let g = random_connected_graph(&mut rng, 7, 11);
        assert_eq!(solve_ocm(&g).two_matching.len(), brute_2matching(&g).unwrap());
    }
}
