mod common;

use proptest::prelude::*;

use common::{brute_force_tp, structured_graph};
use tpkernel::comb::*;
use tpkernel::generate::{gen_tp_graph, GenSpec};
use tpkernel::matching::max_anti_matching;
use tpkernel::recognition::{build_ucd, is_trivially_perfect, validate_ucd};
use tpkernel::Graph;

fn tp_graph(seed: u64, n: usize, max_bag: usize, root_prob: f64) -> Graph {
    let mut spec = GenSpec::new(seed, n);
    spec.max_bag = max_bag;
    spec.root_prob = root_prob;
    gen_tp_graph(&spec).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_graphs_are_tp(seed in any::<u64>(), n in 1usize..40, bag in 1usize..4, p in 0.0f64..0.5) {
        let g = tp_graph(seed, n, bag, p);
        prop_assert_eq!(g.n(), n);
        prop_assert!(brute_force_tp(&g) || n > 14);
        prop_assert!(is_trivially_perfect(&g));
        prop_assert!(validate_ucd(&g, &build_ucd(&g).unwrap()));
        prop_assert_eq!(tp_graph(seed, n, bag, p), g);
    }

    #[test]
    fn every_root_to_leaf_path_gives_a_comb(seed in any::<u64>(), n in 2usize..40, bag in 1usize..4) {
        let g = tp_graph(seed, n, bag, 0.0);
        let d = build_ucd(&g).unwrap();
        for path in d.root_to_leaf_paths() {
            if let Ok(cb) = comb_from_ucd_path(&g, &d, &path) {
                prop_assert!(validate_comb(&g, &cb), "{}", cb.to_text());
                let again = canonical_comb(&g, &cb.shaft_vertices(), &cb.teeth_vertices());
                prop_assert_eq!(again.as_ref(), Some(&cb));
            } else {
                // only a clique has no off-path subtree below its root
                prop_assert_eq!(d.children(path[0]).len(), 0);
            }
        }
    }

    #[test]
    fn small_antimatching_comb_covers_the_graph(seed in any::<u64>(), n in 1usize..60, bag in 1usize..4) {
        let g = tp_graph(seed, n, bag, 0.0);
        let alpha = max_anti_matching(&g, &g.vertices()).unwrap().len();
        let cb = build_comb_small_antimatching(&g).unwrap();
        prop_assert_eq!(cb.shaft_vertices().union(&cb.teeth_vertices()), g.vertices());
        prop_assert!(cb.teeth_size() <= 4 * alpha);
        if alpha == 0 {
            prop_assert!(cb.is_degenerate());
        } else {
            prop_assert!(validate_comb(&g, &cb), "{}", cb.to_text());
        }
    }

    #[test]
    fn enumerated_combs_are_valid_and_canonical(seed in any::<u64>(), k in 0usize..3) {
        let g = structured_graph(seed, 12);
        for cb in enumerate_reducible_combs(&g, k) {
            prop_assert!(cb.len() >= 2);
            prop_assert!(validate_comb(&g, &cb));
            let again = canonical_comb(&g, &cb.shaft_vertices(), &cb.teeth_vertices());
            prop_assert_eq!(again.as_ref(), Some(&cb));
        }
        for m in reduction_modules(&g) {
            prop_assert!(tpkernel::decomposition::is_module(&g, &m));
            prop_assert!(is_trivially_perfect(&g.induced_subgraph(&m).unwrap().0));
        }
    }
}
