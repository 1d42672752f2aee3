use proptest::prelude::*;

use tpkernel::decomposition::is_module;
use tpkernel::generate::{gen_tp_graph, GenSpec};
use tpkernel::matching::anti_matching_up_to;
use tpkernel::recognition::is_trivially_perfect;
use tpkernel::solver::{blow_up, solve, solve_bruteforce};
use tpkernel::{Graph, Instance, Mode, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Editing), Just(Mode::Deletion), Just(Mode::Completion)]
}

fn clique_neighborhood_vertices(g: &Graph) -> Vec<usize> {
    g.vertices()
        .iter()
        .filter(|&u| g.is_clique(&g.closed_neighborhood(u)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn search_tree_matches_exhaustive_search(g in arb_graph(8), k in 0usize..=2, mode in arb_mode()) {
        let inst = Instance::new(g.clone(), k, mode);
        let fast = solve(&inst);
        let slow = solve_bruteforce(&inst);
        prop_assert_eq!(fast.is_yes(), slow.is_yes());
        for res in [fast, slow] {
            if let Some(w) = res.witness() {
                prop_assert!(w.len() <= k);
                prop_assert!(is_trivially_perfect(&g.apply_edits(w).unwrap()));
                match mode {
                    Mode::Deletion => prop_assert_eq!(w.additions().count(), 0),
                    Mode::Completion => prop_assert_eq!(w.deletions().count(), 0),
                    Mode::Editing => {}
                }
            }
        }
    }

    #[test]
    fn blowing_up_a_clique_neighborhood_vertex_stays_tp(
        seed in any::<u64>(),
        n in 1usize..15,
        m in 1usize..8,
        pick in any::<prop::sample::Index>(),
    ) {
        let g = gen_tp_graph(&GenSpec::new(seed, n)).unwrap();
        let h = gen_tp_graph(&GenSpec::new(seed ^ 0x5eed, m)).unwrap();
        let candidates = clique_neighborhood_vertices(&g);
        prop_assert!(!candidates.is_empty());
        let u = candidates[pick.index(candidates.len())];
        let b = blow_up(&g, u, &h).unwrap();
        prop_assert_eq!(b.n(), n - 1 + m);
        prop_assert_eq!(b.m(), g.m() - g.degree(u) + h.m() + g.degree(u) * m);
        prop_assert!(is_trivially_perfect(&b));
    }

    #[test]
    fn module_neighborhood_is_a_clique_after_editing(g in arb_graph(8), k in 0usize..=2) {
        // a module holding a (k+1)-anti-matching forces its neighborhood to
        // become a clique in every solution
        let inst = Instance::new(g.clone(), k, Mode::Editing);
        let Some(w) = solve_bruteforce(&inst).witness().cloned() else { return Ok(()) };
        let h = g.apply_edits(&w).unwrap();
        let n = g.n();
        for mask in 1u32..(1 << n) {
            let m: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if m.len() < 2 || !is_module(&g, &m) {
                continue;
            }
            if anti_matching_up_to(&g, &m, k + 1).unwrap().len() <= k {
                continue;
            }
            let hood = g.neighborhood_of_set(&m).unwrap();
            prop_assert!(h.is_clique(hood.as_slice()));
        }
    }
}

#[test]
fn search_tree_stays_within_six_way_branching() {
    // a graph far from trivially perfect: the search must still stop
    let g = Graph::from_edges(
        12,
        (0..12).map(|i| (i, (i + 1) % 12)).map(|(u, v)| (u.min(v), u.max(v))),
    )
    .unwrap();
    for k in 0..=3 {
        let inst = Instance::new(g.clone(), k, Mode::Editing);
        assert_eq!(solve(&inst).is_yes(), solve_bruteforce(&inst).is_yes());
    }
}
