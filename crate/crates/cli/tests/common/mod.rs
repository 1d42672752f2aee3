#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tpkernel::generate::{gen_tp_graph, GenSpec};
use tpkernel::Graph;

/// Induced C4/P4 scan over all 4-subsets.
pub fn brute_force_tp(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let mut deg = [0usize; 4];
                    let mut m = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(q[i], q[j]) {
                                deg[i] += 1;
                                deg[j] += 1;
                                m += 1;
                            }
                        }
                    }
                    deg.sort_unstable();
                    if (m == 4 && deg == [2, 2, 2, 2]) || (m == 3 && deg == [1, 1, 2, 2]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn shuffle_ids(rng: &mut impl Rng, n: usize, edges: Vec<(usize, usize)>) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges = edges.into_iter().map(|(u, v)| {
        let (a, b) = (perm[u], perm[v]);
        (a.min(b), a.max(b))
    });
    Graph::from_edges(n, edges).unwrap()
}

/// Small graphs (at most `max_n` vertices, `max_n >= 8`) drawn from four
/// families: planted perturbations of trivially perfect graphs, uniform
/// random graphs, trivially perfect modules hanging off a C4 or P4, and
/// combs attached to a P4.
pub fn structured_graph(seed: u64, max_n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(4..=max_n);
            let mut spec = GenSpec::new(rng.gen(), n);
            spec.max_bag = rng.gen_range(1..=3);
            spec.root_prob = rng.gen_range(0.0..0.4);
            let g = gen_tp_graph(&spec).unwrap();
            let mut edges: Vec<(usize, usize)> = g.edges().collect();
            for _ in 0..rng.gen_range(1..=3) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u == v {
                    continue;
                }
                let p = (u.min(v), u.max(v));
                match edges.iter().position(|&e| e == p) {
                    Some(i) => {
                        edges.swap_remove(i);
                    }
                    None => edges.push(p),
                }
            }
            Graph::from_edges(n, edges).unwrap()
        }
        1 => {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.1..0.9);
            random_graph(&mut rng, n, p)
        }
        2 => {
            // gadget on 0..4, module on 4..n joined to gadget vertex 0 (and
            // maybe 1)
            let mut edges = vec![(0, 1), (1, 2), (2, 3)];
            if rng.gen_bool(0.5) {
                edges.push((0, 3));
            }
            let s = rng.gen_range(2..=max_n - 4);
            let mut spec = GenSpec::new(rng.gen(), s);
            spec.max_bag = rng.gen_range(1..=2);
            spec.root_prob = rng.gen_range(0.0..1.0);
            let module = gen_tp_graph(&spec).unwrap();
            edges.extend(module.edges().map(|(u, v)| (u + 4, v + 4)));
            let both = rng.gen_bool(0.3);
            for x in 4..4 + s {
                edges.push((0, x));
                if both {
                    edges.push((2, x));
                }
            }
            shuffle_ids(&mut rng, 4 + s, edges)
        }
        _ => {
            // comb with l cells and teeth, a V_f vertex f on a P4 f-a-b-c
            let budget = max_n - 4;
            let mut cells = Vec::new();
            let mut teeth = Vec::new();
            let mut used = 0;
            while used + 2 <= budget && cells.len() < 6 {
                let c = rng.gen_range(1..=2usize).min(budget - used - 1);
                let t = rng.gen_range(1..=2usize).min(budget - used - c);
                cells.push(c);
                teeth.push(t);
                used += c + t;
            }
            let mut next = 0;
            let mut cell_ids = Vec::new();
            for &c in &cells {
                cell_ids.push((next..next + c).collect::<Vec<_>>());
                next += c;
            }
            let mut tooth_ids = Vec::new();
            for &t in &teeth {
                tooth_ids.push((next..next + t).collect::<Vec<_>>());
                next += t;
            }
            let shaft: Vec<usize> = cell_ids.iter().flatten().copied().collect();
            let mut edges = Vec::new();
            for (i, &u) in shaft.iter().enumerate() {
                for &v in &shaft[i + 1..] {
                    edges.push((u, v));
                }
            }
            for (i, cell) in cell_ids.iter().enumerate() {
                for tooth in &tooth_ids[i..] {
                    for &u in cell {
                        for &v in tooth {
                            edges.push((u, v));
                        }
                    }
                }
            }
            for tooth in &tooth_ids {
                if tooth.len() == 2 && rng.gen_bool(0.5) {
                    edges.push((tooth[0], tooth[1]));
                }
            }
            let f = next;
            for &u in &shaft {
                edges.push((u, f));
            }
            edges.extend([(f, f + 1), (f + 1, f + 2), (f + 2, f + 3)]);
            shuffle_ids(&mut rng, f + 4, edges)
        }
    }
}
