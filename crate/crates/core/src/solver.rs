//! Exact decision procedures and the blow-up operation.

use crate::error::{Error, Result};
use crate::graph::{EditSet, Graph, GraphBuilder, Pair};
use crate::kernel::{Instance, Mode};
use crate::recognition::{find_obstruction, is_trivially_perfect};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    /// At most `k` mode-respecting edits making the graph trivially perfect.
    Yes(EditSet),
    No,
}

impl SolveResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, SolveResult::Yes(_))
    }

    pub fn witness(&self) -> Option<&EditSet> {
        match self {
            SolveResult::Yes(w) => Some(w),
            SolveResult::No => None,
        }
    }
}

fn witness(g: &Graph, pairs: Vec<Pair>) -> SolveResult {
    let mut w = EditSet::new();
    for p in pairs {
        w.insert_relative(g, p);
    }
    SolveResult::Yes(w)
}

/// Bounded search tree: branch on the pairs of an induced C4 or P4 that the
/// mode allows to toggle, never toggling a pair twice on one branch.
pub fn solve(inst: &Instance) -> SolveResult {
    let mut edited = Vec::new();
    if branch(&inst.graph, inst.k, inst.mode, &mut edited) {
        witness(&inst.graph, edited)
    } else {
        SolveResult::No
    }
}

fn branch(g: &Graph, k: usize, mode: Mode, edited: &mut Vec<Pair>) -> bool {
    let Some(obs) = find_obstruction(g) else {
        return true;
    };
    if k == 0 {
        return false;
    }
    for (u, v) in obs.pairs() {
        let p = Pair::new(u, v).expect("obstruction vertices are distinct");
        // unedited pairs still carry their original adjacency
        if edited.contains(&p) || !mode.allows(g.has_edge(u, v)) {
            continue;
        }
        edited.push(p);
        if branch(&g.toggled(p), k - 1, mode, edited) {
            return true;
        }
        edited.pop();
    }
    false
}

/// Tries every mode-respecting edit set of size at most `k`, smallest first.
pub fn solve_bruteforce(inst: &Instance) -> SolveResult {
    let g = &inst.graph;
    let n = g.n();
    let pairs: Vec<Pair> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| inst.mode.allows(g.has_edge(u, v)))
        .map(|(u, v)| Pair::new(u, v).expect("u < v"))
        .collect();
    for size in 0..=inst.k.min(pairs.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let chosen: Vec<Pair> = idx.iter().map(|&i| pairs[i]).collect();
            let mut h = g.clone();
            for &p in &chosen {
                h = h.toggled(p);
            }
            if is_trivially_perfect(&h) {
                return witness(g, chosen);
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && idx[i - 1] == pairs.len() - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    SolveResult::No
}

/// Replaces `u` by a copy of `h` adjacent to all of `N_g(u)`. The vertices
/// of `g` other than `u` keep their relative order and come first; those of
/// `h` are appended in order.
pub fn blow_up(g: &Graph, u: usize, h: &Graph) -> Result<Graph> {
    if u >= g.n() {
        return Err(Error::InvalidInput(format!("vertex {u} out of range for n={}", g.n())));
    }
    let shift = |v: usize| if v > u { v - 1 } else { v };
    let base = g.n() - 1;
    let mut b = GraphBuilder::new(base + h.n());
    for (x, y) in g.edges() {
        if x != u && y != u {
            b.add_edge(shift(x), shift(y))?;
        }
    }
    for (x, y) in h.edges() {
        b.add_edge(base + x, base + y)?;
    }
    for &w in g.neighbors(u) {
        for x in 0..h.n() {
            b.add_edge(shift(w), base + x)?;
        }
    }
    Ok(b.build())
}
