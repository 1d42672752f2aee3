//! Maximum matchings in general graphs, anti-matchings, and r-packings.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Pair, VertexSet};

/// Read access to an undirected graph on `0..order()`.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn for_each_neighbor<F: FnMut(usize)>(&self, v: usize, f: F);
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.n()
    }

    fn for_each_neighbor<F: FnMut(usize)>(&self, v: usize, f: F) {
        self.neighbors(v).iter().copied().for_each(f)
    }
}

/// The complement of a graph, without materializing it.
pub struct Complement<'a>(pub &'a Graph);

impl Adjacency for Complement<'_> {
    fn order(&self) -> usize {
        self.0.n()
    }

    fn for_each_neighbor<F: FnMut(usize)>(&self, v: usize, mut f: F) {
        let mut it = self.0.neighbors(v).iter().peekable();
        for w in 0..self.0.n() {
            if it.peek() == Some(&&w) {
                it.next();
            } else if w != v {
                f(w);
            }
        }
    }
}

/// Vertex-disjoint edges of a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<Pair>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.pairs.iter().flat_map(|p| [p.low(), p.high()]).collect()
    }
}

/// Vertex-disjoint non-edges of a host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AntiMatching {
    pub pairs: Vec<Pair>,
}

impl AntiMatching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `V(D)`, the vertices covered by the pairs.
    pub fn vertices(&self) -> VertexSet {
        self.pairs.iter().flat_map(|p| [p.low(), p.high()]).collect()
    }
}

const NONE: usize = usize::MAX;

/// Edmonds' augmenting-path search with blossom contraction.
struct Blossom<'a, A: Adjacency> {
    g: &'a A,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a, A: Adjacency> Blossom<'a, A> {
    fn new(g: &'a A) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the free endpoint of an augmenting path from `root`, with the
    /// path recorded in `parent`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        let mut nbrs = Vec::new();
        while let Some(v) = self.queue.pop_front() {
            nbrs.clear();
            self.g.for_each_neighbor(v, |w| nbrs.push(w));
            for &to in &nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut u: usize) {
        while u != NONE {
            let pv = self.parent[u];
            let ppv = self.mate[pv];
            self.mate[u] = pv;
            self.mate[pv] = u;
            u = ppv;
        }
    }

    fn run(mut self, limit: usize) -> Vec<Pair> {
        let n = self.mate.len();
        let mut size = 0;
        // greedy start, in increasing id order
        for v in 0..n {
            if size >= limit {
                break;
            }
            if self.mate[v] != NONE {
                continue;
            }
            let mut pick = NONE;
            let mate = &self.mate;
            self.g.for_each_neighbor(v, |w| {
                if pick == NONE && mate[w] == NONE {
                    pick = w;
                }
            });
            if pick != NONE {
                self.mate[v] = pick;
                self.mate[pick] = v;
                size += 1;
            }
        }
        for v in 0..n {
            if size >= limit {
                break;
            }
            if self.mate[v] == NONE {
                if let Some(u) = self.find_path(v) {
                    self.augment(u);
                    size += 1;
                }
            }
        }
        (0..n)
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| Pair::new(v, self.mate[v]).expect("distinct"))
            .collect()
    }
}

/// A maximum-cardinality matching.
pub fn maximum_matching(g: &Graph) -> Matching {
    Matching {
        pairs: matching_up_to(g, usize::MAX),
    }
}

/// A matching of size `min(limit, ν(g))`; maximum when `limit` is not
/// reached.
pub fn matching_up_to<A: Adjacency>(g: &A, limit: usize) -> Vec<Pair> {
    let mut pairs = Blossom::new(g).run(limit);
    pairs.truncate(limit);
    pairs
}

/// A maximum anti-matching of `G[m]`, in host ids.
pub fn max_anti_matching(g: &Graph, m: &VertexSet) -> Result<AntiMatching> {
    anti_matching_up_to(g, m, usize::MAX)
}

/// An anti-matching of `G[m]` of size `min(limit, α(G[m]))`.
pub fn anti_matching_up_to(g: &Graph, m: &VertexSet, limit: usize) -> Result<AntiMatching> {
    let (sub, map) = g.induced_subgraph(m)?;
    let local = matching_up_to(&Complement(&sub), limit);
    Ok(AntiMatching {
        pairs: local
            .into_iter()
            .map(|p| Pair::new(map[p.low()], map[p.high()]).expect("distinct"))
            .collect(),
    })
}

/// The shortest prefix of an ordered list of disjoint sets holding at least
/// `r` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub prefix: Vec<VertexSet>,
    pub vertex_total: usize,
}

impl Packing {
    /// Number of sets in the prefix.
    pub fn len(&self) -> usize {
        self.prefix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        self.prefix.iter().flat_map(|s| s.iter()).collect()
    }
}

/// The r-packing of `sets`, or `None` when all of them together hold fewer
/// than `r` vertices.
pub fn build_packing(sets: &[VertexSet], r: usize) -> Result<Option<Packing>> {
    if r == 0 {
        return Err(Error::InvalidInput("packing threshold must be at least 1".into()));
    }
    if sets.iter().any(VertexSet::is_empty) {
        return Err(Error::InvalidInput("packing over an empty set".into()));
    }
    let mut seen = std::collections::HashSet::new();
    for v in sets.iter().flat_map(|s| s.iter()) {
        if !seen.insert(v) {
            return Err(Error::InvalidInput(format!("sets overlap at vertex {v}")));
        }
    }
    Ok(packing_prefix(sets.iter().map(VertexSet::len), r).map(|(len, total)| Packing {
        prefix: sets[..len].to_vec(),
        vertex_total: total,
    }))
}

/// `(prefix length, vertex total)` of the r-packing over the given sizes.
pub(crate) fn packing_prefix<I: IntoIterator<Item = usize>>(
    sizes: I,
    r: usize,
) -> Option<(usize, usize)> {
    let mut total = 0;
    for (i, s) in sizes.into_iter().enumerate() {
        total += s;
        if total >= r {
            return Some((i + 1, total));
        }
    }
    None
}
