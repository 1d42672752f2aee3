//! Undirected simple graphs over dense vertex ids `0..n`.
//!
//! Adjacency lists are kept sorted so neighborhood comparisons are linear
//! merges and edge queries are binary searches. Graphs are immutable once
//! built; every operation that changes the vertex or edge set returns a new
//! value.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::iter::FromIterator;

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from an already sorted, duplicate-free vector.
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, usize>> {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(sorted_intersection(&self.0, &other.0))
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.len() <= other.len() && self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        sorted_intersection(&self.0, &other.0).is_empty()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// An unordered pair of distinct vertices, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair(usize, usize);

impl Pair {
    /// Returns `None` for loops.
    pub fn new(u: usize, v: usize) -> Option<Pair> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Pair(u, v)),
            std::cmp::Ordering::Greater => Some(Pair(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn low(self) -> usize {
        self.0
    }

    pub fn high(self) -> usize {
        self.1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EditKind {
    Addition,
    Deletion,
}

/// A set of vertex pairs to toggle, each classified against the graph it
/// was built for.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditSet {
    pairs: BTreeMap<Pair, EditKind>,
}

impl EditSet {
    pub fn new() -> Self {
        EditSet::default()
    }

    /// Classifies every pair against `g`. Fails on loops and out-of-range
    /// endpoints.
    pub fn relative_to<I>(g: &Graph, pairs: I) -> Result<EditSet>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = EditSet::new();
        for (u, v) in pairs {
            if u >= g.n() || v >= g.n() {
                return Err(Error::InvalidInput(format!(
                    "pair {u} {v} out of range for {} vertices",
                    g.n()
                )));
            }
            let p = Pair::new(u, v)
                .ok_or_else(|| Error::InvalidInput(format!("loop pair {u} {v}")))?;
            out.insert_relative(g, p);
        }
        Ok(out)
    }

    pub(crate) fn insert_relative(&mut self, g: &Graph, p: Pair) {
        let kind = if g.has_edge(p.0, p.1) {
            EditKind::Deletion
        } else {
            EditKind::Addition
        };
        self.pairs.insert(p, kind);
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, p: Pair) -> bool {
        self.pairs.contains_key(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Pair, EditKind)> + '_ {
        self.pairs.iter().map(|(p, k)| (*p, *k))
    }

    pub fn additions(&self) -> impl Iterator<Item = Pair> + '_ {
        self.iter()
            .filter(|(_, k)| *k == EditKind::Addition)
            .map(|(p, _)| p)
    }

    pub fn deletions(&self) -> impl Iterator<Item = Pair> + '_ {
        self.iter()
            .filter(|(_, k)| *k == EditKind::Deletion)
            .map(|(p, _)| p)
    }

    /// The vertices touched by at least one pair.
    pub fn affected(&self) -> VertexSet {
        self.pairs.keys().flat_map(|p| [p.0, p.1]).collect()
    }
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds directly from adjacency lists that already satisfy the
    /// symmetry and irreflexivity invariants (sorting is done here).
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        let mut total = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        Graph { adj, m: total / 2 }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let list = &self.adj[v];
        let pos = list.partition_point(|&w| w < v);
        let mut out = Vec::with_capacity(list.len() + 1);
        out.extend_from_slice(&list[..pos]);
        out.push(v);
        out.extend_from_slice(&list[pos..]);
        out
    }

    pub fn is_clique(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub(crate) fn check_range(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n() => Err(Error::InvalidInput(format!(
                "vertex {v} out of range for {} vertices",
                self.n()
            ))),
            _ => Ok(()),
        }
    }

    /// `G[S]`, together with the map from new ids back to ids of `self`
    /// (new id `i` is the `i`-th smallest member of `s`).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_range(s)?;
        Ok(self.induced_unchecked(s.as_slice()))
    }

    pub(crate) fn induced_unchecked(&self, s: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in s.iter().enumerate() {
            index[v] = i;
        }
        let adj = s
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        // `s` is sorted, so the relabelling is monotone and lists stay sorted.
        (Graph { adj, m }, s.to_vec())
    }

    /// Deletes `removed` and renumbers the survivors in increasing order.
    /// The returned map sends every old id to its new id, or `None`.
    pub fn remove_vertices(&self, removed: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n()];
        let mut keep = Vec::with_capacity(self.n() - removed.len().min(self.n()));
        for v in 0..self.n() {
            if !removed.contains(v) {
                map[v] = Some(keep.len());
                keep.push(v);
            }
        }
        let (g, _) = self.induced_unchecked(&keep);
        (g, map)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&(0..self.n()).collect::<Vec<_>>())
    }

    /// Components of `G[s]` for a sorted vertex list `s`.
    pub(crate) fn components_within(&self, s: &[usize]) -> Vec<VertexSet> {
        let mut inside = vec![false; self.n()];
        for &v in s {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for &start in s {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// `N(S)`: vertices outside `s` adjacent to some member of `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_range(s)?;
        Ok(self.neighborhood_unchecked(s.as_slice()))
    }

    pub(crate) fn neighborhood_unchecked(&self, s: &[usize]) -> VertexSet {
        let mut mark = vec![false; self.n()];
        for &v in s {
            mark[v] = true;
        }
        let mut out = Vec::new();
        for &v in s {
            for &w in &self.adj[v] {
                if !mark[w] {
                    mark[w] = true;
                    out.push(w);
                }
            }
        }
        out.into()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut list = Vec::with_capacity(n - 1 - self.adj[u].len());
                let mut it = self.adj[u].iter().peekable();
                for v in 0..n {
                    if it.peek() == Some(&&v) {
                        it.next();
                    } else if v != u {
                        list.push(v);
                    }
                }
                list
            })
            .collect::<Vec<_>>();
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// `(V, E △ F)`. Fails when a pair is out of range or its stored
    /// classification disagrees with `self`.
    pub fn apply_edits(&self, f: &EditSet) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for (p, kind) in f.iter() {
            if p.1 >= self.n() {
                return Err(Error::InvalidInput(format!(
                    "pair {} {} out of range for {} vertices",
                    p.0,
                    p.1,
                    self.n()
                )));
            }
            let present = self.has_edge(p.0, p.1);
            if present != (kind == EditKind::Deletion) {
                return Err(Error::InvalidInput(format!(
                    "pair {} {} classified as {:?} but edge presence is {}",
                    p.0, p.1, kind, present
                )));
            }
            if present {
                adj[p.0].retain(|&w| w != p.1);
                adj[p.1].retain(|&w| w != p.0);
            } else {
                adj[p.0].push(p.1);
                adj[p.1].push(p.0);
            }
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Toggles a single pair.
    pub(crate) fn toggled(&self, p: Pair) -> Graph {
        let mut adj = self.adj.clone();
        let (u, v) = (p.0, p.1);
        match adj[u].binary_search(&v) {
            Ok(i) => {
                adj[u].remove(i);
                let j = adj[v].binary_search(&u).expect("symmetric adjacency");
                adj[v].remove(j);
                Graph { adj, m: self.m - 1 }
            }
            Err(i) => {
                adj[u].insert(i, v);
                let j = adj[v].binary_search(&u).unwrap_err();
                adj[v].insert(j, u);
                Graph { adj, m: self.m + 1 }
            }
        }
    }
}

/// Incremental construction of a [`Graph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::InvalidInput(format!(
                "edge {u} {v} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    /// Removes `v` and every incident edge; ids above `v` shift down by one.
    pub fn remove_vertex(&mut self, v: usize) {
        self.adj.remove(v);
        for list in self.adj.iter_mut() {
            list.retain(|&w| w != v);
            for w in list.iter_mut() {
                if *w > v {
                    *w -= 1;
                }
            }
        }
    }

    pub fn build(self) -> Graph {
        Graph::from_adjacency(self.adj)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn apply_edits_adds_chord_to_c4() {
        let c4 = cycle(4);
        let f = EditSet::relative_to(&c4, [(0, 2)]).unwrap();
        let h = c4.apply_edits(&f).unwrap();
        assert_eq!(h.m(), 5);
        assert!(h.has_edge(0, 2));
        assert_eq!(c4.m(), 4);
    }

    #[test]
    fn apply_empty_edit_set_is_identity() {
        let g = path(5);
        assert_eq!(g.apply_edits(&EditSet::new()).unwrap(), g);
    }

    #[test]
    fn apply_edits_deletes_from_p4() {
        let p4 = path(4);
        let f = EditSet::relative_to(&p4, [(1, 0)]).unwrap();
        let h = p4.apply_edits(&f).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn edit_pairs_out_of_range_are_rejected() {
        let p4 = path(4);
        assert!(matches!(
            EditSet::relative_to(&p4, [(0, 4)]),
            Err(Error::InvalidInput(_))
        ));
        let f = EditSet::relative_to(&path(6), [(0, 5)]).unwrap();
        assert!(p4.apply_edits(&f).is_err());
    }

    #[test]
    fn edit_set_classification() {
        let p4 = path(4);
        let f = EditSet::relative_to(&p4, [(0, 1), (0, 3)]).unwrap();
        assert_eq!(f.deletions().collect::<Vec<_>>(), vec![Pair(0, 1)]);
        assert_eq!(f.additions().collect::<Vec<_>>(), vec![Pair(0, 3)]);
        assert_eq!(f.affected().as_slice(), &[0, 1, 3]);
        // stale classification is caught
        let g = p4.apply_edits(&f).unwrap();
        assert!(g.apply_edits(&f).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let (p3, map) = cycle(4).induced_subgraph(&vec![0, 1, 2].into()).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(map, vec![0, 1, 2]);

        let g = path(5);
        let (same, _) = g.induced_subgraph(&g.vertices()).unwrap();
        assert_eq!(same, g);

        let (k3, map) = Graph::complete(4)
            .induced_subgraph(&vec![3, 0, 2].into())
            .unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map, vec![0, 2, 3]);

        assert!(g.induced_subgraph(&vec![7].into()).is_err());
    }

    #[test]
    fn components() {
        let two_triangles = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let comps = two_triangles.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));

        assert_eq!(path(6).connected_components().len(), 1);

        let comps = Graph::empty(4).connected_components();
        assert_eq!(comps, (0..4).map(|v| VertexSet::from(vec![v])).collect::<Vec<_>>());
    }

    #[test]
    fn set_neighborhoods() {
        let s = star(3);
        assert_eq!(s.neighborhood_of_set(&vec![0].into()).unwrap().as_slice(), &[1, 2, 3]);
        assert!(s.neighborhood_of_set(&s.vertices()).unwrap().is_empty());
        assert_eq!(path(3).neighborhood_of_set(&vec![0].into()).unwrap().as_slice(), &[1]);
    }

    #[test]
    fn complements() {
        let c = cycle(4).complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
        assert_eq!(Graph::empty(3).complement(), Graph::complete(3));
    }

    #[test]
    fn builder_rejects_loops_and_removes_vertices() {
        let mut b = GraphBuilder::new(3);
        assert!(b.add_edge(1, 1).is_err());
        assert!(b.add_edge(0, 3).is_err());
        b.add_edge(0, 1).unwrap();
        b.add_edge(1, 2).unwrap();
        let w = b.add_vertex();
        b.add_edge(w, 0).unwrap();
        b.remove_vertex(1);
        let g = b.build();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn remove_vertices_renumbers_monotonically() {
        let (g, map) = path(5).remove_vertices(&vec![1, 3].into());
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 0);
        assert_eq!(map, vec![Some(0), None, Some(1), None, Some(2)]);
    }

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

    proptest! {
        #[test]
        fn adjacency_invariants(g in arb_graph(9)) {
            let mut total = 0;
            for u in 0..g.n() {
                prop_assert!(!g.neighbors(u).contains(&u));
                for &v in g.neighbors(u) {
                    prop_assert!(g.neighbors(v).contains(&u));
                }
                total += g.degree(u);
            }
            prop_assert_eq!(total, 2 * g.m());
        }

        #[test]
        fn edits_are_involutions(g in arb_graph(8), raw in proptest::collection::vec((0usize..8, 0usize..8), 0..6)) {
            let pairs: Vec<_> = raw.into_iter().filter(|&(u, v)| u != v && u < g.n() && v < g.n()).collect();
            let f = EditSet::relative_to(&g, pairs.iter().copied()).unwrap();
            let h = g.apply_edits(&f).unwrap();
            let back = EditSet::relative_to(&h, f.iter().map(|(p, _)| (p.low(), p.high()))).unwrap();
            prop_assert_eq!(h.apply_edits(&back).unwrap(), g);
        }

        #[test]
        fn complement_is_an_involution(g in arb_graph(9)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn components_partition_the_vertices(g in arb_graph(10)) {
            let comps = g.connected_components();
            let mut owner = vec![usize::MAX; g.n()];
            for (i, c) in comps.iter().enumerate() {
                for v in c {
                    prop_assert_eq!(owner[v], usize::MAX);
                    owner[v] = i;
                }
                let (sub, _) = g.induced_subgraph(c).unwrap();
                prop_assert!(sub.is_connected());
            }
            prop_assert!(owner.iter().all(|&o| o != usize::MAX));
            for (u, v) in g.edges() {
                prop_assert_eq!(owner[u], owner[v]);
            }
            prop_assert!(comps.windows(2).all(|w| w[0].first() < w[1].first()));
        }
    }
}
