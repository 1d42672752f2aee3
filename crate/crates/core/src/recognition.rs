//! Recognition of trivially perfect graphs and universal clique
//! decompositions (UCDs).
//!
//! Recognition orders vertices by non-increasing degree and gives every
//! vertex a tentative parent: its latest neighbor earlier in that order. The
//! graph is trivially perfect exactly when `N[v] ⊆ N[parent(v)]` for every
//! vertex that has a parent; the parent pointers then form a rooted forest
//! whose ancestor relation is the edge set. A failed inclusion yields an
//! induced C4 or P4 directly. Twins along the forest collapse into UCD bags.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    C4,
    P4,
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionKind::C4 => write!(f, "C4"),
            ObstructionKind::P4 => write!(f, "P4"),
        }
    }
}

/// An induced C4 (vertices in cycle order) or P4 (vertices in path order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub vertices: [usize; 4],
}

impl Obstruction {
    /// Checks that the four vertices induce exactly the claimed graph.
    pub fn verify(&self, g: &Graph) -> bool {
        let v = self.vertices;
        if v.iter().any(|&x| x >= g.n()) {
            return false;
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if v[i] == v[j] {
                    return false;
                }
                let consecutive = j == i + 1;
                let closing = i == 0 && j == 3;
                let expected = consecutive || (closing && self.kind == ObstructionKind::C4);
                if g.has_edge(v[i], v[j]) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// The six pairs among the four vertices.
    pub fn pairs(&self) -> [(usize, usize); 6] {
        let v = self.vertices;
        [
            (v[0], v[1]),
            (v[0], v[2]),
            (v[0], v[3]),
            (v[1], v[2]),
            (v[1], v[3]),
            (v[2], v[3]),
        ]
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.vertices;
        write!(f, "{} {} {} {} {}", self.kind, v[0], v[1], v[2], v[3])
    }
}

/// Degree-ordered parent forest, or the obstruction that prevents one.
struct Forest {
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
}

fn parent_forest(g: &Graph) -> std::result::Result<Forest, Obstruction> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    let mut parent = vec![None; n];
    for &v in &order {
        let p = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] < pos[v])
            .max_by_key(|&w| pos[w]);
        let Some(p) = p else { continue };
        parent[v] = Some(p);
        // N[v] ⊆ N[p]
        let missing = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| w != p && !g.has_edge(w, p));
        if let Some(w) = missing {
            // deg(p) >= deg(v) and w ∈ N[v] \ N[p], so some x ∈ N[p] \ N[v] exists.
            let x = g
                .neighbors(p)
                .iter()
                .copied()
                .find(|&x| x != v && !g.has_edge(x, v))
                .expect("degree order guarantees a private neighbor of the parent");
            let kind = if g.has_edge(w, x) {
                ObstructionKind::C4
            } else {
                ObstructionKind::P4
            };
            return Err(Obstruction {
                kind,
                vertices: [w, v, p, x],
            });
        }
    }
    Ok(Forest { order, parent })
}

/// An induced C4 or P4 of `g`, or `None` when `g` is trivially perfect.
pub fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    parent_forest(g).err()
}

pub fn is_trivially_perfect(g: &Graph) -> bool {
    parent_forest(g).is_ok()
}

/// Vertices adjacent to every other vertex.
pub fn universal_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    VertexSet::from_sorted((0..n).filter(|&v| g.degree(v) + 1 == n).collect())
}

/// Universal vertices of `G[s]` for a sorted vertex list `s`.
pub(crate) fn universal_within(g: &Graph, s: &[usize], inside: &[bool]) -> Vec<usize> {
    s.iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count() + 1 == s.len())
        .collect()
}

/// A universal clique decomposition: a rooted forest whose node `t` carries
/// the bag `B_t`. Nodes are numbered in preorder; roots and children are
/// ordered by the smallest vertex of their bag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ucd {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    bags: Vec<VertexSet>,
}

impl Ucd {
    /// Assembles a decomposition from parent links and bags. Only checks
    /// that the parent links form a forest and the bags are nonempty; use
    /// [`validate_ucd`] for the semantic conditions.
    pub fn from_parts(parent: Vec<Option<usize>>, bags: Vec<VertexSet>) -> Result<Ucd> {
        if parent.len() != bags.len() {
            return Err(Error::InvalidInput("parent and bag counts differ".into()));
        }
        if bags.iter().any(VertexSet::is_empty) {
            return Err(Error::InvalidInput("empty bag".into()));
        }
        let count = parent.len();
        let mut children = vec![Vec::new(); count];
        for (t, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= count {
                    return Err(Error::InvalidInput(format!("node {t} has unknown parent {p}")));
                }
                children[p].push(t);
            }
        }
        // every node must reach a root without revisiting
        for start in 0..count {
            let mut steps = 0;
            let mut t = start;
            while let Some(p) = parent[t] {
                t = p;
                steps += 1;
                if steps > count {
                    return Err(Error::InvalidInput("parent links contain a cycle".into()));
                }
            }
        }
        Ok(Ucd {
            parent,
            children,
            bags,
        })
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.node_count()).filter(|&t| self.parent[t].is_none())
    }

    pub fn is_leaf(&self, t: usize) -> bool {
        self.children[t].is_empty()
    }

    /// Nodes of the subtree rooted at `t`, in preorder.
    pub fn subtree(&self, t: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![t];
        while let Some(s) = stack.pop() {
            out.push(s);
            stack.extend(self.children[s].iter().rev());
        }
        out
    }

    /// Union of the bags in the subtree rooted at `t`.
    pub fn subtree_vertices(&self, t: usize) -> VertexSet {
        self.subtree(t)
            .into_iter()
            .flat_map(|s| self.bags[s].iter())
            .collect()
    }

    /// Proper ancestors of `t`, nearest first.
    pub fn ancestors(&self, t: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.parent[t];
        while let Some(p) = cur {
            out.push(p);
            cur = self.parent[p];
        }
        out
    }

    pub fn is_ancestor_or_self(&self, a: usize, t: usize) -> bool {
        a == t || self.ancestors(t).contains(&a)
    }

    /// Map from vertex to the node holding it; `None` for vertices in no bag.
    pub fn node_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (t, bag) in self.bags.iter().enumerate() {
            for v in bag {
                if v < n {
                    out[v] = Some(t);
                }
            }
        }
        out
    }

    /// Root-to-leaf node paths, leaves in preorder.
    pub fn root_to_leaf_paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for r in self.roots() {
            for t in self.subtree(r) {
                if self.is_leaf(t) {
                    let mut path = self.ancestors(t);
                    path.reverse();
                    path.push(t);
                    out.push(path);
                }
            }
        }
        out
    }

    /// One line per node: `node_id parent_id(or -1) : v1 v2 ...`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in 0..self.node_count() {
            let p = self.parent[t].map_or_else(|| "-1".to_string(), |p| p.to_string());
            out.push_str(&format!("{t} {p} :"));
            for v in &self.bags[t] {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Builds the UCD of a trivially perfect graph (a forest with one tree per
/// connected component).
pub fn build_ucd(g: &Graph) -> Result<Ucd> {
    let forest = parent_forest(g).map_err(Error::NotTriviallyPerfect)?;
    let n = g.n();

    // A vertex shares its parent's bag exactly when the two are twins; given
    // N[v] ⊆ N[p] that is equality of degrees.
    let mut group = vec![usize::MAX; n];
    let mut group_parent: Vec<Option<usize>> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for &v in &forest.order {
        match forest.parent[v] {
            Some(p) if g.degree(p) == g.degree(v) => {
                group[v] = group[p];
                members[group[p]].push(v);
            }
            p => {
                group[v] = members.len();
                group_parent.push(p.map(|p| group[p]));
                members.push(vec![v]);
            }
        }
    }
    for m in members.iter_mut() {
        m.sort_unstable();
    }

    // Renumber in preorder with children ordered by smallest vertex.
    let count = members.len();
    let mut kids = vec![Vec::new(); count];
    let mut roots = Vec::new();
    for (grp, p) in group_parent.iter().enumerate() {
        match p {
            Some(p) => kids[*p].push(grp),
            None => roots.push(grp),
        }
    }
    let key = |grp: &usize| members[*grp][0];
    roots.sort_by_key(key);
    for k in kids.iter_mut() {
        k.sort_by_key(key);
    }
    let mut new_id = vec![usize::MAX; count];
    let mut order = Vec::with_capacity(count);
    let mut stack: Vec<usize> = roots.iter().rev().copied().collect();
    while let Some(grp) = stack.pop() {
        new_id[grp] = order.len();
        order.push(grp);
        stack.extend(kids[grp].iter().rev());
    }
    let parent = order
        .iter()
        .map(|&grp| group_parent[grp].map(|p| new_id[p]))
        .collect::<Vec<_>>();
    let bags = order
        .iter()
        .map(|&grp| VertexSet::from_sorted(members[grp].clone()))
        .collect::<Vec<_>>();
    Ucd::from_parts(parent, bags)
}

/// Literal check of both UCD conditions, plus that the bags partition the
/// vertex set and each tree spans exactly one connected component.
pub fn validate_ucd(g: &Graph, d: &Ucd) -> bool {
    let n = g.n();
    let mut node = vec![usize::MAX; n];
    for (t, bag) in d.bags().iter().enumerate() {
        if bag.is_empty() {
            return false;
        }
        for v in bag {
            if v >= n || node[v] != usize::MAX {
                return false;
            }
            node[v] = t;
        }
    }
    if node.contains(&usize::MAX) {
        return false;
    }

    // Edges only between nodes on a common root-to-leaf path.
    let depth: Vec<usize> = (0..d.node_count()).map(|t| d.ancestors(t).len()).collect();
    for (u, v) in g.edges() {
        let (a, b) = (node[u], node[v]);
        let (hi, lo) = if depth[a] <= depth[b] { (a, b) } else { (b, a) };
        if !d.is_ancestor_or_self(hi, lo) {
            return false;
        }
    }

    // Each bag is the universal clique of its subtree.
    let mut inside = vec![false; n];
    for t in 0..d.node_count() {
        let sub = d.subtree_vertices(t);
        for v in &sub {
            inside[v] = true;
        }
        let universal = universal_within(g, sub.as_slice(), &inside);
        for v in &sub {
            inside[v] = false;
        }
        if universal.as_slice() != d.bag(t).as_slice() {
            return false;
        }
    }

    // Roots of distinct trees must lie in distinct components (a tree is
    // connected through its root bag).
    let comps = g.connected_components();
    let roots = d.roots().count();
    roots == comps.len()
}

/// True when every two sets are comparable under inclusion.
pub fn check_nested_family(sets: &[VertexSet]) -> bool {
    let mut sorted: Vec<&VertexSet> = sets.iter().collect();
    sorted.sort_by_key(|s| s.len());
    sorted.windows(2).all(|w| w[0].is_subset(w[1]))
}

pub fn is_maximal_clique(g: &Graph, s: &VertexSet) -> bool {
    if s.is_empty() || !g.is_clique(s.as_slice()) {
        return false;
    }
    let first = s.first().expect("nonempty");
    // a vertex extending the clique is a neighbor of the first member
    !g.neighbors(first)
        .iter()
        .any(|&w| !s.contains(w) && s.iter().all(|x| g.has_edge(w, x)))
}

/// Evaluates the three-part maximal-clique characterization on `S`: with
/// `K_1..K_r` the components of `G - S`, every `G[S ∪ K_i]` is trivially
/// perfect, the neighborhoods `N(K_i)` form a nested family, and every
/// `K_i` is fully adjacent to `N(K_i)`.
pub fn tp_characterization_check(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_range(s)?;
    if !is_maximal_clique(g, s) {
        return Err(Error::InvalidInput(format!("{s} is not a maximal clique")));
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !s.contains(v)).collect();
    let comps = g.components_within(&rest);
    let mut hoods = Vec::with_capacity(comps.len());
    for k in &comps {
        let with_s = k.union(s);
        let (sub, _) = g.induced_unchecked(with_s.as_slice());
        if !is_trivially_perfect(&sub) {
            return Ok(false);
        }
        let hood = g.neighborhood_unchecked(k.as_slice());
        for u in k {
            if !hood.iter().all(|v| g.has_edge(u, v)) {
                return Ok(false);
            }
        }
        hoods.push(hood);
    }
    Ok(check_nested_family(&hoods))
}
