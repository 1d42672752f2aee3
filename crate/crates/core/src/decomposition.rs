//! Critical cliques and strong modules.
//!
//! Strong modules are computed as the node sets of the modular decomposition
//! tree, built top-down: a disconnected node splits into its components, a
//! node whose complement is disconnected splits into its co-components, and
//! a prime node splits into its maximal proper modules. The prime case uses
//! vertex partitioning around a pivot `v` (the maximal modules avoiding `v`)
//! followed by minimal-module closures to identify the part containing `v`.
//! Everything runs on bitset rows, roughly cubic in the worst case.

use std::collections::HashMap;

use crate::graph::{Graph, VertexSet};
use crate::recognition::is_trivially_perfect;

/// Partition of `V` into maximal sets of true twins (equal closed
/// neighborhoods), ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalCliquePartition {
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
}

impl CriticalCliquePartition {
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn critical_cliques(g: &Graph) -> CriticalCliquePartition {
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        let key = g.closed_neighborhood(v);
        let next = members.len();
        let c = *index.entry(key).or_insert(next);
        if c == next {
            members.push(Vec::new());
        }
        members[c].push(v);
    }
    // classes were opened in order of their smallest member
    let mut class_of = vec![0; g.n()];
    for (c, m) in members.iter().enumerate() {
        for &v in m {
            class_of[v] = c;
        }
    }
    CriticalCliquePartition {
        classes: members.into_iter().map(VertexSet::from_sorted).collect(),
        class_of,
    }
}

/// True when every vertex outside `m` is adjacent to all or none of `m`.
pub fn is_module(g: &Graph, m: &VertexSet) -> bool {
    if m.is_empty() || m.max().is_some_and(|v| v >= g.n()) {
        return false;
    }
    let mut count = vec![0usize; g.n()];
    for v in m {
        for &w in g.neighbors(v) {
            count[w] += 1;
        }
    }
    (0..g.n()).all(|w| m.contains(w) || count[w] == 0 || count[w] == m.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    Leaf,
    /// `G[M]` is disconnected.
    Parallel,
    /// The complement of `G[M]` is disconnected.
    Series,
    Prime,
}

/// The strong modules of a graph organized as its modular decomposition
/// tree. Modules are stored largest first (ties by smallest member), so a
/// parent always precedes its children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleList {
    modules: Vec<VertexSet>,
    kinds: Vec<ModuleKind>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl ModuleList {
    pub fn modules(&self) -> &[VertexSet] {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn kind(&self, i: usize) -> ModuleKind {
        self.kinds[i]
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }
}

/// Dense adjacency rows for a vertex subset, indexed locally.
struct Rows {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl Rows {
    fn new(g: &Graph, verts: &[usize]) -> Rows {
        let k = verts.len();
        let words = k.div_ceil(64);
        let mut local = HashMap::with_capacity(k);
        for (i, &v) in verts.iter().enumerate() {
            local.insert(v, i);
        }
        let mut rows = vec![vec![0u64; words]; k];
        for (i, &v) in verts.iter().enumerate() {
            for w in g.neighbors(v) {
                if let Some(&j) = local.get(w) {
                    rows[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        Rows { words, rows }
    }

    fn adj(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn get_bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

/// Components of the subgraph on local ids `members`, or of its complement.
fn local_components(rows: &Rows, members: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut unvisited = vec![0u64; rows.words];
    for &i in members {
        set_bit(&mut unvisited, i);
    }
    let mut out = Vec::new();
    for &start in members {
        if !get_bit(&unvisited, start) {
            continue;
        }
        unvisited[start / 64] &= !(1 << (start % 64));
        let mut comp = vec![start];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for w in 0..rows.words {
                let reach = if complement {
                    unvisited[w] & !rows.rows[u][w]
                } else {
                    unvisited[w] & rows.rows[u][w]
                };
                let mut bits = reach;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    comp.push(w * 64 + b);
                }
                unvisited[w] &= !reach;
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// The maximal modules of `G[members]` not containing `pivot`, by
/// partition refinement.
fn pivot_partition(rows: &Rows, members: &[usize], pivot: usize) -> Vec<Vec<usize>> {
    let (mut near, mut far): (Vec<usize>, Vec<usize>) = members
        .iter()
        .copied()
        .filter(|&x| x != pivot)
        .partition(|&x| rows.adj(pivot, x));
    near.sort_unstable();
    far.sort_unstable();
    let mut parts: Vec<Vec<usize>> = [near, far].into_iter().filter(|p| !p.is_empty()).collect();
    loop {
        let mut changed = false;
        let mut owner = vec![usize::MAX; rows.rows.len()];
        for (i, p) in parts.iter().enumerate() {
            for &x in p {
                owner[x] = i;
            }
        }
        for &x in members {
            if x == pivot {
                continue;
            }
            let mut next = Vec::with_capacity(parts.len() + 1);
            for (i, p) in parts.into_iter().enumerate() {
                if i == owner[x] || p.len() == 1 {
                    next.push(p);
                    continue;
                }
                let (a, b): (Vec<usize>, Vec<usize>) = p.iter().partition(|&&y| rows.adj(x, y));
                if a.is_empty() || b.is_empty() {
                    next.push(p);
                } else {
                    changed = true;
                    next.push(a);
                    next.push(b);
                }
            }
            parts = next;
            owner.fill(usize::MAX);
            for (i, p) in parts.iter().enumerate() {
                for &y in p {
                    owner[y] = i;
                }
            }
        }
        if !changed {
            return parts;
        }
    }
}

/// Size of the smallest module of `G[members]` containing `seed`,
/// stopping early once it reaches `members.len()`.
fn closure_size(rows: &Rows, members: &[usize], seed: &[usize]) -> usize {
    let words = rows.words;
    let mut outside = vec![0u64; words];
    for &x in members {
        set_bit(&mut outside, x);
    }
    for &s in seed {
        outside[s / 64] &= !(1 << (s % 64));
    }
    // outside vertices adjacent to every / no processed member
    let mut full = outside.clone();
    let mut none = outside.clone();
    let mut queue: Vec<usize> = seed.to_vec();
    let mut size = seed.len();
    let mut head = 0;
    while head < queue.len() && size < members.len() {
        let x = queue[head];
        head += 1;
        for w in 0..words {
            let row = rows.rows[x][w];
            let before = (full[w] | none[w]) & outside[w];
            full[w] &= row;
            none[w] &= !row;
            let mut split = before & !(full[w] | none[w]);
            outside[w] &= !split;
            while split != 0 {
                let b = split.trailing_zeros() as usize;
                split &= split - 1;
                queue.push(w * 64 + b);
                size += 1;
            }
        }
    }
    size
}

/// Maximal strong modules of a prime node.
fn prime_children(rows: &Rows, members: &[usize]) -> Vec<Vec<usize>> {
    let pivot = members[0];
    let parts = pivot_partition(rows, members, pivot);
    let mut with_pivot = vec![pivot];
    let mut out = Vec::new();
    for p in parts {
        if closure_size(rows, members, &[pivot, p[0]]) < members.len() {
            with_pivot.extend(p);
        } else {
            out.push(p);
        }
    }
    with_pivot.sort_unstable();
    out.push(with_pivot);
    out
}

/// All strong modules of `g` (including `V` and the singletons).
pub fn strong_modules(g: &Graph) -> ModuleList {
    let n = g.n();
    let mut raw: Vec<(Vec<usize>, ModuleKind, Option<usize>)> = Vec::new();
    if n == 0 {
        return ModuleList {
            modules: Vec::new(),
            kinds: Vec::new(),
            parent: Vec::new(),
            children: Vec::new(),
        };
    }
    let all: Vec<usize> = (0..n).collect();
    let rows = Rows::new(g, &all);
    let mut stack = vec![(all, None)];
    while let Some((members, parent)) = stack.pop() {
        let idx = raw.len();
        if members.len() == 1 {
            raw.push((members, ModuleKind::Leaf, parent));
            continue;
        }
        let comps = local_components(&rows, &members, false);
        let (kind, kids) = if comps.len() > 1 {
            (ModuleKind::Parallel, comps)
        } else {
            let co = local_components(&rows, &members, true);
            if co.len() > 1 {
                (ModuleKind::Series, co)
            } else {
                (ModuleKind::Prime, prime_children(&rows, &members))
            }
        };
        raw.push((members, kind, parent));
        for k in kids {
            stack.push((k, Some(idx)));
        }
    }

    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| {
        raw[b].0.len().cmp(&raw[a].0.len()).then(raw[a].0[0].cmp(&raw[b].0[0]))
    });
    let mut new_id = vec![0; raw.len()];
    for (i, &r) in order.iter().enumerate() {
        new_id[r] = i;
    }
    let mut modules = Vec::with_capacity(raw.len());
    let mut kinds = Vec::with_capacity(raw.len());
    let mut parent = Vec::with_capacity(raw.len());
    let mut children = vec![Vec::new(); raw.len()];
    for &r in &order {
        let (m, kind, p) = &raw[r];
        modules.push(VertexSet::from_sorted(m.clone()));
        kinds.push(*kind);
        let p = p.map(|p| new_id[p]);
        if let Some(p) = p {
            children[p].push(new_id[r]);
        }
        parent.push(p);
    }
    for c in children.iter_mut() {
        c.sort_unstable();
    }
    ModuleList {
        modules,
        kinds,
        parent,
        children,
    }
}

/// Strong modules `M != V` inducing trivially perfect graphs, largest first.
pub fn trivially_perfect_modules(g: &Graph) -> Vec<VertexSet> {
    tp_module_flags(g, &strong_modules(g))
        .into_iter()
        .filter_map(|(m, tp)| tp.then_some(m))
        .collect()
}

/// Pairs each strong module other than `V` with whether it induces a
/// trivially perfect graph. Descendants of a trivially perfect module are
/// marked without being re-tested.
pub(crate) fn tp_module_flags(g: &Graph, list: &ModuleList) -> Vec<(VertexSet, bool)> {
    let mut tp = vec![false; list.len()];
    for i in 0..list.len() {
        let inherited = list.parent(i).is_some_and(|p| tp[p]);
        tp[i] = inherited || {
            let (sub, _) = g.induced_unchecked(list.modules()[i].as_slice());
            is_trivially_perfect(&sub)
        };
    }
    (0..list.len())
        .filter(|&i| list.modules()[i].len() < g.n())
        .map(|i| (list.modules()[i].clone(), tp[i]))
        .collect()
}

/// Trivially perfect strong modules not contained in a larger one (and
/// different from `V`), largest first.
pub fn maximal_tp_modules(g: &Graph) -> Vec<VertexSet> {
    let list = strong_modules(g);
    let mut tp = vec![false; list.len()];
    let mut out = Vec::new();
    for i in 0..list.len() {
        let inherited = list.parent(i).is_some_and(|p| tp[p]);
        if inherited {
            tp[i] = true;
            continue;
        }
        let m = &list.modules()[i];
        let (sub, _) = g.induced_unchecked(m.as_slice());
        tp[i] = is_trivially_perfect(&sub);
        if tp[i] && m.len() < g.n() {
            out.push(m.clone());
        }
    }
    out
}
