//! Combs: a clique shaft `C_1..C_l` of twin classes with pairwise
//! non-adjacent trivially perfect teeth `R_1..R_l`, where `C_i` sees exactly
//! the teeth `R_i..R_l`. Vertices of the shaft additionally see `V_p ∪ V_f`
//! outside the comb, vertices of the teeth see only `V_p`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::decomposition::{critical_cliques, is_module, maximal_tp_modules};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::{anti_matching_up_to, max_anti_matching};
use crate::recognition::{build_ucd, is_trivially_perfect, universal_within, Ucd};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Comb {
    pub shaft: Vec<VertexSet>,
    pub teeth: Vec<VertexSet>,
    pub vp: VertexSet,
    pub vf: VertexSet,
}

impl Comb {
    /// Number of shaft cells `l`.
    pub fn len(&self) -> usize {
        self.shaft.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shaft.is_empty()
    }

    /// `C`.
    pub fn shaft_vertices(&self) -> VertexSet {
        self.shaft.iter().flat_map(|c| c.iter()).collect()
    }

    /// `R`.
    pub fn teeth_vertices(&self) -> VertexSet {
        self.teeth.iter().flat_map(|r| r.iter()).collect()
    }

    pub fn shaft_size(&self) -> usize {
        self.shaft.iter().map(VertexSet::len).sum()
    }

    pub fn teeth_size(&self) -> usize {
        self.teeth.iter().map(VertexSet::len).sum()
    }

    /// A shaft-only comb (some tooth is empty). Never valid.
    pub fn is_degenerate(&self) -> bool {
        self.teeth.iter().any(VertexSet::is_empty)
    }

    /// Renames every vertex through `map` and adds `extra_vp` to `V_p`.
    /// Used to lift a comb of `G[M]` for a module `M` to the host graph,
    /// with `extra_vp = N(M)`.
    pub fn lift(&self, map: &[usize], extra_vp: &VertexSet) -> Comb {
        let rename = |s: &VertexSet| s.iter().map(|v| map[v]).collect::<VertexSet>();
        Comb {
            shaft: self.shaft.iter().map(rename).collect(),
            teeth: self.teeth.iter().map(rename).collect(),
            vp: rename(&self.vp).union(extra_vp),
            vf: rename(&self.vf),
        }
    }

    /// `SHAFT i: ...`, `TOOTH i: ...`, `VP: ...`, `VF: ...` lines with
    /// 1-based cell indices.
    pub fn to_text(&self) -> String {
        fn line(out: &mut String, head: &str, s: &VertexSet) {
            out.push_str(head);
            out.push(':');
            for v in s {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        let mut out = String::new();
        for (i, c) in self.shaft.iter().enumerate() {
            line(&mut out, &format!("SHAFT {}", i + 1), c);
        }
        for (i, r) in self.teeth.iter().enumerate() {
            line(&mut out, &format!("TOOTH {}", i + 1), r);
        }
        line(&mut out, "VP", &self.vp);
        line(&mut out, "VF", &self.vf);
        out
    }
}

/// Checks every comb condition literally against `g`.
pub fn validate_comb(g: &Graph, cb: &Comb) -> bool {
    let n = g.n();
    let l = cb.shaft.len();
    if l == 0 || cb.teeth.len() != l {
        return false;
    }
    if cb.shaft.iter().chain(&cb.teeth).any(VertexSet::is_empty) {
        return false;
    }
    // 0 = outside, 1 = shaft, 2 = teeth, 3 = vp, 4 = vf
    let mut role = vec![0u8; n];
    let mut cell = vec![usize::MAX; n];
    let mut claim = |s: &VertexSet, r: u8, idx: usize| -> bool {
        for v in s {
            if v >= n || role[v] != 0 {
                return false;
            }
            role[v] = r;
            cell[v] = idx;
        }
        true
    };
    for (i, c) in cb.shaft.iter().enumerate() {
        if !claim(c, 1, i) {
            return false;
        }
    }
    for (i, r) in cb.teeth.iter().enumerate() {
        if !claim(r, 2, i) {
            return false;
        }
    }
    if !claim(&cb.vp, 3, 0) || !claim(&cb.vf, 4, 0) {
        return false;
    }

    let shaft = cb.shaft_vertices();
    if !g.is_clique(shaft.as_slice()) {
        return false;
    }
    // shaft cells are exactly the twin classes of G restricted to C
    let mut hoods: Vec<Vec<usize>> = Vec::with_capacity(l);
    for c in &cb.shaft {
        let first = g.closed_neighborhood(c.first().expect("nonempty"));
        if c.iter().any(|v| g.closed_neighborhood(v) != first) {
            return false;
        }
        if hoods.contains(&first) {
            return false;
        }
        hoods.push(first);
    }

    for r in &cb.teeth {
        if !is_module(g, r) {
            return false;
        }
        if !is_trivially_perfect(&g.induced_unchecked(r.as_slice()).0) {
            return false;
        }
    }

    for (i, c) in cb.shaft.iter().enumerate() {
        for x in c {
            let mut teeth_seen = vec![0usize; l];
            let mut outside = Vec::new();
            for &w in g.neighbors(x) {
                match role[w] {
                    2 => teeth_seen[cell[w]] += 1,
                    1 => {}
                    0 => return false,
                    _ => outside.push(w),
                }
            }
            // N(x) ∩ R = R_i ∪ ... ∪ R_l
            for (j, seen) in teeth_seen.iter().enumerate() {
                let want = if j >= i { cb.teeth[j].len() } else { 0 };
                if *seen != want {
                    return false;
                }
            }
            if outside.len() != cb.vp.len() + cb.vf.len() {
                return false;
            }
        }
    }

    for (i, r) in cb.teeth.iter().enumerate() {
        let mut shaft_seen = vec![false; l];
        for y in r {
            let mut vp_seen = 0;
            for &w in g.neighbors(y) {
                match role[w] {
                    1 => shaft_seen[cell[w]] = true,
                    // teeth are non-adjacent to each other
                    2 if cell[w] != i => return false,
                    2 => {}
                    3 => vp_seen += 1,
                    _ => return false,
                }
            }
            if vp_seen != cb.vp.len() {
                return false;
            }
        }
        // N(R_i) ∩ C = C_1 ∪ ... ∪ C_i, and every such cell fully
        for (j, seen) in shaft_seen.iter().enumerate() {
            if *seen != (j <= i) {
                return false;
            }
        }
        for y in r {
            for c in &cb.shaft[..=i] {
                if !c.iter().all(|x| g.has_edge(x, y)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Recomputes the ordered partitions and `V_p`, `V_f` of a comb from its
/// shaft and teeth vertex sets alone. Returns `None` when no valid comb has
/// this shaft and these teeth.
pub fn canonical_comb(g: &Graph, shaft: &VertexSet, teeth: &VertexSet) -> Option<Comb> {
    if shaft.is_empty() || teeth.is_empty() || !shaft.is_disjoint(teeth) {
        return None;
    }
    let inside = shaft.union(teeth);

    // shaft cells: twin classes, ordered by how many teeth vertices they see
    let mut classes: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for x in shaft {
        classes.entry(g.closed_neighborhood(x)).or_default().push(x);
    }
    let mut cells: Vec<(usize, VertexSet)> = classes
        .into_values()
        .map(|c| {
            let seen = g.neighbors(c[0]).iter().filter(|&&w| teeth.contains(w)).count();
            (seen, VertexSet::from(c))
        })
        .collect();
    cells.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.first().cmp(&b.1.first())));

    // teeth: grouped by shaft neighborhood, smallest first
    let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for y in teeth {
        let key: Vec<usize> = g.neighbors(y).iter().copied().filter(|&w| shaft.contains(w)).collect();
        groups.entry(key).or_default().push(y);
    }
    let mut tooth_list: Vec<(usize, VertexSet)> = groups
        .into_iter()
        .map(|(k, v)| (k.len(), VertexSet::from(v)))
        .collect();
    tooth_list.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.first().cmp(&b.1.first())));

    let outside = |v: usize| -> VertexSet {
        g.neighbors(v).iter().copied().filter(|&w| !inside.contains(w)).collect()
    };
    let vp = outside(teeth.first()?);
    let vf = outside(shaft.first()?).difference(&vp);
    let cb = Comb {
        shaft: cells.into_iter().map(|c| c.1).collect(),
        teeth: tooth_list.into_iter().map(|t| t.1).collect(),
        vp,
        vf,
    };
    validate_comb(g, &cb).then_some(cb)
}

/// The comb read off a top-down chain `path` of UCD nodes: shaft cells are
/// the path bags, tooth `i` collects the subtrees hanging off node `i`, and
/// `V_p` is the union of bags strictly above the path. When node `i` has no
/// off-path subtree the path is cut there and the rest of its subtree joins
/// tooth `i - 1`; a cut at the first node is an error.
pub fn comb_from_ucd_path(g: &Graph, d: &Ucd, path: &[usize]) -> Result<Comb> {
    if path.is_empty() {
        return Err(Error::InvalidInput("empty UCD path".into()));
    }
    if path.iter().any(|&t| t >= d.node_count()) {
        return Err(Error::InvalidInput("UCD path names an unknown node".into()));
    }
    for w in path.windows(2) {
        if d.parent(w[1]) != Some(w[0]) {
            return Err(Error::InvalidInput(format!(
                "UCD path is not a chain: {} is not a child of {}",
                w[1], w[0]
            )));
        }
    }
    if d.bags().iter().flat_map(|b| b.iter()).any(|v| v >= g.n()) {
        return Err(Error::InvalidInput("UCD does not match the graph".into()));
    }

    let mut shaft = Vec::new();
    let mut teeth: Vec<VertexSet> = Vec::new();
    for (i, &t) in path.iter().enumerate() {
        let next = path.get(i + 1).copied();
        let tooth: VertexSet = d
            .children(t)
            .iter()
            .filter(|&&c| Some(c) != next)
            .flat_map(|&c| d.subtree_vertices(c).into_vec())
            .collect();
        if tooth.is_empty() {
            if i == 0 {
                return Err(Error::InvalidInput(
                    "UCD path yields a comb with an empty first tooth".into(),
                ));
            }
            let rest = d.subtree_vertices(t);
            let last = teeth.last_mut().expect("i > 0");
            *last = last.union(&rest);
            break;
        }
        shaft.push(d.bag(t).clone());
        teeth.push(tooth);
    }
    let vp = d
        .ancestors(path[0])
        .into_iter()
        .flat_map(|a| d.bag(a).iter())
        .collect();
    Ok(Comb {
        shaft,
        teeth,
        vp,
        vf: VertexSet::new(),
    })
}

/// A comb covering all of a connected trivially perfect graph whose teeth
/// hold at most `4α` vertices, `α` being the maximum anti-matching size.
///
/// Universal cliques are peeled off one at a time; at each step at most one
/// remaining component has more than `α` vertices and the peeling continues
/// inside it, the other components forming the tooth of that step. When the
/// last component is a clique, its largest vertex becomes the last tooth.
/// A clique input yields a degenerate comb (single shaft cell, empty tooth).
pub fn build_comb_small_antimatching(g: &Graph) -> Result<Comb> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::InvalidInput("graph must be connected and nonempty".into()));
    }
    if !is_trivially_perfect(g) {
        return Err(Error::InvalidInput("graph must be trivially perfect".into()));
    }
    let alpha = max_anti_matching(g, &g.vertices())?.len();
    Ok(peel_comb(g, alpha))
}

/// The peeling construction for a known `alpha`.
pub(crate) fn peel_comb(g: &Graph, alpha: usize) -> Comb {
    let n = g.n();
    let mut inside = vec![true; n];
    let mut current: Vec<usize> = (0..n).collect();
    let mut shaft = Vec::new();
    let mut teeth = Vec::new();
    loop {
        let universal = universal_within(g, &current, &inside);
        for &u in &universal {
            inside[u] = false;
        }
        let rest: Vec<usize> = current.iter().copied().filter(|&v| inside[v]).collect();
        let comps = g.components_within(&rest);
        let big = comps.iter().position(|c| c.len() > alpha);
        match big {
            Some(b) => {
                let tooth: VertexSet = comps
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != b)
                    .flat_map(|(_, c)| c.iter())
                    .collect();
                shaft.push(VertexSet::from_sorted(universal));
                teeth.push(tooth);
                current = comps[b].as_slice().to_vec();
                let keep: HashSet<usize> = current.iter().copied().collect();
                for v in rest {
                    if !keep.contains(&v) {
                        inside[v] = false;
                    }
                }
            }
            None => {
                let tooth: VertexSet = comps.iter().flat_map(|c| c.iter()).collect();
                let mut cell = universal;
                if tooth.is_empty() && !shaft.is_empty() && cell.len() > 1 {
                    let z = cell.pop().expect("nonempty");
                    shaft.push(VertexSet::from_sorted(cell));
                    teeth.push(VertexSet::from_sorted(vec![z]));
                } else {
                    shaft.push(VertexSet::from_sorted(cell));
                    teeth.push(tooth);
                }
                break;
            }
        }
    }
    Comb {
        shaft,
        teeth,
        vp: VertexSet::new(),
        vf: VertexSet::new(),
    }
}

/// Trivially perfect modules targeted by the reduction driver: the maximal
/// trivially perfect strong modules, the union of the trivially perfect
/// children of every parallel node that is not itself trivially perfect,
/// and, for such series nodes, the union of their single-vertex children
/// with each non-trivial trivially perfect child.
pub fn reduction_modules(g: &Graph) -> Vec<VertexSet> {
    use crate::decomposition::{strong_modules, ModuleKind};
    let list = strong_modules(g);
    let mut tp = vec![false; list.len()];
    for i in 0..list.len() {
        tp[i] = list.parent(i).is_some_and(|p| tp[p])
            || is_trivially_perfect(&g.induced_unchecked(list.modules()[i].as_slice()).0);
    }
    let mut out: Vec<VertexSet> = maximal_tp_modules_from(&list, &tp, g.n());
    for i in 0..list.len() {
        if tp[i] {
            continue;
        }
        let kids = list.children(i);
        match list.kind(i) {
            ModuleKind::Parallel => {
                let tp_kids: Vec<usize> = kids.iter().copied().filter(|&c| tp[c]).collect();
                if tp_kids.len() >= 2 {
                    out.push(tp_kids.iter().flat_map(|&c| list.modules()[c].iter()).collect());
                }
            }
            ModuleKind::Series => {
                let singles: VertexSet = kids
                    .iter()
                    .filter(|&&c| list.modules()[c].len() == 1)
                    .flat_map(|&c| list.modules()[c].iter())
                    .collect();
                if singles.is_empty() {
                    continue;
                }
                for &c in kids {
                    if tp[c] && list.modules()[c].len() > 1 {
                        out.push(singles.union(&list.modules()[c]));
                    }
                }
            }
            _ => {}
        }
    }
    out.retain(|m| m.len() >= 2);
    out.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    out.dedup();
    out
}

fn maximal_tp_modules_from(
    list: &crate::decomposition::ModuleList,
    tp: &[bool],
    n: usize,
) -> Vec<VertexSet> {
    (0..list.len())
        .filter(|&i| tp[i] && list.modules()[i].len() < n)
        .filter(|&i| list.parent(i).is_none_or(|p| !tp[p]))
        .map(|i| list.modules()[i].clone())
        .collect()
}

/// Combs for the shaft and teeth rules to target:
///
/// * inside every module from [`reduction_modules`]: the comb of every
///   root-to-leaf path of its UCD, and the small-anti-matching comb of each
///   component when that component has no `(k+1)`-anti-matching;
/// * chains of teeth groups (unions of maximal trivially perfect strong
///   modules sharing a neighborhood) whose neighborhoods grow by one twin
///   class at a time, extended greedily from each group.
///
/// Only valid combs with at least two shaft cells are returned, without
/// duplicates.
pub fn enumerate_reducible_combs(g: &Graph, k: usize) -> Vec<Comb> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |cb: Comb, out: &mut Vec<Comb>| {
        if cb.len() >= 2 && !cb.is_degenerate() && seen.insert((cb.shaft.clone(), cb.teeth.clone())) {
            out.push(cb);
        }
    };

    for m in reduction_modules(g) {
        for cb in module_combs(g, &m, k) {
            if validate_comb(g, &cb) {
                push(cb, &mut out);
            }
        }
    }
    for cb in chain_combs(g) {
        push(cb, &mut out);
    }
    out
}

/// UCD-path combs and small-anti-matching combs inside a trivially perfect
/// module `m`, in host ids.
pub(crate) fn module_combs(g: &Graph, m: &VertexSet, k: usize) -> Vec<Comb> {
    let hood = g.neighborhood_unchecked(m.as_slice());
    let (sub, map) = g.induced_unchecked(m.as_slice());
    let Ok(d) = build_ucd(&sub) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for path in d.root_to_leaf_paths() {
        if let Ok(cb) = comb_from_ucd_path(&sub, &d, &path) {
            out.push(cb.lift(&map, &hood));
        }
    }
    for comp in sub.connected_components() {
        if let Some(cb) = small_antimatching_comb_in(&sub, &comp, k) {
            let host: Vec<usize> = comp.iter().map(|v| map[v]).collect();
            out.push(cb.lift(&host, &hood));
        }
    }
    out
}

/// The small-anti-matching comb of `G[comp]` (local ids of `comp`), when
/// `G[comp]` has no `(k+1)`-anti-matching.
pub(crate) fn small_antimatching_comb_in(g: &Graph, comp: &VertexSet, k: usize) -> Option<Comb> {
    if comp.len() < 2 {
        return None;
    }
    let alpha = anti_matching_up_to(g, comp, k + 1).ok()?.len();
    if alpha > k {
        return None;
    }
    let (sub, _) = g.induced_unchecked(comp.as_slice());
    Some(peel_comb(&sub, alpha))
}

fn mix(v: usize) -> u64 {
    // splitmix64 finalizer
    let mut z = (v as u64).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn set_hash<'a, I: IntoIterator<Item = &'a usize>>(s: I) -> u64 {
    s.into_iter().fold(0u64, |h, &v| h.wrapping_add(mix(v)))
}

fn chain_combs(g: &Graph) -> Vec<Comb> {
    let n = g.n();
    // atoms: maximal trivially perfect strong modules, other vertices alone
    let mut atom_of = vec![usize::MAX; n];
    let mut atoms: Vec<Vec<usize>> = Vec::new();
    for m in maximal_tp_modules(g) {
        for v in &m {
            atom_of[v] = atoms.len();
        }
        atoms.push(m.into_vec());
    }
    for v in 0..n {
        if atom_of[v] == usize::MAX {
            atom_of[v] = atoms.len();
            atoms.push(vec![v]);
        }
    }
    // groups: atoms with identical open neighborhoods
    let mut group_index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (hood, members)
    for a in &atoms {
        let hood = g.neighborhood_unchecked(a).into_vec();
        let next = groups.len();
        let gi = *group_index.entry(hood.clone()).or_insert(next);
        if gi == next {
            groups.push((hood, Vec::new()));
        }
        groups[gi].1.extend_from_slice(a);
    }
    for grp in groups.iter_mut() {
        grp.1.sort_unstable();
    }
    let mut by_hash: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, (hood, _)) in groups.iter().enumerate() {
        by_hash.entry(set_hash(hood)).or_default().push(i);
    }
    let cc = critical_cliques(g);

    let mut out = Vec::new();
    for start in 0..groups.len() {
        // walk upwards: teeth with smaller neighborhoods, shaft cells between
        let mut chain = vec![start];
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut cur = start;
        loop {
            let hood = &groups[cur].0;
            let h = set_hash(hood);
            let mut by_class: HashMap<usize, Vec<usize>> = HashMap::new();
            for &v in hood {
                by_class.entry(cc.class_of(v)).or_default().push(v);
            }
            let mut best: Option<(usize, usize, Vec<usize>)> = None;
            for part in by_class.into_values() {
                let target = h.wrapping_sub(set_hash(&part));
                let Some(cands) = by_hash.get(&target) else { continue };
                for &y in cands {
                    if chain.contains(&y) {
                        continue;
                    }
                    let yh = &groups[y].0;
                    if yh.len() + part.len() != hood.len()
                        || !yh.iter().all(|v| hood.binary_search(v).is_ok() && part.binary_search(v).is_err())
                    {
                        continue;
                    }
                    let key = (part.len(), part[0]);
                    if best.as_ref().is_none_or(|b| key < (b.0, b.2[0])) {
                        best = Some((part.len(), y, part.clone()));
                    }
                }
            }
            let Some((_, y, part)) = best else { break };
            chain.push(y);
            cells.push(part);
            cur = y;
        }
        if chain.len() < 2 {
            continue;
        }
        chain.reverse();
        cells.reverse();
        // chain[0] is the top tooth; cells[i] separates chain[i] and chain[i+1]
        for top in 0..chain.len() - 1 {
            if let Some(cb) = close_chain(g, &cc, &groups, &chain[top..], &cells[top..]) {
                out.push(cb);
                break;
            }
        }
    }
    out
}

/// Picks the first shaft cell for a chain of teeth groups and returns the
/// resulting comb if it is valid.
fn close_chain(
    g: &Graph,
    cc: &crate::decomposition::CriticalCliquePartition,
    groups: &[(Vec<usize>, Vec<usize>)],
    chain: &[usize],
    cells: &[Vec<usize>],
) -> Option<Comb> {
    let top_hood = &groups[chain[0]].0;
    let mut by_class: Vec<(usize, Vec<usize>)> = Vec::new();
    for &v in top_hood {
        let c = cc.class_of(v);
        match by_class.iter_mut().find(|(k, _)| *k == c) {
            Some((_, list)) => list.push(v),
            None => by_class.push((c, vec![v])),
        }
    }
    let teeth: Vec<VertexSet> = chain
        .iter()
        .map(|&gi| VertexSet::from_sorted(groups[gi].1.clone()))
        .collect();
    for (_, first_cell) in by_class {
        let first = VertexSet::from_sorted(first_cell);
        let vp = VertexSet::from_sorted(top_hood.clone()).difference(&first);
        let mut shaft = vec![first];
        shaft.extend(cells.iter().map(|c| VertexSet::from_sorted(c.clone())));
        let inside = shaft
            .iter()
            .chain(&teeth)
            .fold(VertexSet::new(), |acc, s| acc.union(s));
        let x = shaft[0].first().expect("nonempty");
        let vf: VertexSet = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&w| !inside.contains(w) && !vp.contains(w))
            .collect();
        let cb = Comb {
            shaft,
            teeth: teeth.clone(),
            vp,
            vf,
        };
        if validate_comb(g, &cb) {
            return Some(cb);
        }
    }
    None
}
