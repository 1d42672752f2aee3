//! Reduction rules, the exhaustive reduction driver and bound audits.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::comb::{enumerate_reducible_combs, reduction_modules, small_antimatching_comb_in, validate_comb, Comb};
use crate::decomposition::{critical_cliques, is_module, trivially_perfect_modules};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::write_edge_list;
use crate::matching::{anti_matching_up_to, packing_prefix};
use crate::recognition::is_trivially_perfect;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Editing,
    Deletion,
    Completion,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Editing, Mode::Deletion, Mode::Completion];

    /// Whether a pair whose current adjacency is `present` may be toggled.
    pub fn allows(self, present: bool) -> bool {
        match self {
            Mode::Editing => true,
            Mode::Deletion => present,
            Mode::Completion => !present,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Editing => "editing",
            Mode::Deletion => "deletion",
            Mode::Completion => "completion",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "editing" => Ok(Mode::Editing),
            "deletion" => Ok(Mode::Deletion),
            "completion" => Ok(Mode::Completion),
            _ => Err(Error::InvalidInput(format!(
                "unknown mode `{s}` (expected editing, deletion or completion)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
    pub mode: Mode,
}

impl Instance {
    pub fn new(graph: Graph, k: usize, mode: Mode) -> Instance {
        Instance { graph, k, mode }
    }
}

/// One rule application: the vertices removed (ids of the input instance),
/// the renumbering of the survivors and the resulting instance.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub rule: u8,
    pub target: String,
    pub removed: VertexSet,
    pub map: Vec<Option<usize>>,
    pub instance: Instance,
}

fn reduction(inst: &Instance, rule: u8, target: String, removed: VertexSet) -> Option<Reduction> {
    if removed.is_empty() {
        return None;
    }
    let (graph, map) = inst.graph.remove_vertices(&removed);
    Some(Reduction {
        rule,
        target,
        removed,
        map,
        instance: Instance::new(graph, inst.k, inst.mode),
    })
}

/// Removes every connected component that is trivially perfect.
pub fn rule1_remove_tp_components(inst: &Instance) -> Option<Reduction> {
    let g = &inst.graph;
    let mut removed = Vec::new();
    let mut count = 0;
    for comp in g.connected_components() {
        if is_trivially_perfect(&g.induced_unchecked(comp.as_slice()).0) {
            removed.extend(comp.iter());
            count += 1;
        }
    }
    let removed = VertexSet::from(removed);
    reduction(inst, 1, format!("{count} trivially perfect component(s)"), removed)
}

/// Shrinks every critical clique to `k + 1` vertices, dropping the largest
/// ids.
pub fn rule2_trim_critical_cliques(inst: &Instance) -> Option<Reduction> {
    let cc = critical_cliques(&inst.graph);
    let mut removed = Vec::new();
    let mut count = 0;
    for class in cc.classes() {
        if class.len() > inst.k + 1 {
            removed.extend_from_slice(&class.as_slice()[inst.k + 1..]);
            count += 1;
        }
    }
    let removed = VertexSet::from(removed);
    reduction(inst, 2, format!("{count} critical clique(s) larger than k+1"), removed)
}

/// If the trivially perfect module `m` holds an anti-matching `D` of size
/// `k + 1`, keeps only `V(D)` of `m`.
pub fn rule3_antimatching_module(inst: &Instance, m: &VertexSet) -> Result<Option<Reduction>> {
    let g = &inst.graph;
    if !is_module(g, m) {
        return Err(Error::InvalidInput(format!("{m} is not a module")));
    }
    if !is_trivially_perfect(&g.induced_unchecked(m.as_slice()).0) {
        return Err(Error::InvalidInput(format!("{m} is not trivially perfect")));
    }
    let d = anti_matching_up_to(g, m, inst.k + 1)?;
    if d.len() <= inst.k {
        return Ok(None);
    }
    let removed = m.difference(&d.vertices());
    Ok(reduction(inst, 3, format!("module of {} vertices", m.len()), removed))
}

/// Removes the shaft cells strictly between a `(2k+1)`-packing of the shaft
/// read top-down and one read bottom-up, when the two do not share a cell.
pub fn rule4_shaft(inst: &Instance, cb: &Comb) -> Result<Option<Reduction>> {
    if !validate_comb(&inst.graph, cb) {
        return Err(Error::InvalidInput("not a comb of the graph".into()));
    }
    let r = 2 * inst.k + 1;
    let l = cb.len();
    let sizes = || cb.shaft.iter().map(VertexSet::len);
    let Some((pa, _)) = packing_prefix(sizes(), r) else {
        return Ok(None);
    };
    let Some((pb, _)) = packing_prefix(sizes().rev(), r) else {
        return Ok(None);
    };
    if pa + pb > l {
        return Ok(None);
    }
    let removed: VertexSet = cb.shaft[pa..l - pb].iter().flat_map(|c| c.iter()).collect();
    let target = format!("shaft cells {}..{} of a comb with {l} cells", pa + 1, l - pb);
    Ok(reduction(inst, 4, target, removed))
}

/// Removes the teeth outside three disjoint `(2k+1)`-packings: one over
/// `R_1, R_2, ...`, one over `R_l, R_{l-1}, ...` ending at `R_q`, and one
/// over `R_{q-1}, R_{q-2}, ...`.
pub fn rule5_teeth(inst: &Instance, cb: &Comb) -> Result<Option<Reduction>> {
    if !validate_comb(&inst.graph, cb) {
        return Err(Error::InvalidInput("not a comb of the graph".into()));
    }
    let r = 2 * inst.k + 1;
    let l = cb.len();
    let sizes: Vec<usize> = cb.teeth.iter().map(VertexSet::len).collect();
    let Some((pa, _)) = packing_prefix(sizes.iter().copied(), r) else {
        return Ok(None);
    };
    let Some((pc, _)) = packing_prefix(sizes.iter().rev().copied(), r) else {
        return Ok(None);
    };
    // R_c = R_q..R_l with q = l - pc + 1; R_b runs downwards from R_{q-1}
    let below = l - pc;
    let Some((pb, _)) = packing_prefix(sizes[..below].iter().rev().copied(), r) else {
        return Ok(None);
    };
    if pa + pb + pc > l {
        return Ok(None);
    }
    let removed: VertexSet = cb.teeth[pa..below - pb].iter().flat_map(|t| t.iter()).collect();
    let target = format!("teeth {}..{} of a comb with {l} teeth", pa + 1, below - pb);
    Ok(reduction(inst, 5, target, removed))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: u8,
    pub target: String,
    /// Removed vertices in original ids.
    pub removed: VertexSet,
    /// Renumbering of the working ids before the step.
    pub map: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub original_n: usize,
    pub steps: Vec<TraceStep>,
    pub final_instance: Instance,
    /// Original id of every vertex of the final instance.
    pub labels: Vec<usize>,
}

impl ReductionTrace {
    pub fn rules_fired(&self) -> usize {
        self.steps.len()
    }

    /// One `RULE<id> removed={...} map=[old->new,...]` line per step, each
    /// preceded by a `# ` line describing the target.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let _ = writeln!(out, "# {}", s.target);
            let _ = write!(out, "RULE{} removed={} map=[", s.rule, s.removed);
            let mut first = true;
            for (old, new) in s.map.iter().enumerate() {
                if let Some(new) = new {
                    if !first {
                        out.push(',');
                    }
                    first = false;
                    let _ = write!(out, "{old}->{new}");
                }
            }
            out.push_str("]\n");
        }
        out
    }

    /// The final instance as an edge list, with comments naming the mode
    /// and the original id of every vertex.
    pub fn kernel_text(&self) -> String {
        let ids: Vec<String> = self.labels.iter().map(|v| v.to_string()).collect();
        let comments = vec![
            format!("mode: {}", self.final_instance.mode),
            format!("original ids: {}", ids.join(" ")),
        ];
        write_edge_list(&self.final_instance.graph, Some(self.final_instance.k), &comments)
    }

    /// Reapplies the recorded removals to `original` and checks every
    /// recorded renumbering along the way.
    pub fn replay(&self, original: &Instance) -> Result<Instance> {
        if original.graph.n() != self.original_n {
            return Err(Error::InvalidInput("trace belongs to a different instance".into()));
        }
        let mut cur = original.clone();
        let mut labels: Vec<usize> = (0..cur.graph.n()).collect();
        for (i, s) in self.steps.iter().enumerate() {
            let mut local = Vec::with_capacity(s.removed.len());
            for v in &s.removed {
                match labels.binary_search(&v) {
                    Ok(p) => local.push(p),
                    Err(_) => {
                        return Err(Error::InvalidInput(format!(
                            "step {i} removes vertex {v}, which is already gone"
                        )))
                    }
                }
            }
            let (graph, map) = cur.graph.remove_vertices(&VertexSet::from(local));
            if map != s.map {
                return Err(Error::InvalidInput(format!("step {i} renumbers differently")));
            }
            labels.retain(|v| !s.removed.contains(*v));
            cur.graph = graph;
        }
        if labels != self.labels || cur != self.final_instance {
            return Err(Error::InvalidInput("replay does not reach the final instance".into()));
        }
        Ok(cur)
    }
}

struct Driver {
    cur: Instance,
    labels: Vec<usize>,
    steps: Vec<TraceStep>,
}

impl Driver {
    fn record(&mut self, red: Reduction) {
        let removed = red.removed.iter().map(|v| self.labels[v]).collect();
        self.labels = (0..self.labels.len())
            .filter(|&v| red.map[v].is_some())
            .map(|v| self.labels[v])
            .collect();
        self.steps.push(TraceStep {
            rule: red.rule,
            target: red.target,
            removed,
            map: red.map,
        });
        self.cur = red.instance;
    }

    fn to_labels(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_sorted(s.iter().map(|v| self.labels[v]).collect())
    }

    /// Current ids of a set given in original ids, if none of it is gone.
    fn to_current(&self, s: &VertexSet) -> Option<VertexSet> {
        s.iter()
            .map(|v| self.labels.binary_search(&v).ok())
            .collect::<Option<Vec<_>>>()
            .map(VertexSet::from_sorted)
    }

    /// Applies `rule` to each target in turn; targets are given in original
    /// ids so earlier applications do not invalidate later ones.
    fn sweep<F>(&mut self, targets: &[VertexSet], mut rule: F) -> bool
    where
        F: FnMut(&Instance, &VertexSet) -> Option<Reduction>,
    {
        let mut changed = false;
        for t in targets {
            let Some(local) = self.to_current(t) else { continue };
            if let Some(red) = rule(&self.cur, &local) {
                self.record(red);
                changed = true;
            }
        }
        changed
    }
}

/// Applies the rules until none changes the instance, in the order: Rule 1,
/// Rule 2, Rule 3 on every module from [`reduction_modules`], Rule 4 on the
/// small-anti-matching comb of every component of those modules, then
/// Rules 4 and 5 on every comb from [`enumerate_reducible_combs`].
/// Decompositions are recomputed after every change.
pub fn reduce_exhaustively(inst: &Instance) -> (Instance, ReductionTrace) {
    let n = inst.graph.n();
    let mut d = Driver {
        cur: inst.clone(),
        labels: (0..n).collect(),
        steps: Vec::new(),
    };
    'outer: loop {
        if let Some(red) = rule1_remove_tp_components(&d.cur) {
            d.record(red);
            continue;
        }
        if let Some(red) = rule2_trim_critical_cliques(&d.cur) {
            d.record(red);
            continue;
        }

        let modules: Vec<VertexSet> = reduction_modules(&d.cur.graph)
            .iter()
            .map(|m| d.to_labels(m))
            .collect();
        if d.sweep(&modules, |inst, m| rule3_antimatching_module(inst, m).ok().flatten()) {
            continue;
        }

        let mut components = Vec::new();
        for m in &modules {
            let local = d.to_current(m).expect("nothing removed yet");
            let (sub, map) = d.cur.graph.induced_unchecked(local.as_slice());
            for comp in sub.connected_components() {
                if comp.len() >= 2 {
                    components.push(d.to_labels(&comp.iter().map(|v| map[v]).collect()));
                }
            }
        }
        if d.sweep(&components, |inst, comp| {
            let cb = component_shaft_comb(&inst.graph, comp, inst.k)?;
            rule4_shaft(inst, &cb).ok().flatten()
        }) {
            continue;
        }

        for cb in enumerate_reducible_combs(&d.cur.graph, d.cur.k) {
            for rule in [rule4_shaft, rule5_teeth] {
                if let Ok(Some(red)) = rule(&d.cur, &cb) {
                    d.record(red);
                    continue 'outer;
                }
            }
        }
        break;
    }
    let trace = ReductionTrace {
        original_n: n,
        steps: d.steps,
        final_instance: d.cur.clone(),
        labels: d.labels,
    };
    (d.cur, trace)
}

/// The small-anti-matching comb of the component `comp` of a trivially
/// perfect module, in host ids with `V_p = N(comp)`.
fn component_shaft_comb(g: &Graph, comp: &VertexSet, k: usize) -> Option<Comb> {
    let (sub, map) = g.induced_unchecked(comp.as_slice());
    let cb = small_antimatching_comb_in(&sub, &sub.vertices(), k)?;
    Some(cb.lift(&map, &g.neighborhood_unchecked(comp.as_slice())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    CriticalClique { clique: VertexSet, bound: usize },
    Module { module: VertexSet, bound: usize },
    Shaft { comb: Box<Comb>, size: usize, bound: usize },
    Comb { comb: Box<Comb>, size: usize, bound: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CriticalClique { clique, bound } => {
                write!(f, "critical clique of size {} exceeds {bound}", clique.len())
            }
            Violation::Module { module, bound } => {
                write!(f, "trivially perfect module of size {} exceeds {bound}", module.len())
            }
            Violation::Shaft { size, bound, .. } => write!(f, "comb shaft of size {size} exceeds {bound}"),
            Violation::Comb { size, bound, .. } => write!(f, "comb of size {size} exceeds {bound}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub violations: Vec<Violation>,
    pub max_critical_clique: usize,
    pub max_module: usize,
    pub max_shaft: usize,
    pub max_comb: usize,
    pub modules_checked: usize,
    pub combs_checked: usize,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the size bounds a reduced instance satisfies: critical cliques
/// at most `k+1`, trivially perfect modules at most `11k+2`, and for every
/// enumerated comb a shaft of at most `6k+2` and at most `45k+8` vertices.
pub fn audit_bounds(inst: &Instance) -> AuditReport {
    let g = &inst.graph;
    let k = inst.k;
    let mut rep = AuditReport::default();

    let clique_bound = k + 1;
    for c in critical_cliques(g).classes() {
        rep.max_critical_clique = rep.max_critical_clique.max(c.len());
        if c.len() > clique_bound {
            rep.violations.push(Violation::CriticalClique {
                clique: c.clone(),
                bound: clique_bound,
            });
        }
    }

    let module_bound = 11 * k + 2;
    let mut modules = trivially_perfect_modules(g);
    modules.extend(reduction_modules(g));
    modules.sort();
    modules.dedup();
    rep.modules_checked = modules.len();
    for m in modules {
        rep.max_module = rep.max_module.max(m.len());
        if m.len() > module_bound {
            rep.violations.push(Violation::Module {
                module: m,
                bound: module_bound,
            });
        }
    }

    let (shaft_bound, comb_bound) = (6 * k + 2, 45 * k + 8);
    let combs = enumerate_reducible_combs(g, k);
    rep.combs_checked = combs.len();
    for cb in combs {
        let shaft = cb.shaft_size();
        let total = shaft + cb.teeth_size();
        rep.max_shaft = rep.max_shaft.max(shaft);
        rep.max_comb = rep.max_comb.max(total);
        if shaft > shaft_bound {
            rep.violations.push(Violation::Shaft {
                comb: Box::new(cb.clone()),
                size: shaft,
                bound: shaft_bound,
            });
        }
        if total > comb_bound {
            rep.violations.push(Violation::Comb {
                comb: Box::new(cb),
                size: total,
                bound: comb_bound,
            });
        }
    }
    rep
}
