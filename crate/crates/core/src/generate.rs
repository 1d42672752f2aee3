//! Seeded random trivially perfect graphs and planted editing instances.
//!
//! All randomness comes from ChaCha8 seeded with a 64-bit seed, so the same
//! spec always produces the same graph on every platform.

use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EditSet, Graph, GraphBuilder, Pair};
use crate::kernel::{Instance, Mode};

#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub seed: u64,
    /// Number of vertices.
    pub n: usize,
    /// Probability that a new forest node starts a new tree; otherwise it
    /// hangs below a uniformly chosen earlier node.
    pub root_prob: f64,
    /// Bag sizes are uniform in `1..=max_bag` (the last bag is cut to fit).
    pub max_bag: usize,
    /// Number of planted pair toggles.
    pub r: usize,
    pub mode: Mode,
}

impl GenSpec {
    pub fn new(seed: u64, n: usize) -> GenSpec {
        GenSpec {
            seed,
            n,
            root_prob: 0.05,
            max_bag: 3,
            r: 0,
            mode: Mode::Editing,
        }
    }

    pub fn with_edits(mut self, r: usize, mode: Mode) -> GenSpec {
        self.r = r;
        self.mode = mode;
        self
    }

    fn check(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.root_prob) {
            return Err(Error::InvalidInput(format!("root probability {} not in [0, 1]", self.root_prob)));
        }
        if self.max_bag == 0 {
            return Err(Error::InvalidInput("bag sizes must allow at least 1".into()));
        }
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        if self.r > pairs {
            return Err(Error::InvalidInput(format!("{} edits exceed the {pairs} vertex pairs", self.r)));
        }
        Ok(())
    }
}

/// The graph of a rooted forest with bags: each vertex is adjacent to its
/// own bag and every bag above it. Node `t` owns the next `bag_sizes[t]`
/// vertex ids, and every parent must be an earlier node.
pub fn realize_forest(parents: &[Option<usize>], bag_sizes: &[usize]) -> Result<Graph> {
    if parents.len() != bag_sizes.len() {
        return Err(Error::InvalidInput("one bag size per forest node is required".into()));
    }
    let mut start = Vec::with_capacity(parents.len() + 1);
    start.push(0);
    for (t, (&p, &s)) in parents.iter().zip(bag_sizes).enumerate() {
        if p.is_some_and(|p| p >= t) {
            return Err(Error::InvalidInput(format!("parent of node {t} must be an earlier node")));
        }
        if s == 0 {
            return Err(Error::InvalidInput(format!("bag of node {t} is empty")));
        }
        start.push(start[t] + s);
    }
    let n = *start.last().expect("nonempty");
    let mut b = GraphBuilder::new(n);
    for t in 0..parents.len() {
        let bag = start[t]..start[t + 1];
        for v in bag.clone() {
            for w in v + 1..bag.end {
                b.add_edge(v, w)?;
            }
            let mut a = parents[t];
            while let Some(p) = a {
                for w in start[p]..start[p + 1] {
                    b.add_edge(w, v)?;
                }
                a = parents[p];
            }
        }
    }
    Ok(b.build())
}

fn random_tp_graph(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Result<Graph> {
    spec.check()?;
    let mut parents = Vec::new();
    let mut sizes = Vec::new();
    let mut total = 0;
    while total < spec.n {
        let t = parents.len();
        let parent = if t == 0 || rng.gen_bool(spec.root_prob) {
            None
        } else {
            Some(rng.gen_range(0..t))
        };
        let size = rng.gen_range(1..=spec.max_bag).min(spec.n - total);
        parents.push(parent);
        sizes.push(size);
        total += size;
    }
    let g = realize_forest(&parents, &sizes)?;
    let mut perm: Vec<usize> = (0..spec.n).collect();
    perm.shuffle(rng);
    Graph::from_edges(spec.n, g.edges().map(|(u, v)| (perm[u], perm[v])))
}

/// A random trivially perfect graph on `spec.n` vertices with shuffled ids.
pub fn gen_tp_graph(spec: &GenSpec) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    random_tp_graph(spec, &mut rng)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedInstance {
    pub instance: Instance,
    /// The trivially perfect graph before planting.
    pub base: Graph,
    /// Toggled pairs; undoing them is a solution of size `k`.
    pub planted: Vec<Pair>,
    pub comments: Vec<String>,
}

impl PlantedInstance {
    /// Edits that turn the planted instance back into `base`.
    pub fn solution(&self) -> EditSet {
        EditSet::relative_to(
            &self.instance.graph,
            self.planted.iter().map(|p| (p.low(), p.high())),
        )
        .expect("planted pairs are in range")
    }
}

/// [`gen_tp_graph`] followed by `spec.r` distinct pair toggles. Deletion
/// instances get planted additions and completion instances planted
/// deletions, so that undoing them respects the mode. `k = r`.
pub fn plant_instance(spec: &GenSpec) -> Result<PlantedInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let base = random_tp_graph(spec, &mut rng)?;
    let n = spec.n;
    let total = n * n.saturating_sub(1) / 2;
    // pairs whose toggle can later be undone within the mode
    let plantable = |u: usize, v: usize| match spec.mode {
        Mode::Editing => true,
        Mode::Deletion => !base.has_edge(u, v),
        Mode::Completion => base.has_edge(u, v),
    };
    let available = match spec.mode {
        Mode::Editing => total,
        Mode::Deletion => total - base.m(),
        Mode::Completion => base.m(),
    };
    if spec.r > available {
        return Err(Error::InvalidInput(format!(
            "only {available} pairs can be planted in {} mode, {} requested",
            spec.mode, spec.r
        )));
    }

    let mut planted: Vec<Pair> = if available <= 4 * spec.r {
        let all: Vec<Pair> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| plantable(u, v))
            .map(|(u, v)| Pair::new(u, v).expect("u < v"))
            .collect();
        index::sample(&mut rng, all.len(), spec.r).into_iter().map(|i| all[i]).collect()
    } else {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(spec.r);
        while out.len() < spec.r {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            let Some(p) = Pair::new(u, v) else { continue };
            if plantable(p.low(), p.high()) && seen.insert(p) {
                out.push(p);
            }
        }
        out
    };
    planted.sort();

    let edits = EditSet::relative_to(&base, planted.iter().map(|p| (p.low(), p.high())))?;
    let graph = base.apply_edits(&edits)?;
    let mut comments = vec![
        format!("seed: {} n: {} mode: {}", spec.seed, n, spec.mode),
        format!("k equals the {} planted edits; the optimum may be smaller", spec.r),
    ];
    for p in &planted {
        let sign = if base.has_edge(p.low(), p.high()) { '-' } else { '+' };
        comments.push(format!("planted: {sign}{} {}", p.low(), p.high()));
    }
    Ok(PlantedInstance {
        instance: Instance::new(graph, spec.r, spec.mode),
        base,
        planted,
        comments,
    })
}
