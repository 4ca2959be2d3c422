//! Test ensembles: every graph on few vertices up to isomorphism, plus seeded
//! random samples and line graphs.

use std::collections::HashSet;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{line_graph, random_claw_free, random_graph, Graph, CLAW_FREE_RETRY_CAP};

/// Largest vertex count accepted by [`canonical_key`].
pub const CANON_MAX_N: usize = 11;

/// Canonical code of `g`: the smallest upper-triangle adjacency code over
/// all relabelings compatible with colour refinement. Two graphs of the
/// same order are isomorphic iff their keys agree. `None` above
/// [`CANON_MAX_N`] vertices.
pub fn canonical_key(g: &Graph) -> Option<u64> {
    let n = g.n();
    if n > CANON_MAX_N {
        return None;
    }
    if n < 2 {
        return Some(0);
    }
    let adj: Vec<u16> = (0..n).map(|v| g.nbrs(v).low_mask() as u16).collect();
    let cells = refine(&adj);
    let mut search = Search {
        adj: &adj,
        n,
        best: u64::MAX,
        order: Vec::with_capacity(n),
        used: 0,
        cells: &cells,
    };
    search.run(0, 0, false);
    Some(search.best)
}

/// Colour refinement. Returns the vertices grouped into cells, cells in a
/// canonical order.
fn refine(adj: &[u16]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nc: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| color[w]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        color = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

struct Search<'a> {
    adj: &'a [u16],
    n: usize,
    best: u64,
    order: Vec<usize>,
    used: u16,
    cells: &'a [Vec<usize>],
}

impl Search<'_> {
    fn total_bits(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Assigns position `pos`; `code` holds the bits of pairs among earlier
    /// positions. `below` records that the prefix is already smaller than
    /// `best`'s.
    fn run(&mut self, pos: usize, code: u64, below: bool) {
        if pos == self.n {
            if code < self.best {
                self.best = code;
            }
            return;
        }
        let mut cell = 0;
        let mut start = 0;
        while start + self.cells[cell].len() <= pos {
            start += self.cells[cell].len();
            cell += 1;
        }
        for i in 0..self.cells[cell].len() {
            let v = self.cells[cell][i];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut bits = 0u64;
            for &p in &self.order {
                bits = bits << 1 | u64::from(self.adj[v] >> p & 1);
            }
            let next = code << pos | bits;
            let mut now_below = below;
            if !below && self.best != u64::MAX {
                let len = pos * (pos + 1) / 2;
                let prefix = self.best >> (self.total_bits() - len);
                if next > prefix {
                    continue;
                }
                now_below = next < prefix;
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.run(pos + 1, next, now_below);
            self.used &= !(1 << v);
            self.order.pop();
        }
    }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical key.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    assert!(
        n <= CANON_MAX_N,
        "exhaustive enumeration is limited to {CANON_MAX_N} vertices"
    );
    let mut layer = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next: Vec<(u64, Graph)> = Vec::new();
        for base in &layer {
            for mask in 0u32..(1 << (m - 1)) {
                let g = Graph::from_fn(m, |i, j| {
                    if j == m - 1 {
                        mask >> i & 1 == 1
                    } else {
                        base.has_edge(i, j)
                    }
                });
                let key = canonical_key(&g).expect("small");
                if seen.insert(key) {
                    next.push((key, g));
                }
            }
        }
        next.sort_by_key(|(k, _)| *k);
        layer = next.into_iter().map(|(_, g)| g).collect();
    }
    layer
}

/// A graph tagged with a stable identifier.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub id: String,
    pub graph: Graph,
}

/// Which graphs make up a verification ensemble.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    /// Every isomorphism class on `1..=max_exhaustive` vertices.
    pub max_exhaustive: usize,
    /// Random samples on `sample_min_n..=sample_max_n` vertices.
    pub random_samples: usize,
    pub sample_min_n: usize,
    pub sample_max_n: usize,
    /// Line graphs of random graphs on at most `line_base_max_n` vertices.
    pub line_graphs: usize,
    pub line_base_max_n: usize,
    pub seed: u64,
}

impl Default for EnsembleSpec {
    fn default() -> Self {
        EnsembleSpec {
            max_exhaustive: 7,
            random_samples: 500,
            sample_min_n: 8,
            sample_max_n: 9,
            line_graphs: 100,
            line_base_max_n: 7,
            seed: 2024,
        }
    }
}

impl EnsembleSpec {
    pub fn quick() -> Self {
        EnsembleSpec {
            max_exhaustive: 5,
            random_samples: 40,
            line_graphs: 10,
            ..Self::default()
        }
    }
}

impl FromStr for EnsembleSpec {
    type Err = Error;

    /// `default`, `quick`, or comma separated `key=value` overrides on top of
    /// the default (the first entry may also be `quick`).
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(',').map(str::trim).filter(|p| !p.is_empty()).peekable();
        let mut spec = match parts.peek() {
            Some(&"quick") => {
                parts.next();
                Self::quick()
            }
            Some(&"default") => {
                parts.next();
                Self::default()
            }
            _ => Self::default(),
        };
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::input(format!("ensemble entry {part:?} is not key=value")))?;
            let value: u64 = value
                .parse()
                .map_err(|_| Error::input(format!("ensemble value {value:?} is not an integer")))?;
            let small = || usize::try_from(value).map_err(|_| Error::input("ensemble value too large"));
            match key {
                "max_exhaustive" | "exhaustive" => spec.max_exhaustive = small()?,
                "random_samples" | "samples" => spec.random_samples = small()?,
                "sample_min_n" => spec.sample_min_n = small()?,
                "sample_max_n" => spec.sample_max_n = small()?,
                "line_graphs" => spec.line_graphs = small()?,
                "line_base_max_n" => spec.line_base_max_n = small()?,
                "seed" => spec.seed = value,
                _ => return Err(Error::input(format!("unknown ensemble key {key:?}"))),
            }
        }
        if spec.max_exhaustive > 8 {
            return Err(Error::input("max_exhaustive above 8 is not desk scale"));
        }
        if spec.sample_min_n > spec.sample_max_n {
            return Err(Error::input("sample_min_n exceeds sample_max_n"));
        }
        Ok(spec)
    }
}

/// Edge probabilities cycled through by the claw-free sampler. Very sparse
/// and very dense graphs pass rejection quickly; the middle values add
/// graphs of intermediate degree.
const CLAW_FREE_PROBABILITIES: [f64; 6] = [0.15, 0.25, 0.35, 0.6, 0.75, 0.9];
const GENERAL_PROBABILITIES: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];

fn exhaustive(spec: &EnsembleSpec, keep: impl Fn(&Graph) -> bool) -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for n in 1..=spec.max_exhaustive {
        for (idx, graph) in graphs_on(n).into_iter().enumerate() {
            if keep(&graph) {
                out.push(NamedGraph {
                    id: format!("ex{n}-{idx:04}"),
                    graph,
                });
            }
        }
    }
    out
}

fn sample_size(i: usize, spec: &EnsembleSpec) -> usize {
    spec.sample_min_n + i % (spec.sample_max_n - spec.sample_min_n + 1)
}

fn line_graphs(spec: &EnsembleSpec) -> Vec<NamedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x6c69_6e65);
    (0..spec.line_graphs)
        .map(|i| {
            let h = loop {
                let base_n = rng.gen_range(2..=spec.line_base_max_n.max(2));
                let p = rng.gen_range(0.2..0.7);
                let h = random_graph(base_n, p, &mut rng);
                if h.edge_count() > 0 {
                    break h;
                }
            };
            NamedGraph {
                id: format!("lg-{i:03}"),
                graph: line_graph(&h),
            }
        })
        .collect()
}

/// Claw-free graphs: the exhaustive classes that are claw-free, seeded
/// rejection samples and line graphs.
pub fn claw_free_ensemble(spec: &EnsembleSpec) -> Result<Vec<NamedGraph>> {
    let mut out = exhaustive(spec, Graph::is_claw_free);
    for i in 0..spec.random_samples {
        let n = sample_size(i, spec);
        let p = CLAW_FREE_PROBABILITIES[i % CLAW_FREE_PROBABILITIES.len()];
        let seed = spec.seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
        let graph = random_claw_free(n, p, seed, CLAW_FREE_RETRY_CAP)?;
        out.push(NamedGraph {
            id: format!("rcf{n}-{i:03}"),
            graph,
        });
    }
    out.extend(line_graphs(spec));
    Ok(out)
}

/// Every exhaustive class plus unrestricted random graphs and line graphs.
pub fn general_ensemble(spec: &EnsembleSpec) -> Vec<NamedGraph> {
    let mut out = exhaustive(spec, |_| true);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x0067_656e);
    for i in 0..spec.random_samples {
        let n = sample_size(i, spec);
        let p = GENERAL_PROBABILITIES[i % GENERAL_PROBABILITIES.len()];
        out.push(NamedGraph {
            id: format!("rg{n}-{i:03}"),
            graph: random_graph(n, p, &mut rng),
        });
    }
    out.extend(line_graphs(spec));
    out
}
