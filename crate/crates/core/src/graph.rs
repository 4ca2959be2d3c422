//! Finite simple graphs and the graph families used throughout the crate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Number of rejected samples before `random_claw_free` gives up.
pub const CLAW_FREE_RETRY_CAP: usize = 10_000;

/// A finite simple graph on the vertices `0..n`.
///
/// Adjacency is kept symmetric and irreflexive by construction; a `Graph` is
/// never mutated once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the label map back into its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `labels[new] = old`.
    pub labels: Vec<usize>,
}

impl Subgraph {
    /// Maps a vertex of the parent graph to its label in the subgraph.
    pub fn new_label(&self, old: usize) -> Option<usize> {
        self.labels.binary_search(&old).ok()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from a symmetric adjacency predicate over `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![VertexSet::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::input(format!(
                "vertex {v} out of range for {} vertices",
                self.n()
            )));
        }
        Ok(())
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.bound() > self.n() {
            return Err(Error::input(format!(
                "vertex set {set:?} not contained in 0..{}",
                self.n()
            )));
        }
        Ok(())
    }

    /// Open neighborhood `N(v)`, or closed `N(v) ∪ {v}` when `closed` is set.
    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(if closed {
            self.adj[v].with(v)
        } else {
            self.adj[v].clone()
        })
    }

    /// Unchecked open neighborhood.
    pub fn nbrs(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Unchecked closed neighborhood.
    pub fn closed_nbrs(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Union of the open neighborhoods of every member of `set`.
    pub fn nbrs_of_set(&self, set: &VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v]))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Whether the members of `set` are pairwise adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(&self.adj[v]))
    }

    /// `G[U]`, relabelled onto `0..|U|` in increasing order of old labels.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Subgraph> {
        self.check_set(set)?;
        let labels = set.to_vec();
        let mut position = vec![usize::MAX; self.n()];
        for (new, &old) in labels.iter().enumerate() {
            position[old] = new;
        }
        let adj = labels
            .iter()
            .map(|&old| self.adj[old].intersection(set).iter().map(|w| position[w]).collect())
            .collect();
        Ok(Subgraph {
            graph: Graph { adj },
            labels,
        })
    }

    /// `G \ U`, the subgraph induced on the vertices outside `set`.
    pub fn remove_vertices(&self, set: &VertexSet) -> Result<Subgraph> {
        self.check_set(set)?;
        self.induced_subgraph(&self.vertices().difference(set))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, nbrs)| all.difference(nbrs).without(v))
                .collect(),
        }
    }

    /// Claw-freeness via triangle-freeness of every complemented neighborhood.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|u| self.independent_triple_in(&self.adj[u]).is_none())
    }

    /// Some three pairwise nonadjacent vertices inside `set`, if any.
    fn independent_triple_in(&self, set: &VertexSet) -> Option<(usize, usize, usize)> {
        for a in set {
            let after_a = set.difference(&self.adj[a]);
            for b in after_a.iter().filter(|&b| b > a) {
                let common = after_a.difference(&self.adj[b]);
                if let Some(c) = common.iter().find(|&c| c > b) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }

    /// An induced claw as `(center, [leaves])`, found by the neighborhood test.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        (0..self.n()).find_map(|u| self.independent_triple_in(&self.adj[u]).map(|(a, b, c)| (u, [a, b, c])))
    }

    /// Direct definition: scans every 4-subset for an induced `K_{1,3}`.
    ///
    /// Quartic in `n`; kept as the cross-check for [`Graph::is_claw_free`].
    pub fn has_induced_claw_bruteforce(&self) -> bool {
        let n = self.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let quad = [a, b, c, d];
                        for (i, &center) in quad.iter().enumerate() {
                            let leaves: Vec<usize> = quad
                                .iter()
                                .enumerate()
                                .filter(|&(j, _)| j != i)
                                .map(|(_, &x)| x)
                                .collect();
                            let spokes = leaves.iter().all(|&l| self.has_edge(center, l));
                            let independent = !self.has_edge(leaves[0], leaves[1])
                                && !self.has_edge(leaves[0], leaves[2])
                                && !self.has_edge(leaves[1], leaves[2]);
                            if spokes && independent {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }

    /// Whether `G[N(v) \ Ṅ(u)]` is complete, for `v ∈ N(u)`.
    ///
    /// Always true when the graph is claw-free.
    pub fn check_complete_outer_neighborhood(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::input(format!("{v} is not a neighbor of {u}")));
        }
        let outer = self.adj[v].difference(&self.closed_nbrs(u));
        Ok(self.is_clique(&outer))
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            comp.insert(start);
            while let Some(x) = stack.pop() {
                for y in &self.adj[x] {
                    if comp.insert(y) {
                        stack.push(y);
                    }
                }
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// Disjoint union, with `other` relabelled to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|nbrs| nbrs.iter().map(|v| v + shift).collect()));
        Graph { adj }
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::input("not a permutation of the vertex set"));
        }
        let mut adj = vec![VertexSet::new(); n];
        for (v, nbrs) in self.adj.iter().enumerate() {
            adj[perm[v]] = nbrs.iter().map(|w| perm[w]).collect();
        }
        Ok(Graph { adj })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// The graph families understood by [`generate`].
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// `L(n,k)`: `i < j` adjacent iff `j - i < k`.
    Interval {
        n: usize,
        k: usize,
    },
    /// `C(n,k)`: `i < j` adjacent iff `j - i < k` or `n + i - j < k`.
    Circular {
        n: usize,
        k: usize,
    },
    Path(usize),
    Cycle(usize),
    Complete(usize),
    LineGraph(Graph),
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
    RandomClawFree {
        n: usize,
        p: f64,
        seed: u64,
    },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Interval { n, k } => interval_graph(n, k),
        Family::Circular { n, k } => circular_graph(n, k),
        Family::Path(n) => Ok(path(n)),
        Family::Cycle(n) => cycle(n),
        Family::Complete(n) => Ok(complete(n)),
        Family::LineGraph(ref h) => Ok(line_graph(h)),
        Family::Random { n, p, seed } => {
            check_probability(p)?;
            Ok(random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
        }
        Family::RandomClawFree { n, p, seed } => random_claw_free(n, p, seed, CLAW_FREE_RETRY_CAP),
    }
}

pub fn interval_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::input("interval graph needs k >= 1"));
    }
    Ok(Graph::from_fn(n, |i, j| j - i < k))
}

pub fn circular_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::input("circular graph needs k >= 1"));
    }
    if n < 2 * k - 1 {
        return Err(Error::input(format!(
            "circular graph C({n},{k}) needs n >= 2k - 1 = {}",
            2 * k - 1
        )));
    }
    Ok(Graph::from_fn(n, |i, j| j - i < k || n + i - j < k))
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Ok(Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// `K_{1,3}` with center 0 and leaves 1, 2, 3.
pub fn claw() -> Graph {
    Graph::from_fn(4, |i, _| i == 0)
}

/// Vertices are the edges of `h` in lexicographic order; two are adjacent
/// when they share an endpoint.
pub fn line_graph(h: &Graph) -> Graph {
    let edges = h.edges();
    Graph::from_fn(edges.len(), |i, j| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    })
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Erdős–Rényi sample drawing pairs `i < j` in lexicographic order.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// Rejection-samples `G(n, p)` until the sample is claw-free.
pub fn random_claw_free(n: usize, p: f64, seed: u64, retries: usize) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..retries {
        let g = random_graph(n, p, &mut rng);
        if g.is_claw_free() {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no claw-free sample of G({n}, {p}) within {retries} attempts (seed {seed})"
    )))
}
