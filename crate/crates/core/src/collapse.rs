//! Elementary collapses: fold collapses of independence complexes and
//! generic free-face reduction.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::{drop_index, independence_complex, Caps, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};

/// Ordered elementary collapses `(σ, τ)` with `τ = σ ∪ {x}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CollapseSequence {
    pub steps: Vec<(Simplex, Simplex)>,
}

impl CollapseSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the steps to `start`, checking before each removal that `σ` is
    /// a free face whose only proper coface is `τ`.
    pub fn replay(&self, start: &SimplicialComplex) -> Result<SimplicialComplex> {
        let universe = start.universe();
        let mut faces: HashSet<Simplex> = start.levels().iter().flatten().cloned().collect();
        for (k, (sigma, tau)) in self.steps.iter().enumerate() {
            let fail = |why: &str| {
                Err(Error::input(format!(
                    "step {k} ({sigma:?}, {tau:?}) is not an elementary collapse: {why}"
                )))
            };
            if !faces.contains(sigma) || !faces.contains(tau) {
                return fail("face missing");
            }
            if tau.len() != sigma.len() + 1 || !sigma.iter().all(|v| tau.binary_search(v).is_ok()) {
                return fail("τ does not cover σ");
            }
            let cofaces = (0..universe)
                .filter(|x| sigma.binary_search(x).is_err())
                .filter(|&x| faces.contains(&with_vertex(sigma, x)))
                .count();
            if cofaces != 1 {
                return fail("σ is not free");
            }
            faces.remove(sigma);
            faces.remove(tau);
        }
        let mut levels: Vec<Vec<Simplex>> = Vec::new();
        for f in faces {
            if levels.len() < f.len() {
                levels.resize_with(f.len(), Vec::new);
            }
            levels[f.len() - 1].push(f);
        }
        for level in &mut levels {
            level.sort();
        }
        Ok(SimplicialComplex::from_sorted_levels(universe, levels))
    }
}

fn with_vertex(face: &[usize], x: usize) -> Simplex {
    let mut f = face.to_vec();
    let pos = f.binary_search(&x).unwrap_or_else(|p| p);
    f.insert(pos, x);
    f
}

/// Checks the fold precondition `N(v) ⊆ N(w)` with `v != w`.
pub fn check_fold(g: &Graph, v: usize, w: usize) -> Result<()> {
    if v >= g.n() || w >= g.n() {
        return Err(Error::input(format!("fold ({v}, {w}) out of range")));
    }
    if v == w {
        return Err(Error::input("fold needs two distinct vertices"));
    }
    if !g.nbrs(v).is_subset(g.nbrs(w)) {
        return Err(Error::input(format!(
            "N({v}) = {:?} is not contained in N({w}) = {:?}",
            g.nbrs(v),
            g.nbrs(w)
        )));
    }
    Ok(())
}

/// Removes `w` once `N(v) ⊆ N(w)` is confirmed.
pub fn fold_graph(g: &Graph, v: usize, w: usize) -> Result<Subgraph> {
    check_fold(g, v, w)?;
    g.remove_vertices(&std::iter::once(w).collect())
}

/// The fold collapse `Ind(G) ↘ Ind(G \ w)` for `N(v) ⊆ N(w)`.
///
/// The sequence pairs every face containing `w` but not `v` with its
/// extension by `v`, larger faces first and lexicographic within a size; the
/// free-face condition of each step is verified on the way. Faces are in the
/// labels of `g`.
pub fn fold_collapse(g: &Graph, v: usize, w: usize, caps: &Caps) -> Result<(Subgraph, CollapseSequence)> {
    let sub = fold_graph(g, v, w)?;
    let complex = independence_complex(g, caps)?;
    let mut sigmas: Vec<&Simplex> = complex
        .levels()
        .iter()
        .flatten()
        .filter(|f| f.binary_search(&w).is_ok() && f.binary_search(&v).is_err())
        .collect();
    sigmas.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let sequence = CollapseSequence {
        steps: sigmas.into_iter().map(|s| (s.clone(), with_vertex(s, v))).collect(),
    };
    sequence.replay(&complex)?;
    Ok((sub, sequence))
}

/// One fold applied by [`greedy_fold_reduce`], in the input graph's labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldRecord {
    pub kept: usize,
    pub removed: usize,
}

/// Applies folds until no pair `N(v) ⊆ N(w)` remains, scanning `(v, w)`
/// lexicographically. Equal neighborhoods therefore lose the larger label.
pub fn greedy_fold_reduce(g: &Graph) -> (Subgraph, Vec<FoldRecord>) {
    let mut current = Subgraph {
        graph: g.clone(),
        labels: (0..g.n()).collect(),
    };
    let mut records = Vec::new();
    'outer: loop {
        let h = &current.graph;
        for v in 0..h.n() {
            for w in 0..h.n() {
                if v != w && h.nbrs(v).is_subset(h.nbrs(w)) {
                    let next = fold_graph(h, v, w).expect("fold precondition holds");
                    records.push(FoldRecord {
                        kept: current.labels[v],
                        removed: current.labels[w],
                    });
                    let labels = next.labels.iter().map(|&i| current.labels[i]).collect();
                    current = Subgraph {
                        graph: next.graph,
                        labels,
                    };
                    continue 'outer;
                }
            }
        }
        return (current, records);
    }
}

/// Removes free-face pairs until none remain. Candidates are processed in
/// order of (dimension, lexicographic position), smallest first.
pub fn free_face_collapse(complex: &SimplicialComplex) -> SimplicialComplex {
    let levels = complex.levels();
    let depth = levels.len();
    if depth < 2 {
        return complex.clone();
    }
    // facets_of[d][i]: indices in level d-1 of the facets of face (d, i).
    let mut facets_of: Vec<Vec<Vec<usize>>> = vec![Vec::new(); depth];
    let mut cofaces_of: Vec<Vec<Vec<usize>>> = levels.iter().map(|l| vec![Vec::new(); l.len()]).collect();
    for d in 1..depth {
        facets_of[d] = levels[d]
            .iter()
            .enumerate()
            .map(|(i, f)| {
                (0..f.len())
                    .map(|k| {
                        let j = complex.index_of(&drop_index(f, k)).expect("closed");
                        cofaces_of[d - 1][j].push(i);
                        j
                    })
                    .collect()
            })
            .collect();
    }
    let mut alive: Vec<Vec<bool>> = levels.iter().map(|l| vec![true; l.len()]).collect();
    let mut count: Vec<Vec<usize>> = cofaces_of.iter().map(|l| l.iter().map(Vec::len).collect()).collect();
    let mut work: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (d, level) in count.iter().enumerate() {
        work.extend(level.iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| (d, i)));
    }
    while let Some((d, i)) = work.pop_first() {
        if !alive[d][i] || count[d][i] != 1 {
            continue;
        }
        let t = *cofaces_of[d][i]
            .iter()
            .find(|&&t| alive[d + 1][t])
            .expect("counted coface is alive");
        alive[d][i] = false;
        alive[d + 1][t] = false;
        for &r in &facets_of[d + 1][t] {
            if r != i {
                count[d][r] -= 1;
                if count[d][r] == 1 {
                    work.insert((d, r));
                }
            }
        }
        if d > 0 {
            for &r in &facets_of[d][i] {
                count[d - 1][r] -= 1;
                if count[d - 1][r] == 1 {
                    work.insert((d - 1, r));
                }
            }
        }
    }
    let faces = levels
        .iter()
        .zip(&alive)
        .map(|(level, keep)| {
            level
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .map(|(f, _)| f.clone())
                .collect()
        })
        .collect();
    SimplicialComplex::from_sorted_levels(complex.universe(), faces)
}

/// Whether some face has exactly one proper coface.
pub fn has_free_face(complex: &SimplicialComplex) -> bool {
    (0..complex.levels().len().saturating_sub(1)).any(|d| {
        complex.faces(d).iter().any(|sigma| {
            complex
                .faces(d + 1)
                .iter()
                .filter(|tau| sigma.iter().all(|v| tau.binary_search(v).is_ok()))
                .count()
                == 1
        })
    })
}
