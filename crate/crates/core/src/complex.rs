//! Simplicial complexes, independence complexes, and the cone, suspension,
//! wedge and disjoint-union constructions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Subgraph};
use crate::vertex_set::VertexSet;

/// A face, as a strictly increasing list of vertex labels.
pub type Simplex = Vec<usize>;

/// Enumeration limits for complex construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_vertices: usize,
    pub max_faces_per_dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: 30,
            max_faces_per_dim: 200_000,
        }
    }
}

/// A finite abstract simplicial complex over the vertex universe `0..universe`.
///
/// `faces[d]` holds the `d`-dimensional faces in lexicographic order. The empty
/// face is implicit; a complex with no vertices is the empty space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    universe: usize,
    faces: Vec<Vec<Simplex>>,
}

/// Serialized form: the universe size and the maximal faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub universe: usize,
    pub facets: Vec<Simplex>,
}

impl SimplicialComplex {
    pub fn empty(universe: usize) -> Self {
        SimplicialComplex {
            universe,
            faces: Vec::new(),
        }
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets(n, [(0..n).collect::<Simplex>()]).expect("valid simplex")
    }

    /// Closes a family of faces downward. Input faces need not be sorted.
    pub fn from_facets<I>(universe: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut levels: Vec<BTreeSet<Simplex>> = Vec::new();
        for mut facet in facets {
            facet.sort_unstable();
            facet.dedup();
            if let Some(&v) = facet.iter().find(|&&v| v >= universe) {
                return Err(Error::input(format!("vertex {v} outside universe of size {universe}")));
            }
            if facet.is_empty() {
                continue;
            }
            if levels.len() < facet.len() {
                levels.resize_with(facet.len(), BTreeSet::new);
            }
            if levels[facet.len() - 1].contains(&facet) {
                continue;
            }
            let k = facet.len();
            for mask in 1u64..(1u64 << k) {
                let sub: Simplex = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
                levels[sub.len() - 1].insert(sub);
            }
        }
        Ok(SimplicialComplex {
            universe,
            faces: levels.into_iter().map(|l| l.into_iter().collect()).collect(),
        })
    }

    /// Builds from per-dimension face lists that are already sorted and closed.
    pub(crate) fn from_sorted_levels(universe: usize, mut faces: Vec<Vec<Simplex>>) -> Self {
        while faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        SimplicialComplex { universe, faces }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Top dimension, or -1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self, d: usize) -> &[Simplex] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn levels(&self) -> &[Vec<Simplex>] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Position of `face` in `faces(face.len() - 1)`.
    pub fn index_of(&self, face: &[usize]) -> Option<usize> {
        if face.is_empty() {
            return None;
        }
        self.faces
            .get(face.len() - 1)?
            .binary_search_by(|f| f.as_slice().cmp(face))
            .ok()
    }

    /// Membership of a sorted face; the empty face always belongs.
    pub fn contains(&self, face: &[usize]) -> bool {
        face.is_empty() || self.index_of(face).is_some()
    }

    pub fn vertices(&self) -> VertexSet {
        self.faces(0).iter().map(|f| f[0]).collect()
    }

    /// Maximal faces, ordered by dimension then lexicographically.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for d in 0..self.faces.len() {
            let mut covered = vec![false; self.faces[d].len()];
            for tau in self.faces(d + 1) {
                for skip in 0..tau.len() {
                    let sigma = drop_index(tau, skip);
                    if let Some(i) = self.index_of(&sigma) {
                        covered[i] = true;
                    }
                }
            }
            out.extend(
                self.faces[d]
                    .iter()
                    .zip(covered)
                    .filter(|(_, c)| !c)
                    .map(|(f, _)| f.clone()),
            );
        }
        out
    }

    /// Every codimension-one face of every face is present, levels are sorted,
    /// and each level holds faces of the right size.
    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().enumerate().all(|(d, level)| {
            level.windows(2).all(|w| w[0] < w[1])
                && level.iter().all(|f| {
                    f.len() == d + 1
                        && f.windows(2).all(|w| w[0] < w[1])
                        && f.last().is_some_and(|&v| v < self.universe)
                        && (d == 0 || (0..f.len()).all(|i| self.contains(&drop_index(f, i))))
                })
        })
    }

    /// `Δ[U]`: the faces contained in `set`.
    pub fn induced_subcomplex(&self, set: &VertexSet) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .filter(|f| f.iter().all(|&v| set.contains(v)))
                    .cloned()
                    .collect()
            })
            .collect();
        Self::from_sorted_levels(self.universe, faces)
    }

    /// Restricts to `set` and relabels its members onto `0..|set|` in order.
    pub fn relabel_onto(&self, labels: &[usize]) -> SimplicialComplex {
        let mut position = vec![usize::MAX; self.universe];
        for (new, &old) in labels.iter().enumerate() {
            position[old] = new;
        }
        let keep: VertexSet = labels.iter().copied().collect();
        let faces = self
            .induced_subcomplex(&keep)
            .faces
            .into_iter()
            .map(|level| {
                let mut level: Vec<Simplex> = level
                    .into_iter()
                    .map(|f| f.into_iter().map(|v| position[v]).collect())
                    .collect();
                level.sort();
                level
            })
            .collect();
        Self::from_sorted_levels(labels.len(), faces)
    }

    /// A vertex `v` with `σ ∪ {v} ∈ Δ` for every face `σ`, i.e. a vertex
    /// lying in every facet. The smallest such vertex is returned.
    pub fn cone_apex(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let mut candidates = self.vertices();
        for facet in self.facets() {
            candidates = candidates.intersection(&facet.iter().copied().collect());
            if candidates.is_empty() {
                return None;
            }
        }
        candidates.first()
    }

    /// Joins with two new apex vertices `universe` and `universe + 1`.
    /// The suspension of the empty complex is two points.
    pub fn suspension(&self) -> SimplicialComplex {
        let (north, south) = (self.universe, self.universe + 1);
        let mut faces: Vec<Vec<Simplex>> = vec![Vec::new(); self.faces.len() + 1];
        for (d, level) in self.faces.iter().enumerate() {
            faces[d].extend(level.iter().cloned());
            for apex in [north, south] {
                faces[d + 1].extend(level.iter().map(|f| {
                    let mut g = f.clone();
                    g.push(apex);
                    g
                }));
            }
        }
        faces[0].push(vec![north]);
        faces[0].push(vec![south]);
        for level in &mut faces {
            level.sort();
        }
        Self::from_sorted_levels(self.universe + 2, faces)
    }

    /// Disjoint union; vertices of `other` are shifted past `self.universe()`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.universe;
        let depth = self.faces.len().max(other.faces.len());
        let faces = (0..depth)
            .map(|d| {
                let mut level = self.faces(d).to_vec();
                level.extend(other.faces(d).iter().map(|f| f.iter().map(|v| v + shift).collect()));
                level
            })
            .collect();
        Self::from_sorted_levels(self.universe + other.universe, faces)
    }

    /// One-point union identifying the chosen basepoints. Empty summands are
    /// dropped; the wedge of no summands is the empty complex.
    pub fn wedge(summands: &[(&SimplicialComplex, usize)]) -> Result<SimplicialComplex> {
        let kept: Vec<_> = summands.iter().filter(|(c, _)| !c.is_empty()).collect();
        for (c, base) in &kept {
            if !c.contains(&[*base]) {
                return Err(Error::input(format!("basepoint {base} is not a vertex of its summand")));
            }
        }
        let Some(((first, first_base), rest)) = kept.split_first() else {
            return Ok(SimplicialComplex::empty(0));
        };
        let mut facets: Vec<Simplex> = first.facets();
        let mut offset = first.universe;
        for (c, base) in rest {
            let map = |v: usize| -> usize {
                match v.cmp(base) {
                    std::cmp::Ordering::Equal => *first_base,
                    std::cmp::Ordering::Less => offset + v,
                    std::cmp::Ordering::Greater => offset + v - 1,
                }
            };
            facets.extend(c.facets().into_iter().map(|f| f.into_iter().map(map).collect()));
            offset += c.universe - 1;
        }
        Self::from_facets(offset, facets)
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            universe: self.universe,
            facets: self.facets(),
        }
    }

    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        Self::from_facets(json.universe, json.facets.iter().cloned())
    }
}

pub(crate) fn drop_index(face: &[usize], skip: usize) -> Simplex {
    face.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, &v)| v)
        .collect()
}

/// `Ind(G)`: the complex whose faces are the independent vertex sets of `g`.
///
/// Faces are generated dimension by dimension, extending each independent set
/// by larger vertices outside its neighborhood.
pub fn independence_complex(g: &Graph, caps: &Caps) -> Result<SimplicialComplex> {
    let n = g.n();
    if n > caps.max_vertices {
        return Err(Error::ResourceCap(format!(
            "graph has {n} vertices, cap is {}",
            caps.max_vertices
        )));
    }
    let mut levels: Vec<Vec<Simplex>> = Vec::new();
    // Each frontier entry: a face and the vertices that may still extend it.
    let mut frontier: Vec<(Simplex, VertexSet)> = (0..n)
        .map(|v| {
            let later = VertexSet::full(n).difference(&VertexSet::full(v + 1));
            (vec![v], later.difference(g.nbrs(v)))
        })
        .collect();
    while !frontier.is_empty() {
        if frontier.len() > caps.max_faces_per_dim {
            return Err(Error::ResourceCap(format!(
                "{} faces in dimension {}, cap is {}",
                frontier.len(),
                levels.len(),
                caps.max_faces_per_dim
            )));
        }
        let mut next = Vec::new();
        for (face, extend) in &frontier {
            for x in extend {
                let mut bigger = face.clone();
                bigger.push(x);
                let rest = extend.difference(&VertexSet::full(x + 1)).difference(g.nbrs(x));
                next.push((bigger, rest));
            }
        }
        levels.push(frontier.into_iter().map(|(f, _)| f).collect());
        frontier = next;
    }
    Ok(SimplicialComplex::from_sorted_levels(n, levels))
}

/// `Ind(H)` for an induced subgraph, expressed in the parent's labels.
pub fn independence_complex_in_parent(
    sub: &Subgraph,
    parent_universe: usize,
    caps: &Caps,
) -> Result<SimplicialComplex> {
    let local = independence_complex(&sub.graph, caps)?;
    let faces = local
        .levels()
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|f| f.iter().map(|&v| sub.labels[v]).collect())
                .collect()
        })
        .collect();
    Ok(SimplicialComplex::from_sorted_levels(parent_universe, faces))
}
