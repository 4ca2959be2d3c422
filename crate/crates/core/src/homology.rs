//! Reduced integral homology and homological connectivity.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::collapse::free_face_collapse;
use crate::complex::{drop_index, SimplicialComplex};
use crate::error::{Error, Result};
use crate::pi1::{pi1_status_with, Pi1Status};
use crate::snf::{small, sparse_invariants, IntMatrix};

/// Boundary map in dimension `dim`: rows are `(dim-1)`-faces, columns are
/// `dim`-faces. Dimension 0 is the augmentation onto the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    /// Sparse columns, entries sorted by row.
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, v.into());
            }
        }
        m
    }

    /// Whether `self ∘ next` vanishes, where `next` is the map one dimension up.
    pub fn composes_to_zero_with(&self, next: &BoundaryMatrix) -> bool {
        if next.rows != self.cols() {
            return false;
        }
        next.columns.iter().all(|col| {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    *acc.entry(i).or_insert(0) += a * b;
                }
            }
            acc.values().all(|&v| v == 0)
        })
    }
}

/// Boundary maps `∂_0 .. ∂_dim` with alternating signs over sorted faces;
/// `∂_0` is the all-ones augmentation row.
pub fn boundary_matrices(complex: &SimplicialComplex) -> Vec<BoundaryMatrix> {
    let mut out = Vec::with_capacity(complex.levels().len());
    if complex.is_empty() {
        return out;
    }
    out.push(BoundaryMatrix {
        dim: 0,
        rows: 1,
        columns: vec![vec![(0, 1)]; complex.faces(0).len()],
    });
    for d in 1..complex.levels().len() {
        let columns = complex
            .faces(d)
            .iter()
            .map(|face| {
                let mut col: Vec<(usize, i64)> = (0..face.len())
                    .map(|i| {
                        let row = complex
                            .index_of(&drop_index(face, i))
                            .expect("complex is downward closed");
                        (row, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        out.push(BoundaryMatrix {
            dim: d,
            rows: complex.faces(d - 1).len(),
            columns,
        });
    }
    out
}

/// One reduced homology group: `Z^betti ⊕ ⨁ Z/t`, with the torsion kept
/// as sorted prime powers so that direct sums compare exactly.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Reduced homology, keeping only the nonzero groups.
///
/// The empty complex carries the single group `H̃_{-1} = Z`, which is what
/// the augmented chain complex of the empty space produces; suspension then
/// shifts it to `H̃_0(S^0) = Z` like any other group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyProfile {
    groups: BTreeMap<i32, HomologyGroup>,
}

impl HomologyProfile {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn of_empty() -> Self {
        let mut p = Self::default();
        p.groups.insert(
            -1,
            HomologyGroup {
                betti: 1,
                torsion: vec![],
            },
        );
        p
    }

    pub fn from_groups(groups: impl IntoIterator<Item = (i32, HomologyGroup)>) -> Self {
        let mut p = Self::default();
        for (d, mut g) in groups {
            g.torsion = primary_parts(&g.torsion);
            if !g.is_zero() {
                p.groups.insert(d, g);
            }
        }
        p
    }

    /// The profile of the empty complex.
    pub fn is_empty_space(&self) -> bool {
        self.groups.contains_key(&-1)
    }

    /// All reduced groups vanish.
    pub fn is_acyclic(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn group(&self, d: i32) -> HomologyGroup {
        self.groups.get(&d).cloned().unwrap_or_default()
    }

    pub fn betti(&self, d: i32) -> usize {
        self.groups.get(&d).map_or(0, |g| g.betti)
    }

    pub fn groups(&self) -> impl Iterator<Item = (i32, &HomologyGroup)> {
        self.groups.iter().map(|(d, g)| (*d, g))
    }

    /// Lowest dimension with a nonzero group.
    pub fn lowest_nonzero(&self) -> Option<i32> {
        self.groups.keys().next().copied()
    }

    /// Suspension isomorphism: every group moves up one dimension.
    pub fn shifted(&self) -> Self {
        HomologyProfile {
            groups: self.groups.iter().map(|(d, g)| (d + 1, g.clone())).collect(),
        }
    }

    /// The profile of a wedge: groups add dimension-wise.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut groups = self.groups.clone();
        for (d, g) in &other.groups {
            let slot = groups.entry(*d).or_default();
            slot.betti += g.betti;
            slot.torsion.extend(g.torsion.iter().copied());
            slot.torsion = primary_parts(&slot.torsion);
        }
        HomologyProfile { groups }
    }

    /// Homological connectivity read off the profile: the largest `n` with
    /// `H̃_i = 0` for all `i <= n`, or `None` when every group vanishes.
    pub fn connectivity_bound(&self) -> Option<i32> {
        self.lowest_nonzero().map(|d| d - 1)
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.groups.len()))?;
        for (d, g) in &self.groups {
            map.serialize_entry(&d.to_string(), g)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for HomologyProfile {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, HomologyGroup> = BTreeMap::deserialize(deserializer)?;
        let mut groups = Vec::with_capacity(raw.len());
        for (k, g) in raw {
            let d = k.parse::<i32>().map_err(serde::de::Error::custom)?;
            groups.push((d, g));
        }
        Ok(HomologyProfile::from_groups(groups))
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "acyclic");
        }
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|(d, g)| {
                let mut terms = Vec::new();
                if g.betti > 0 {
                    terms.push(if g.betti == 1 {
                        "Z".to_string()
                    } else {
                        format!("Z^{}", g.betti)
                    });
                }
                terms.extend(g.torsion.iter().map(|t| format!("Z/{t}")));
                format!("H{d}={}", terms.join("+"))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Splits each cyclic order into its prime-power factors, sorted.
pub fn primary_parts(orders: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for &t in orders {
        let mut rest = t;
        let mut p = 2;
        while p * p <= rest {
            let mut power = 1;
            while rest % p == 0 {
                rest /= p;
                power *= p;
            }
            if power > 1 {
                out.push(power);
            }
            p += 1;
        }
        if rest > 1 {
            out.push(rest);
        }
    }
    out.sort_unstable();
    out
}

/// Reduced homology from ranks and invariant factors of the boundary maps.
pub fn reduced_homology(complex: &SimplicialComplex) -> HomologyProfile {
    if complex.is_empty() {
        return HomologyProfile::of_empty();
    }
    let maps = boundary_matrices(complex);
    let invariants: Vec<_> = maps.iter().map(|m| sparse_invariants(&m.columns, m.rows)).collect();
    let groups = (0..maps.len()).map(|d| {
        let faces = complex.faces(d).len();
        let rank_here = invariants[d].rank;
        let (rank_above, torsion) = invariants.get(d + 1).map_or((0, Vec::new()), |inv| {
            (inv.rank, inv.torsion.iter().map(small).collect())
        });
        (
            d as i32,
            HomologyGroup {
                betti: faces - rank_here - rank_above,
                torsion,
            },
        )
    });
    HomologyProfile::from_groups(groups)
}

/// Homological connectivity of a space.
///
/// `Value(n)` means `H̃_i = 0` for `i <= n` and `H̃_{n+1} != 0` (with `-2` for
/// the empty space). `Contractible` is reported only with a proof (a cone
/// apex or a collapse to a point); `Acyclic` means every group vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connectivity {
    Value(i32),
    Acyclic,
    Contractible,
}

impl Connectivity {
    /// `None` for the unbounded cases.
    pub fn level(self) -> Option<i32> {
        match self {
            Connectivity::Value(n) => Some(n),
            _ => None,
        }
    }

    /// Whether the space is (homologically) `n`-connected.
    pub fn at_least(self, n: i64) -> bool {
        self.level().is_none_or(|v| i64::from(v) >= n)
    }

    pub fn from_profile(profile: &HomologyProfile) -> Self {
        match profile.connectivity_bound() {
            Some(n) => Connectivity::Value(n.max(-2)),
            None => Connectivity::Acyclic,
        }
    }
}

impl PartialOrd for Connectivity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite values order numerically below both unbounded cases;
/// `Acyclic < Contractible` only to make the order total.
impl Ord for Connectivity {
    fn cmp(&self, other: &Self) -> Ordering {
        fn key(c: &Connectivity) -> (u8, i32) {
            match *c {
                Connectivity::Value(n) => (0, n),
                Connectivity::Acyclic => (1, 0),
                Connectivity::Contractible => (2, 0),
            }
        }
        key(self).cmp(&key(other))
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Value(n) => write!(f, "{n}"),
            Connectivity::Acyclic => write!(f, "acyclic"),
            Connectivity::Contractible => write!(f, "contractible"),
        }
    }
}

impl Serialize for Connectivity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Connectivity::Value(n) => serializer.serialize_i32(*n),
            Connectivity::Acyclic => serializer.serialize_str("acyclic"),
            Connectivity::Contractible => serializer.serialize_str("contractible"),
        }
    }
}

impl<'de> Deserialize<'de> for Connectivity {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i32),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(n) => Ok(Connectivity::Value(n)),
            Raw::Text(s) if s == "acyclic" => Ok(Connectivity::Acyclic),
            Raw::Text(s) if s == "contractible" => Ok(Connectivity::Contractible),
            Raw::Text(s) => Err(serde::de::Error::custom(format!("bad connectivity {s:?}"))),
        }
    }
}

/// Whether free-face collapsing brings the complex down to a single vertex.
pub fn collapses_to_point(complex: &SimplicialComplex) -> bool {
    free_face_collapse(complex).num_faces() == 1
}

/// Homological connectivity: `-2` for the empty space, `Contractible` when a
/// cone apex exists or the complex collapses to a point, otherwise read off
/// the reduced homology.
pub fn homological_connectivity(complex: &SimplicialComplex) -> Connectivity {
    if complex.is_empty() {
        return Connectivity::Value(-2);
    }
    if complex.cone_apex().is_some() {
        return Connectivity::Contractible;
    }
    let profile = reduced_homology(complex);
    classify_reduced(complex, &profile)
}

pub(crate) fn classify_reduced(complex: &SimplicialComplex, profile: &HomologyProfile) -> Connectivity {
    match Connectivity::from_profile(profile) {
        Connectivity::Acyclic if collapses_to_point(complex) => Connectivity::Contractible,
        c => c,
    }
}

/// Homological connectivity plus the bounded fundamental-group check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub conn_h: Connectivity,
    pub pi1: Pi1Status,
    /// Homological connectivity equals topological connectivity here.
    pub certified_topological: bool,
    /// Set when `conn_h >= 1` but `π1` could not be shown trivial.
    pub pi1_unverified: bool,
}

impl ConnectivityReport {
    pub fn new(conn_h: Connectivity, pi1: Pi1Status) -> Self {
        let certified = match conn_h {
            Connectivity::Contractible => true,
            Connectivity::Value(n) if n <= 0 => true,
            _ => pi1 == Pi1Status::Trivial,
        };
        ConnectivityReport {
            conn_h,
            pi1,
            certified_topological: certified,
            pi1_unverified: !certified,
        }
    }
}

/// Full report for a complex: homology, connectivity and `π1` status.
pub fn analyze_complex(
    complex: &SimplicialComplex,
    tietze: &crate::pi1::TietzeBudget,
) -> (HomologyProfile, ConnectivityReport) {
    if complex.is_empty() {
        let report = ConnectivityReport::new(Connectivity::Value(-2), Pi1Status::Unknown);
        return (HomologyProfile::of_empty(), report);
    }
    let reduced = free_face_collapse(complex);
    let profile = reduced_homology(&reduced);
    let conn = if complex.cone_apex().is_some() || reduced.num_faces() == 1 {
        Connectivity::Contractible
    } else {
        classify_reduced(&reduced, &profile)
    };
    let pi1 = if conn == Connectivity::Contractible {
        Pi1Status::Trivial
    } else {
        pi1_status_with(&reduced, &profile, tietze)
    };
    (profile, ConnectivityReport::new(conn, pi1))
}

/// Checks `∂_{d} ∘ ∂_{d+1} = 0` for every consecutive pair.
pub fn check_boundary_squares(complex: &SimplicialComplex) -> Result<()> {
    let maps = boundary_matrices(complex);
    for pair in maps.windows(2) {
        if !pair[0].composes_to_zero_with(&pair[1]) {
            return Err(Error::InvalidInput(format!(
                "boundary composition nonzero in dimension {}",
                pair[1].dim
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{independence_complex, Caps};
    use crate::graph::cycle;

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, [vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    #[test]
    fn boundary_examples() {
        let s0 = SimplicialComplex::from_facets(2, [vec![0], vec![1]]).unwrap();
        let maps = boundary_matrices(&s0);
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].columns, vec![vec![(0, 1)], vec![(0, 1)]]);

        let edge = SimplicialComplex::simplex(2);
        assert_eq!(boundary_matrices(&edge)[1].columns, vec![vec![(0, -1), (1, 1)]]);

        let d1 = &boundary_matrices(&hollow_triangle())[1];
        assert_eq!((d1.rows, d1.cols()), (3, 3));
        assert_eq!(sparse_invariants(&d1.columns, d1.rows).rank, 2);
        check_boundary_squares(&SimplicialComplex::simplex(5)).unwrap();
    }

    #[test]
    fn homology_examples() {
        assert!(reduced_homology(&SimplicialComplex::simplex(4)).is_acyclic());
        let s0 = SimplicialComplex::from_facets(2, [vec![0], vec![1]]).unwrap();
        assert_eq!(reduced_homology(&s0).betti(0), 1);
        let c6 = independence_complex(&cycle(6).unwrap(), &Caps::default()).unwrap();
        let h = reduced_homology(&c6);
        assert_eq!(
            h,
            HomologyProfile::from_groups([(
                1,
                HomologyGroup {
                    betti: 2,
                    torsion: vec![]
                }
            )])
        );
        assert!(reduced_homology(&SimplicialComplex::empty(0)).is_empty_space());
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(
            homological_connectivity(&SimplicialComplex::empty(3)),
            Connectivity::Value(-2)
        );
        let s0 = SimplicialComplex::from_facets(2, [vec![0], vec![1]]).unwrap();
        assert_eq!(homological_connectivity(&s0), Connectivity::Value(-1));
        let c6 = independence_complex(&cycle(6).unwrap(), &Caps::default()).unwrap();
        assert_eq!(homological_connectivity(&c6), Connectivity::Value(0));
        assert_eq!(
            homological_connectivity(&SimplicialComplex::simplex(3)),
            Connectivity::Contractible
        );
        assert_eq!(homological_connectivity(&hollow_triangle()), Connectivity::Value(0));
    }

    #[test]
    fn connectivity_ordering() {
        assert!(Connectivity::Value(3) < Connectivity::Acyclic);
        assert!(Connectivity::Acyclic.at_least(1000));
        assert!(!Connectivity::Value(0).at_least(1));
        assert!(Connectivity::Value(-2).at_least(-2));
    }

    #[test]
    fn report_certification() {
        let r = ConnectivityReport::new(Connectivity::Value(2), Pi1Status::Unknown);
        assert!(!r.certified_topological && r.pi1_unverified);
        let r = ConnectivityReport::new(Connectivity::Value(0), Pi1Status::Unknown);
        assert!(r.certified_topological);
        let r = ConnectivityReport::new(Connectivity::Value(1), Pi1Status::Trivial);
        assert!(r.certified_topological);
    }

    #[test]
    fn profile_json() {
        let c6 = independence_complex(&cycle(6).unwrap(), &Caps::default()).unwrap();
        let json = serde_json::to_string(&reduced_homology(&c6)).unwrap();
        assert_eq!(json, r#"{"1":{"betti":2,"torsion":[]}}"#);
        let back: HomologyProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, reduced_homology(&c6));
        let empty = serde_json::to_string(&HomologyProfile::of_empty()).unwrap();
        assert_eq!(empty, r#"{"-1":{"betti":1,"torsion":[]}}"#);
        let report = ConnectivityReport::new(Connectivity::Contractible, Pi1Status::Trivial);
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"conn_h":"contractible","pi1":"trivial","certified_topological":true,"pi1_unverified":false}"#
        );
    }
}
