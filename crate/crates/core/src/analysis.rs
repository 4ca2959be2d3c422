//! The graph-to-connectivity pipeline: fold reduction, independence complex,
//! free-face collapse, homology, connectivity and `π1` status.

use serde::Serialize;

use crate::collapse::{free_face_collapse, greedy_fold_reduce, FoldRecord};
use crate::complex::{independence_complex, Caps};
use crate::error::Result;
use crate::graph::Graph;
use crate::homology::{
    analyze_complex, classify_reduced, reduced_homology, Connectivity, ConnectivityReport, HomologyProfile,
};
use crate::pi1::{Pi1Status, TietzeBudget};

/// Everything `analyze` reports about one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphAnalysis {
    pub n: usize,
    pub max_degree: usize,
    pub claw_free: bool,
    /// f-vector of `Ind(G)` itself.
    pub f_vector: Vec<usize>,
    pub folds: Vec<FoldRecord>,
    /// Vertices left after fold reduction, in the input labels.
    pub reduced_vertices: Vec<usize>,
    pub homology: HomologyProfile,
    pub connectivity: ConnectivityReport,
}

pub fn analyze_graph(g: &Graph, caps: &Caps, tietze: &TietzeBudget) -> Result<GraphAnalysis> {
    let f_vector = independence_complex(g, caps)?.f_vector();
    let (reduced, folds) = greedy_fold_reduce(g);
    let complex = independence_complex(&reduced.graph, caps)?;
    let (homology, connectivity) = analyze_complex(&complex, tietze);
    Ok(GraphAnalysis {
        n: g.n(),
        max_degree: g.max_degree(),
        claw_free: g.is_claw_free(),
        f_vector,
        folds,
        reduced_vertices: reduced.labels,
        homology,
        connectivity,
    })
}

/// Homology and connectivity of `Ind(G)` without the `π1` check.
///
/// Isolated vertices make `Ind(G)` a cone; otherwise folds and free-face
/// collapses shrink the complex before any matrix is built.
pub fn profile_and_connectivity(g: &Graph, caps: &Caps) -> Result<(HomologyProfile, Connectivity)> {
    if g.n() == 0 {
        return Ok((HomologyProfile::of_empty(), Connectivity::Value(-2)));
    }
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        return Ok((HomologyProfile::zero(), Connectivity::Contractible));
    }
    let (reduced, _) = greedy_fold_reduce(g);
    if reduced.graph.n() == 1 || (0..reduced.graph.n()).any(|v| reduced.graph.degree(v) == 0) {
        return Ok((HomologyProfile::zero(), Connectivity::Contractible));
    }
    let complex = free_face_collapse(&independence_complex(&reduced.graph, caps)?);
    if complex.num_faces() == 1 {
        return Ok((HomologyProfile::zero(), Connectivity::Contractible));
    }
    let profile = reduced_homology(&complex);
    let conn = classify_reduced(&complex, &profile);
    Ok((profile, conn))
}

pub fn connectivity(g: &Graph, caps: &Caps) -> Result<Connectivity> {
    profile_and_connectivity(g, caps).map(|(_, c)| c)
}

pub fn profile(g: &Graph, caps: &Caps) -> Result<HomologyProfile> {
    profile_and_connectivity(g, caps).map(|(p, _)| p)
}

/// Connectivity together with the `π1` status behind it.
pub fn connectivity_report(g: &Graph, caps: &Caps, tietze: &TietzeBudget) -> Result<ConnectivityReport> {
    if g.n() == 0 {
        return Ok(ConnectivityReport::new(Connectivity::Value(-2), Pi1Status::Unknown));
    }
    if (0..g.n()).any(|v| g.degree(v) == 0) {
        return Ok(ConnectivityReport::new(Connectivity::Contractible, Pi1Status::Trivial));
    }
    let (reduced, _) = greedy_fold_reduce(g);
    let complex = independence_complex(&reduced.graph, caps)?;
    Ok(analyze_complex(&complex, tietze).1)
}
