//! Python bindings: graphs, independence complexes, homology, the bound
//! formulas and the verification suites.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use clawtop::analysis::analyze_graph;
use clawtop::collapse::{fold_collapse, free_face_collapse, greedy_fold_reduce};
use clawtop::ensemble::EnsembleSpec;
use clawtop::graph::{self, Family};
use clawtop::harness::{self, BoundCheck, BoundKind};
use clawtop::homology::{homological_connectivity, reduced_homology};
use clawtop::io;
use clawtop::pi1::pi1_status;
use clawtop::snf::{smith_normal_form, IntMatrix};
use clawtop::suites::{run_suite, SuiteOptions};
use clawtop::{Caps, Error, SimplicialComplex, TietzeBudget};

create_exception!(pyclawtop, ResourceCapError, PyRuntimeError);

fn err(e: Error) -> PyErr {
    match e {
        Error::ResourceCap(m) => ResourceCapError::new_err(m),
        Error::Generation(m) => PyRuntimeError::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Converts any serializable value through JSON into plain Python objects.
fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn caps(cap_vertices: usize) -> Caps {
    Caps {
        max_vertices: cap_vertices,
        ..Caps::default()
    }
}

#[pyclass(name = "Graph", module = "pyclawtop", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: clawtop::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        clawtop::Graph::from_edges(n, edges)
            .map(|inner| PyGraph { inner })
            .map_err(err)
    }

    /// Parses an edge list or a graph6 string.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        io::parse_graph(text).map(|inner| PyGraph { inner }).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    #[pyo3(signature = (v, closed = false))]
    fn neighborhood(&self, v: usize, closed: bool) -> PyResult<Vec<usize>> {
        self.inner.neighborhood(v, closed).map(|s| s.to_vec()).map_err(err)
    }

    fn is_claw_free(&self) -> bool {
        self.inner.is_claw_free()
    }

    fn has_induced_claw_bruteforce(&self) -> bool {
        self.inner.has_induced_claw_bruteforce()
    }

    /// `(center, leaves)` of some induced claw, if any.
    fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        self.inner.find_claw()
    }

    fn check_complete_outer_neighborhood(&self, u: usize, v: usize) -> PyResult<bool> {
        self.inner.check_complete_outer_neighborhood(u, v).map_err(err)
    }

    /// `(subgraph, labels)` where `labels[new] = old`.
    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<(PyGraph, Vec<usize>)> {
        let sub = self
            .inner
            .induced_subgraph(&vertices.into_iter().collect())
            .map_err(err)?;
        Ok((PyGraph { inner: sub.graph }, sub.labels))
    }

    fn remove_vertices(&self, vertices: Vec<usize>) -> PyResult<(PyGraph, Vec<usize>)> {
        let sub = self
            .inner
            .remove_vertices(&vertices.into_iter().collect())
            .map_err(err)?;
        Ok((PyGraph { inner: sub.graph }, sub.labels))
    }

    fn complement(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn to_edge_list(&self) -> String {
        io::to_edge_list(&self.inner)
    }

    fn to_graph6(&self) -> String {
        io::to_graph6(&self.inner)
    }

    /// `(reduced graph, labels, folds)` after greedy fold reduction; folds
    /// are `(kept, removed)` pairs in this graph's labels.
    fn fold_reduce(&self) -> (PyGraph, Vec<usize>, Vec<(usize, usize)>) {
        let (sub, records) = greedy_fold_reduce(&self.inner);
        let folds = records.iter().map(|r| (r.kept, r.removed)).collect();
        (PyGraph { inner: sub.graph }, sub.labels, folds)
    }

    /// Elementary collapses `(σ, τ)` of the fold removing `w`.
    #[pyo3(signature = (v, w, cap_vertices = 30))]
    fn fold_collapse(&self, v: usize, w: usize, cap_vertices: usize) -> PyResult<Vec<(Vec<usize>, Vec<usize>)>> {
        let (_, seq) = fold_collapse(&self.inner, v, w, &caps(cap_vertices)).map_err(err)?;
        Ok(seq.steps)
    }

    #[pyo3(signature = (cap_vertices = 30))]
    fn independence_complex(&self, cap_vertices: usize) -> PyResult<PyComplex> {
        clawtop::independence_complex(&self.inner, &caps(cap_vertices))
            .map(|inner| PyComplex { inner })
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

#[pyclass(name = "SimplicialComplex", module = "pyclawtop", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyComplex {
    inner: SimplicialComplex,
}

#[pymethods]
impl PyComplex {
    #[new]
    fn new(universe: usize, facets: Vec<Vec<usize>>) -> PyResult<Self> {
        SimplicialComplex::from_facets(universe, facets)
            .map(|inner| PyComplex { inner })
            .map_err(err)
    }

    #[getter]
    fn universe(&self) -> usize {
        self.inner.universe()
    }

    #[getter]
    fn dim(&self) -> isize {
        self.inner.dim()
    }

    fn f_vector(&self) -> Vec<usize> {
        self.inner.f_vector()
    }

    fn facets(&self) -> Vec<Vec<usize>> {
        self.inner.facets()
    }

    fn faces(&self, d: usize) -> Vec<Vec<usize>> {
        self.inner.faces(d).to_vec()
    }

    fn cone_apex(&self) -> Option<usize> {
        self.inner.cone_apex()
    }

    fn suspension(&self) -> PyComplex {
        PyComplex {
            inner: self.inner.suspension(),
        }
    }

    fn disjoint_union(&self, other: &PyComplex) -> PyComplex {
        PyComplex {
            inner: self.inner.disjoint_union(&other.inner),
        }
    }

    fn free_face_collapse(&self) -> PyComplex {
        PyComplex {
            inner: free_face_collapse(&self.inner),
        }
    }

    /// `{dim: {"betti": b, "torsion": [...]}}` with string keys; only nonzero
    /// groups appear and the empty complex has `"-1"`.
    fn homology<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &reduced_homology(&self.inner))
    }

    /// An integer, `"acyclic"` or `"contractible"`.
    fn connectivity<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &homological_connectivity(&self.inner))
    }

    fn pi1(&self) -> String {
        pi1_status(&self.inner, &TietzeBudget::default()).to_string()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("plain data")
    }

    fn __repr__(&self) -> String {
        format!(
            "SimplicialComplex(universe={}, f_vector={:?})",
            self.inner.universe(),
            self.inner.f_vector()
        )
    }
}

#[pyfunction]
fn interval_graph(n: usize, k: usize) -> PyResult<PyGraph> {
    graph::interval_graph(n, k).map(|inner| PyGraph { inner }).map_err(err)
}

#[pyfunction]
fn circular_graph(n: usize, k: usize) -> PyResult<PyGraph> {
    graph::circular_graph(n, k).map(|inner| PyGraph { inner }).map_err(err)
}

#[pyfunction]
fn path(n: usize) -> PyGraph {
    PyGraph { inner: graph::path(n) }
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    graph::cycle(n).map(|inner| PyGraph { inner }).map_err(err)
}

#[pyfunction]
fn complete(n: usize) -> PyGraph {
    PyGraph {
        inner: graph::complete(n),
    }
}

#[pyfunction]
fn claw() -> PyGraph {
    PyGraph { inner: graph::claw() }
}

#[pyfunction]
fn line_graph(g: &PyGraph) -> PyGraph {
    PyGraph {
        inner: graph::line_graph(&g.inner),
    }
}

#[pyfunction]
fn random_graph(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    graph::generate(&Family::Random { n, p, seed })
        .map(|inner| PyGraph { inner })
        .map_err(err)
}

#[pyfunction]
fn random_claw_free(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    graph::generate(&Family::RandomClawFree { n, p, seed })
        .map(|inner| PyGraph { inner })
        .map_err(err)
}

/// Full pipeline report for `Ind(g)` as a dict.
#[pyfunction]
#[pyo3(signature = (g, cap_vertices = 30))]
fn analyze<'py>(py: Python<'py>, g: &PyGraph, cap_vertices: usize) -> PyResult<Bound<'py, PyAny>> {
    let a = analyze_graph(&g.inner, &caps(cap_vertices), &TietzeBudget::default()).map_err(err)?;
    to_py(py, &a)
}

/// `kind` is one of `general`, `claw_free` (with `d`) or `l_family`,
/// `c_family` (with `k`).
#[pyfunction]
fn bound_value(kind: &str, n: usize, param: usize) -> PyResult<i64> {
    let kind = match kind {
        "general" => BoundKind::General { n, d: param },
        "claw_free" => BoundKind::ClawFree { n, d: param },
        "l_family" => BoundKind::LFamily { n, k: param },
        "c_family" => BoundKind::CFamily { n, k: param },
        other => return Err(PyValueError::new_err(format!("unknown bound kind {other:?}"))),
    };
    harness::bound_value(kind).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, kind = "claw_free", graph_id = "graph"))]
fn verify_bound<'py>(py: Python<'py>, g: &PyGraph, kind: &str, graph_id: &str) -> PyResult<Bound<'py, PyAny>> {
    let check = match kind {
        "claw_free" => BoundCheck::ClawFree,
        "general" => BoundCheck::General,
        other => return Err(PyValueError::new_err(format!("unknown bound kind {other:?}"))),
    };
    let r =
        harness::verify_bound(graph_id, &g.inner, check, &Caps::default(), &TietzeBudget::default()).map_err(err)?;
    to_py(py, &r)
}

#[pyfunction]
fn check_claw_free_inequality<'py>(
    py: Python<'py>,
    g: &PyGraph,
    u: usize,
    v1: usize,
    v2: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let c = harness::check_claw_free_inequality(&g.inner, u, v1, v2).map_err(err)?;
    to_py(py, &c)
}

#[pyfunction]
fn decompose_main_theorem<'py>(py: Python<'py>, g: &PyGraph, u: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &harness::decompose_main_theorem(&g.inner, u).map_err(err)?)
}

#[pyfunction]
fn certify_main_theorem<'py>(py: Python<'py>, g: &PyGraph, u: usize, n: i64) -> PyResult<Bound<'py, PyAny>> {
    to_py(
        py,
        &harness::certify_main_theorem(&g.inner, u, n, &Caps::default()).map_err(err)?,
    )
}

#[pyfunction]
fn verify_wedge_decomposition(g: &PyGraph, u: usize) -> PyResult<bool> {
    harness::verify_wedge_decomposition(&g.inner, u, &Caps::default())
        .map(|c| c.pass)
        .map_err(err)
}

#[pyfunction]
fn verify_l_recursion(n: usize, k: usize) -> PyResult<bool> {
    harness::verify_l_recursion(n, k, &Caps::default())
        .map(|c| c.pass)
        .map_err(err)
}

#[pyfunction]
fn verify_c_theorem<'py>(py: Python<'py>, n: usize, k: usize) -> PyResult<Bound<'py, PyAny>> {
    let r = harness::verify_c_theorem(n, k, &Caps::default(), &TietzeBudget::default()).map_err(err)?;
    to_py(py, &r)
}

/// Runs a verification suite and returns its records as dicts.
#[pyfunction]
#[pyo3(signature = (suite, ensemble = "quick"))]
fn verify_suite<'py>(py: Python<'py>, suite: &str, ensemble: &str) -> PyResult<Bound<'py, PyAny>> {
    let suite = suite.parse().map_err(err)?;
    let opts = SuiteOptions {
        ensemble: ensemble.parse::<EnsembleSpec>().map_err(err)?,
        ..SuiteOptions::default()
    };
    let records = py.detach(|| run_suite(suite, &opts)).map_err(err)?;
    to_py(py, &records)
}

/// Invariant factors `d_1 | d_2 | ...` of an integer matrix.
#[pyfunction]
fn smith_normal_form_divisors(rows: Vec<Vec<i64>>) -> PyResult<Vec<BigInt>> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(PyValueError::new_err("ragged matrix rows"));
    }
    let m = IntMatrix::from_rows(&rows);
    Ok(smith_normal_form(&m).divisors)
}

#[pymodule]
fn pyclawtop(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyComplex>()?;
    m.add("ResourceCapError", m.py().get_type::<ResourceCapError>())?;
    m.add_function(wrap_pyfunction!(interval_graph, m)?)?;
    m.add_function(wrap_pyfunction!(circular_graph, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(claw, m)?)?;
    m.add_function(wrap_pyfunction!(line_graph, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    m.add_function(wrap_pyfunction!(random_claw_free, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(bound_value, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bound, m)?)?;
    m.add_function(wrap_pyfunction!(check_claw_free_inequality, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_main_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(certify_main_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_wedge_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(verify_l_recursion, m)?)?;
    m.add_function(wrap_pyfunction!(verify_c_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add_function(wrap_pyfunction!(smith_normal_form_divisors, m)?)?;
    Ok(())
}
