//! Python bindings. Structured results (certificates, reports, profiles)
//! cross the boundary as JSON and come out as plain dicts and lists.

use chibind::enumerate;
use chibind::harness::{self, VerifyParams};
use chibind::{invariants, patterns, structure, Error, Graph};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde::Serialize;

create_exception!(chibind, PreconditionError, PyValueError, "The input is outside an operation's domain.");
create_exception!(chibind, InternalError, PyRuntimeError, "A proved structural claim failed: a bug.");

fn to_py(e: Error) -> PyErr {
    if e.is_precondition() {
        PreconditionError::new_err(e.to_string())
    } else {
        InternalError::new_err(e.to_string())
    }
}

fn to_dict<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A simple undirected graph on at most 64 vertices.
#[pyclass(name = "Graph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::from_edge_list(n, &edges).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: enumerate::decode_graph6(text).map_err(to_py)?,
        })
    }

    fn graph6(&self) -> PyResult<String> {
        enumerate::encode_graph6(&self.inner).map_err(to_py)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn induced(&self, vertices: Vec<usize>) -> PyResult<Self> {
        let s = self.inner.set(&vertices).map_err(to_py)?;
        Ok(PyGraph {
            inner: self.inner.induced(&s).map_err(to_py)?,
        })
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn clique_number(&self) -> usize {
        invariants::clique_number(&self.inner)
    }

    fn independence_number(&self) -> usize {
        invariants::independence_number(&self.inner)
    }

    /// Exact χ and an optimal coloring.
    fn chromatic_number(&self) -> (usize, Vec<usize>) {
        let (k, c) = invariants::chromatic_number(&self.inner);
        (k, c.colors)
    }

    fn is_perfect(&self) -> bool {
        patterns::is_perfect(&self.inner)
    }

    fn is_perfectly_divisible(&self) -> PyResult<bool> {
        invariants::is_perfectly_divisible(&self.inner).map_err(to_py)
    }

    /// `(perfect part, rest)` or None.
    fn perfect_division(&self) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
        Ok(invariants::find_perfect_division(&self.inner)
            .map_err(to_py)?
            .map(|d| (d.a.to_vec(), d.b.to_vec())))
    }

    /// Lexicographically least induced copy of a catalog pattern, as the
    /// host vertex for each pattern vertex.
    fn find_induced(&self, pattern: &str) -> PyResult<Option<Vec<usize>>> {
        let p = patterns::Pattern::by_name(pattern).map_err(to_py)?;
        Ok(patterns::find_induced(&self.inner, &p.graph).map(|e| e.map))
    }

    /// Whether no pattern in the comma-separated list is induced.
    fn is_free(&self, patterns_list: &str) -> PyResult<bool> {
        let pats = patterns::parse_pattern_list(patterns_list).map_err(to_py)?;
        Ok(patterns::is_free(&self.inner, &pats))
    }

    fn find_five_hole(&self) -> Option<Vec<usize>> {
        structure::find_five_hole(&self.inner).map(|h| h.to_vec())
    }

    fn find_clique_cutset(&self) -> PyResult<Option<Vec<usize>>> {
        Ok(structure::find_clique_cutset(&self.inner)
            .map_err(to_py)?
            .map(|r| r.cutset.to_vec()))
    }

    fn find_homogeneous_set(&self) -> Option<Vec<usize>> {
        structure::find_homogeneous_set(&self.inner).map(|s| s.to_vec())
    }

    /// `("clique" | "p3", vertices)`.
    fn find_dominating_clique_or_p3(&self) -> PyResult<(String, Vec<usize>)> {
        let (kind, set) = structure::find_dominating_clique_or_p3(&self.inner).map_err(to_py)?;
        let kind = match kind {
            structure::DominatorKind::Clique => "clique",
            structure::DominatorKind::P3 => "p3",
        };
        Ok((kind.to_string(), set.to_vec()))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }

    fn __hash__(&self) -> u64 {
        self.inner.rows().iter().fold(self.inner.n() as u64, |h, &r| h.rotate_left(7) ^ r)
    }
}

/// Colors `g` with a pipeline; returns the colors and the certificate.
#[pyfunction]
fn color<'py>(py: Python<'py>, g: &PyGraph, pipeline: &str) -> PyResult<Bound<'py, PyAny>> {
    let r = harness::color_one(&g.inner, pipeline).map_err(to_py)?;
    to_dict(py, &r)
}

#[pyfunction]
fn analyze<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    to_dict(py, &harness::analyze_one(&g.inner).map_err(to_py)?)
}

/// Runs a verification target and returns the report.
#[pyfunction]
#[pyo3(signature = (target, n, connected = false, threads = None))]
fn verify<'py>(
    py: Python<'py>,
    target: &str,
    n: usize,
    connected: bool,
    threads: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let mut params = VerifyParams::new(target, n);
    params.connected = connected;
    params.threads = threads;
    let report = py.detach(|| harness::verify(&params)).map_err(to_py)?;
    to_dict(py, &report)
}

/// All graphs on `n` vertices up to isomorphism, optionally restricted.
#[pyfunction]
#[pyo3(signature = (n, connected = false, free_of = ""))]
fn generate(py: Python<'_>, n: usize, connected: bool, free_of: &str) -> PyResult<Vec<PyGraph>> {
    let pats = patterns::parse_pattern_list(free_of).map_err(to_py)?;
    let graphs = py
        .detach(|| enumerate::generate_free(n, &pats, connected))
        .map_err(to_py)?;
    Ok(graphs.into_iter().map(|inner| PyGraph { inner }).collect())
}

#[pyfunction]
fn targets() -> Vec<(String, String, String)> {
    harness::TARGETS
        .iter()
        .map(|t| (t.id.to_string(), t.alias.to_string(), t.statement.to_string()))
        .collect()
}

#[pymodule]
#[pyo3(name = "chibind")]
fn chibind_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(color, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(targets, m)?)?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add("InternalError", m.py().get_type::<InternalError>())?;
    Ok(())
}
