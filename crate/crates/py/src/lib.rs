//! Python bindings: graphs, orderings, oracles, fillers and readers.

use pyo3::exceptions::{PyIOError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ::mindeg as core;
use core::ufiller::{self, CliqueUnionInstance, LabeledGraph};
use core::{oracle, Backend, EliminationResult, OrderingConfig, TieBreak, VertexId};

fn to_py(err: core::Error) -> PyErr {
    match err {
        core::Error::Io(e) => PyIOError::new_err(e.to_string()),
        core::Error::State(_) | core::Error::Check(_) => PyRuntimeError::new_err(err.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn tie_break(rule: &str, seed: Option<u64>) -> PyResult<TieBreak> {
    match (rule, seed) {
        ("smallest", _) => Ok(TieBreak::SmallestId),
        ("largest", _) => Ok(TieBreak::LargestId),
        ("random", Some(seed)) => Ok(TieBreak::Random { seed }),
        ("random", None) => Err(PyValueError::new_err("tie_break='random' requires a seed")),
        (other, _) => Err(PyValueError::new_err(format!("unknown tie_break {other:?}"))),
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "mindeg", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> PyResult<Self> {
        let inner = core::Graph::from_edge_list(n, edges).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn degree(&self, v: VertexId) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.degree(v))
    }

    fn neighbors(&self, v: VertexId) -> PyResult<Vec<VertexId>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: VertexId, v: VertexId) -> PyResult<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.inner.has_edge(u, v))
    }

    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.inner.edges().collect()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

impl PyGraph {
    fn check(&self, v: VertexId) -> PyResult<()> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} outside 0..{}", self.inner.n())));
        }
        Ok(())
    }
}

impl From<core::Graph> for PyGraph {
    fn from(inner: core::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pyclass(name = "OrderingResult", module = "mindeg", frozen, get_all)]
struct PyOrderingResult {
    ordering: Vec<VertexId>,
    eliminated_degrees: Vec<usize>,
    fill_edges: Vec<(VertexId, VertexId)>,
    m_plus: usize,
    insertion_attempts: u64,
    backend: String,
}

#[pymethods]
impl PyOrderingResult {
    fn __repr__(&self) -> String {
        format!(
            "OrderingResult(n={}, m_plus={}, insertion_attempts={}, backend={:?})",
            self.ordering.len(),
            self.m_plus,
            self.insertion_attempts,
            self.backend
        )
    }
}

impl From<EliminationResult> for PyOrderingResult {
    fn from(r: EliminationResult) -> Self {
        PyOrderingResult {
            backend: r.backend.to_string(),
            ordering: r.ordering,
            eliminated_degrees: r.eliminated_degrees,
            fill_edges: r.fill_edges,
            m_plus: r.m_plus,
            insertion_attempts: r.insertion_attempts,
        }
    }
}

/// A filler graph with its target vertices `u_set` and extras `w_set`.
#[pyclass(name = "Filler", module = "mindeg", frozen)]
struct PyFiller {
    inner: LabeledGraph,
}

#[pymethods]
impl PyFiller {
    #[getter]
    fn graph(&self) -> PyGraph {
        self.inner.graph.clone().into()
    }

    #[getter]
    fn u_set(&self) -> Vec<VertexId> {
        self.inner.u_set.clone()
    }

    #[getter]
    fn w_set(&self) -> Vec<VertexId> {
        self.inner.w_set.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "Filler(|U|={}, |W|={}, m={})",
            self.inner.u_set.len(),
            self.inner.w_set.len(),
            self.inner.graph.m()
        )
    }
}

#[pyfunction]
#[pyo3(signature = (graph, backend="auto", tie_break="smallest", seed=None))]
fn order(py: Python<'_>, graph: &PyGraph, backend: &str, tie_break: &str, seed: Option<u64>) -> PyResult<PyOrderingResult> {
    let backend = match backend {
        "auto" => Backend::Auto,
        "dense" => Backend::Dense,
        "sparse" | "ordered-set" => Backend::OrderedSet,
        other => return Err(PyValueError::new_err(format!("unknown backend {other:?}"))),
    };
    let config = OrderingConfig::new(backend, self::tie_break(tie_break, seed)?);
    let g = &graph.inner;
    py.detach(|| core::fast_minimum_degree(g, &config))
        .map(Into::into)
        .map_err(to_py)
}

/// Brute-force reference ordering.
#[pyfunction]
#[pyo3(signature = (graph, tie_break="smallest", seed=None))]
fn naive_order(graph: &PyGraph, tie_break: &str, seed: Option<u64>) -> PyResult<PyOrderingResult> {
    oracle::naive_minimum_degree(&graph.inner, self::tie_break(tie_break, seed)?)
        .map(Into::into)
        .map_err(to_py)
}

/// None when `ordering` is a minimum degree ordering, else a description of the first violation.
#[pyfunction]
fn verify(graph: &PyGraph, ordering: Vec<VertexId>) -> PyResult<Option<String>> {
    let violation = oracle::verify_min_degree_ordering(&graph.inner, &ordering).map_err(to_py)?;
    Ok(violation.map(|v| v.to_string()))
}

#[pyfunction]
fn fill_count(graph: &PyGraph, ordering: Vec<VertexId>) -> PyResult<usize> {
    oracle::fill_count_of_ordering(&graph.inner, &ordering).map_err(to_py)
}

#[pyfunction]
fn fill_graph(graph: &PyGraph, eliminated: Vec<VertexId>) -> PyResult<PyGraph> {
    if let Some(&v) = eliminated.iter().find(|&&v| v >= graph.inner.n()) {
        return Err(PyValueError::new_err(format!("vertex {v} outside 0..{}", graph.inner.n())));
    }
    Ok(oracle::fill_graph(&graph.inner, &eliminated).into())
}

#[pyfunction]
fn u_comb(u_set: Vec<VertexId>) -> PyResult<PyFiller> {
    let inner = ufiller::u_comb(&u_set).map_err(to_py)?;
    Ok(PyFiller { inner })
}

#[pyfunction]
fn bounded_filler(u_set: Vec<VertexId>, d: usize) -> PyResult<PyFiller> {
    let inner = ufiller::bounded_filler(&u_set, d).map_err(to_py)?;
    Ok(PyFiller { inner })
}

#[pyfunction]
fn min_degree_filler(u_set: Vec<VertexId>) -> PyResult<PyFiller> {
    let inner = ufiller::min_degree_filler(&u_set).map_err(to_py)?;
    Ok(PyFiller { inner })
}

#[pyfunction]
fn is_filler(filler: &PyFiller) -> bool {
    ufiller::is_filler(&filler.inner)
}

#[pyfunction]
#[pyo3(signature = (n, subsets, engine="fast"))]
fn clique_union(n: usize, subsets: Vec<Vec<VertexId>>, engine: &str) -> PyResult<bool> {
    let instance = CliqueUnionInstance::new(n, subsets).map_err(to_py)?;
    let answer = match engine {
        "fast" => ufiller::clique_union_default(&instance),
        "naive" => ufiller::clique_union(&instance, |g| {
            oracle::naive_minimum_degree(g, TieBreak::SmallestId).map(|r| r.ordering)
        }),
        other => return Err(PyValueError::new_err(format!("unknown engine {other:?}"))),
    };
    answer.map_err(to_py)
}

#[pyfunction]
fn clique_union_bruteforce(n: usize, subsets: Vec<Vec<VertexId>>) -> PyResult<bool> {
    let instance = CliqueUnionInstance::new(n, subsets).map_err(to_py)?;
    Ok(ufiller::clique_union_bruteforce(&instance))
}

#[pyfunction]
#[pyo3(signature = (path, symmetrize=false))]
fn read_matrix_market(path: std::path::PathBuf, symmetrize: bool) -> PyResult<PyGraph> {
    let options = core::io::MatrixMarketOptions { symmetrize };
    core::io::read_matrix_market(path, options).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn read_edge_list(path: std::path::PathBuf) -> PyResult<PyGraph> {
    core::io::read_edge_list(path).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn write_edge_list(graph: &PyGraph, path: std::path::PathBuf) -> PyResult<()> {
    core::io::write_edge_list(&graph.inner, path).map_err(to_py)
}

#[pyfunction]
fn read_permutation(path: std::path::PathBuf) -> PyResult<Vec<VertexId>> {
    core::io::read_permutation(path).map_err(to_py)
}

#[pyfunction]
fn write_permutation(ordering: Vec<VertexId>, path: std::path::PathBuf) -> PyResult<()> {
    core::io::write_permutation(&ordering, path).map_err(to_py)
}

#[pymodule]
fn mindeg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyOrderingResult>()?;
    m.add_class::<PyFiller>()?;
    m.add_function(wrap_pyfunction!(order, m)?)?;
    m.add_function(wrap_pyfunction!(naive_order, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(fill_count, m)?)?;
    m.add_function(wrap_pyfunction!(fill_graph, m)?)?;
    m.add_function(wrap_pyfunction!(u_comb, m)?)?;
    m.add_function(wrap_pyfunction!(bounded_filler, m)?)?;
    m.add_function(wrap_pyfunction!(min_degree_filler, m)?)?;
    m.add_function(wrap_pyfunction!(is_filler, m)?)?;
    m.add_function(wrap_pyfunction!(clique_union, m)?)?;
    m.add_function(wrap_pyfunction!(clique_union_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(read_matrix_market, m)?)?;
    m.add_function(wrap_pyfunction!(read_edge_list, m)?)?;
    m.add_function(wrap_pyfunction!(write_edge_list, m)?)?;
    m.add_function(wrap_pyfunction!(read_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(write_permutation, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
