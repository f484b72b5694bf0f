//! Python bindings. Vertices are 0-based ints, edges are `(u, v)` tuples.

use std::time::Duration;

use gridbond::graph::{self, Edge, EdgeSet, GridSpec, ProductKind};
use gridbond::verify::{self, Family, VerifyOptions};
use gridbond::{bondage, domination, format, oracle};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: gridbond::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn kind(s: &str) -> PyResult<ProductKind> {
    s.parse()
        .map_err(|_| PyValueError::new_err(format!("unknown product kind `{s}`")))
}

fn edge_set(pairs: Vec<(usize, usize)>) -> PyResult<EdgeSet> {
    EdgeSet::from_pairs(pairs).map_err(err)
}

fn pairs(es: &EdgeSet) -> Vec<(usize, usize)> {
    es.members().iter().map(|e| (e.u(), e.v())).collect()
}

/// Simple undirected graph.
#[pyclass(name = "Graph", frozen)]
pub struct PyGraph {
    inner: graph::Graph,
    grid: Option<GridSpec>,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let edges = edges
            .into_iter()
            .map(|(u, v)| Edge::new(u, v))
            .collect::<gridbond::Result<Vec<_>>>()
            .map_err(err)?;
        Ok(PyGraph {
            inner: graph::Graph::from_edges(order, edges).map_err(err)?,
            grid: None,
        })
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::path_graph(n).map_err(err)?,
            grid: None,
        })
    }

    /// `kind` is "strong", "direct" or "cartesian". Vertex (i, j), 1-based, is `(i-1)*m + (j-1)`.
    #[staticmethod]
    fn product(kind_name: &str, n: usize, m: usize) -> PyResult<Self> {
        let spec = GridSpec::new(kind(kind_name)?, n, m).map_err(err)?;
        Ok(PyGraph {
            inner: spec.graph(),
            grid: Some(spec),
        })
    }

    /// Reads the `p edge` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: format::parse_graph(text).map_err(err)?,
            grid: None,
        })
    }

    fn to_text(&self) -> String {
        format::write_graph(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().iter().map(|e| (e.u(), e.v())).collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).collect())
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        self.inner
            .connected_components()
            .iter()
            .map(|c| c.members().to_vec())
            .collect()
    }

    fn remove_edges(&self, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: self.inner.remove_edges(&edge_set(edges)?).map_err(err)?,
            grid: None,
        })
    }

    fn is_dominating(&self, set: Vec<usize>) -> PyResult<bool> {
        domination::is_dominating(&self.inner, &set.into_iter().collect()).map_err(err)
    }

    fn domination_number(&self) -> usize {
        domination::domination_number(&self.inner)
    }

    fn minimum_dominating_set(&self) -> Vec<usize> {
        domination::minimum_dominating_set(&self.inner)
            .members()
            .to_vec()
    }

    /// Returns `(gamma, sets, truncated)`.
    #[pyo3(signature = (cap = domination::DEFAULT_CAP, property_p = false))]
    fn gamma_sets(&self, cap: usize, property_p: bool) -> PyResult<(usize, Vec<Vec<usize>>, bool)> {
        let fam = if property_p {
            domination::property_p_gamma_sets(&self.inner, cap)
        } else {
            domination::enumerate_gamma_sets(&self.inner, cap)
        }
        .map_err(err)?;
        let sets = fam.sets.iter().map(|s| s.members().to_vec()).collect();
        Ok((fam.gamma, sets, fam.truncated))
    }

    fn lemma1_bound(&self) -> PyResult<usize> {
        bondage::lemma1_bound(&self.inner).map_err(err)
    }

    fn lemma2_bound(&self) -> PyResult<usize> {
        bondage::lemma2_bound(&self.inner).map_err(err)
    }

    fn is_bondage_set(&self, edges: Vec<(usize, usize)>) -> PyResult<bool> {
        bondage::is_bondage_set(&self.inner, &edge_set(edges)?).map_err(err)
    }

    /// Exact bondage number. The dict has `value`, `exact`, `gamma`, `witness`.
    /// When `exact` is false, `value` is a proven lower bound minus one (no set up to that size works).
    #[pyo3(signature = (k_max = None, workers = 1, time_budget = None))]
    fn bondage<'py>(
        &self,
        py: Python<'py>,
        k_max: Option<usize>,
        workers: usize,
        time_budget: Option<f64>,
    ) -> PyResult<Bound<'py, PyDict>> {
        if workers == 0 {
            return Err(PyValueError::new_err("workers must be at least 1"));
        }
        let time_budget = time_budget
            .map(Duration::try_from_secs_f64)
            .transpose()
            .map_err(|_| PyValueError::new_err("time_budget must be a non-negative number"))?;
        let opts = bondage::BondageOptions {
            k_max,
            workers,
            deterministic: workers == 1,
            grid: self.grid,
            time_budget,
            ..Default::default()
        };
        let r = bondage::bondage_number(&self.inner, &opts).map_err(err)?;
        let d = PyDict::new(py);
        let (value, exact) = match r.value {
            bondage::BondageValue::Exact(b) => (b, true),
            bondage::BondageValue::Above(k) => (k, false),
        };
        d.set_item("value", value)?;
        d.set_item("exact", exact)?;
        d.set_item("gamma", r.gamma)?;
        d.set_item("witness", r.witness.as_ref().map(pairs))?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        match &self.grid {
            Some(g) => format!(
                "Graph({} P{} P{}, order={}, edges={})",
                g.kind,
                g.n,
                g.m,
                self.inner.order(),
                self.inner.edge_count()
            ),
            None => format!(
                "Graph(order={}, edges={})",
                self.inner.order(),
                self.inner.edge_count()
            ),
        }
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

/// `ceil(n/3) * ceil(m/3)`.
#[pyfunction]
fn gamma_strong(n: usize, m: usize) -> PyResult<usize> {
    oracle::gamma_strong(n, m).map_err(err)
}

/// Closed-form prediction as `(low, high, conjecture)`; equal bounds mean an exact value.
#[pyfunction]
#[pyo3(signature = (kind_name, n, m))]
fn predict_bondage(
    kind_name: &str,
    n: usize,
    m: usize,
) -> PyResult<Option<(usize, usize, Option<usize>)>> {
    let spec = GridSpec::new(kind(kind_name)?, n, m).map_err(err)?;
    Ok(oracle::predict_bondage(&spec)
        .map_err(err)?
        .map(|p| (p.low, p.high, p.conjecture)))
}

/// Explicit bondage set for the strong product, as 0-based vertex pairs.
#[pyfunction]
fn witness_bondage_set_strong(n: usize, m: usize) -> PyResult<Option<Vec<(usize, usize)>>> {
    Ok(oracle::witness_bondage_set_strong(n, m)
        .map_err(err)?
        .as_ref()
        .map(pairs))
}

/// Runs a sweep and returns the JSON report text.
#[pyfunction]
#[pyo3(signature = (family, n_lo, n_hi, m_lo = 2, m_hi = 2, workers = 1))]
fn sweep(
    family: &str,
    n_lo: usize,
    n_hi: usize,
    m_lo: usize,
    m_hi: usize,
    workers: usize,
) -> PyResult<String> {
    let family = match family {
        "strong" => Family::Strong,
        "direct" => Family::Direct,
        "paths" | "path" => Family::Path,
        "gadget" => Family::Gadget,
        other => return Err(PyValueError::new_err(format!("unknown family `{other}`"))),
    };
    if workers == 0 {
        return Err(PyValueError::new_err("workers must be at least 1"));
    }
    let opts = VerifyOptions {
        workers,
        deterministic: workers == 1,
        ..Default::default()
    };
    let rep = verify::sweep(family, n_lo..=n_hi, m_lo..=m_hi, &opts).map_err(err)?;
    serde_json::to_string(&rep).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
#[pyo3(name = "gridbond")]
fn gridbond_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(gamma_strong, m)?)?;
    m.add_function(wrap_pyfunction!(predict_bondage, m)?)?;
    m.add_function(wrap_pyfunction!(witness_bondage_set_strong, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
