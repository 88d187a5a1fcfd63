//! Python bindings. Vertices cross the boundary as 0-based `(side, index)`
//! tuples and exact fractions as `fractions.Fraction`.

use std::collections::BTreeSet;

use pyo3::exceptions::{PyRuntimeError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;

use ryser_core::certificates::{self, SearchOptions, SearchVerdict, Suite};
use ryser_core::constructions::{self, construct_by_name, random_intersecting};
use ryser_core::fractional;
use ryser_core::hypergraph::{self as hg, parse_digit_format, parse_table_format, serialize_table};
use ryser_core::solvers::{self, Budget, Cover};
use ryser_core::{Error, Hypergraph as _, PartiteHypergraph, Rational};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::Domain(_) | Error::OutOfBounds(_) | Error::Unsupported(_) => {
            PyValueError::new_err(e.to_string())
        }
        Error::Budget(_) => PyTimeoutError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, x: &Rational) -> PyResult<Bound<'py, PyAny>> {
    let text = format!("{}/{}", x.numer(), x.denom());
    py.import("fractions")?.getattr("Fraction")?.call1((text,))
}

type Vertices = Vec<(usize, usize)>;

fn vertices(c: &Cover) -> Vertices {
    c.vertices.iter().map(|v| (v.side as usize, v.index as usize)).collect()
}

/// An r-partite hypergraph; `edges[k][i]` is the vertex of edge `k` on side `i`.
#[pyclass(name = "Hypergraph", module = "ryser", frozen)]
struct PyHypergraph {
    inner: PartiteHypergraph,
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(side_sizes: Vec<usize>, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        let inner = PartiteHypergraph::new(side_sizes, edges).map_err(py_err)?;
        Ok(PyHypergraph { inner })
    }

    #[staticmethod]
    fn from_table(text: &str) -> PyResult<Self> {
        Ok(PyHypergraph { inner: parse_table_format(text).map_err(py_err)? })
    }

    #[staticmethod]
    fn from_digits(text: &str, r: usize) -> PyResult<Self> {
        Ok(PyHypergraph { inner: parse_digit_format(text, r).map_err(py_err)? })
    }

    /// Named construction: tpp, oval, onefact, biased, expside, f7, f6, f6linear.
    #[staticmethod]
    #[pyo3(signature = (name, param=None))]
    fn construct(name: &str, param: Option<usize>) -> PyResult<Self> {
        Ok(PyHypergraph { inner: construct_by_name(name, param).map_err(py_err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (r, m, seed, side_cap=3))]
    fn random_intersecting(r: usize, m: usize, seed: u64, side_cap: usize) -> PyResult<Self> {
        Ok(PyHypergraph { inner: random_intersecting(r, m, side_cap, seed).map_err(py_err)? })
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.r()
    }

    #[getter]
    fn side_sizes(&self) -> Vec<usize> {
        self.inner.side_sizes().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().to_vec()
    }

    #[getter]
    fn fingerprint(&self) -> String {
        self.inner.fingerprint().to_string()
    }

    fn __len__(&self) -> usize {
        self.inner.edges().len()
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(r={}, edges={}, sides={:?})", self.inner.r(), self.inner.edges().len(), self.inner.side_sizes())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn to_table(&self) -> String {
        serialize_table(&self.inner)
    }

    fn is_intersecting(&self) -> PyResult<bool> {
        hg::is_intersecting(&self.inner).map_err(py_err)
    }

    fn is_linear(&self) -> PyResult<bool> {
        hg::is_linear(&self.inner).map_err(py_err)
    }

    /// Byte string shared exactly by isomorphic hypergraphs.
    fn canonical_form(&self) -> Vec<u8> {
        hg::canonical_form(&self.inner)
    }
}

/// Covering number and a minimum cover; raises TimeoutError past `budget_ms`.
#[pyfunction]
#[pyo3(signature = (h, budget_ms=None))]
fn tau(h: &PyHypergraph, budget_ms: Option<u64>) -> PyResult<(usize, Vertices)> {
    let budget = budget_ms.map_or_else(Budget::unlimited, Budget::millis);
    let (k, c) = solvers::tau_with(&h.inner, &BTreeSet::new(), budget)
        .map_err(py_err)?
        .expect("nothing banned");
    Ok((k, vertices(&c)))
}

/// Some cover of at most `k` vertices, or None when none exists.
#[pyfunction]
fn find_cover_leq(h: &PyHypergraph, k: usize) -> Option<Vertices> {
    solvers::find_cover_leq(&h.inner, k).map(|c| vertices(&c))
}

/// Matching number and the 0-based positions of a maximum matching.
#[pyfunction]
#[pyo3(signature = (h, budget_ms=None))]
fn nu(h: &PyHypergraph, budget_ms: Option<u64>) -> PyResult<(usize, Vec<usize>)> {
    let budget = budget_ms.map_or_else(Budget::unlimited, Budget::millis);
    let (k, m) = solvers::nu_with(&h.inner, budget).map_err(py_err)?;
    Ok((k, m.edge_indices.into_iter().collect()))
}

#[pyfunction]
fn greedy_cover(h: &PyHypergraph) -> PyResult<Vertices> {
    Ok(vertices(&solvers::greedy_cover(&h.inner).map_err(py_err)?))
}

#[pyfunction]
fn min_cover_avoiding(h: &PyHypergraph, side: usize) -> PyResult<Option<(usize, Vertices)>> {
    let found = solvers::min_cover_avoiding(&h.inner, side).map_err(py_err)?;
    Ok(found.map(|(k, c)| (k, vertices(&c))))
}

#[pyfunction]
fn min_biased_cover<'py>(py: Python<'py>, h: &PyHypergraph, side: usize) -> PyResult<(Bound<'py, PyAny>, Vertices)> {
    let (v, c) = solvers::min_biased_cover(&h.inner, side).map_err(py_err)?;
    Ok((fraction(py, &v)?, vertices(&c)))
}

#[pyfunction]
fn tau_star<'py>(py: Python<'py>, h: &PyHypergraph) -> PyResult<Bound<'py, PyAny>> {
    let (v, _) = fractional::tau_star(&h.inner).map_err(py_err)?;
    fraction(py, &v)
}

#[pyfunction]
fn nu_star<'py>(py: Python<'py>, h: &PyHypergraph) -> PyResult<Bound<'py, PyAny>> {
    let (v, _) = fractional::nu_star(&h.inner).map_err(py_err)?;
    fraction(py, &v)
}

#[pyfunction]
fn tau_s<'py>(py: Python<'py>, h: &PyHypergraph) -> PyResult<Bound<'py, PyAny>> {
    let (v, _) = fractional::tau_s(&h.inner).map_err(py_err)?;
    fraction(py, &v)
}

/// Lines of PG(2, q) as lists of 0-based point indices.
#[pyfunction]
fn projective_plane(q: usize) -> PyResult<Vec<Vec<usize>>> {
    Ok(constructions::projective_plane(q).map_err(py_err)?.edges().to_vec())
}

#[pyfunction]
fn mindeg_floor(r: usize, t: usize) -> usize {
    certificates::mindeg_floor(r, t)
}

#[pyfunction]
fn lb_f(r: usize) -> usize {
    certificates::lb_f(r)
}

#[pyfunction]
fn lb_f_terms(r: usize) -> Vec<usize> {
    certificates::lb_f_terms(r)
}

/// Runs a suite; returns (passed, report text blocks).
#[pyfunction]
fn verify(suite: &str) -> PyResult<(bool, Vec<String>)> {
    let suite: Suite = suite.parse().map_err(py_err)?;
    let outcome = certificates::run_suite(suite).map_err(py_err)?;
    Ok((outcome.passed(), outcome.reports.iter().map(|r| r.to_text()).collect()))
}

/// None when no intersecting hypergraph with at most `m` edges has tau >= t,
/// else a witness.
#[pyfunction]
#[pyo3(signature = (r, m, t, max_candidates=None))]
fn extremal_search(r: usize, m: usize, t: usize, max_candidates: Option<u64>) -> PyResult<Option<PyHypergraph>> {
    let mut opts = SearchOptions::default();
    if let Some(n) = max_candidates {
        opts.max_candidates = n;
    }
    let s = certificates::extremal_search(r, m, t, opts).map_err(py_err)?;
    Ok(match s.verdict {
        SearchVerdict::Witness(inner) => Some(PyHypergraph { inner }),
        SearchVerdict::Absent => None,
    })
}

#[pymodule]
fn ryser(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(find_cover_leq, m)?)?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_cover, m)?)?;
    m.add_function(wrap_pyfunction!(min_cover_avoiding, m)?)?;
    m.add_function(wrap_pyfunction!(min_biased_cover, m)?)?;
    m.add_function(wrap_pyfunction!(tau_star, m)?)?;
    m.add_function(wrap_pyfunction!(nu_star, m)?)?;
    m.add_function(wrap_pyfunction!(tau_s, m)?)?;
    m.add_function(wrap_pyfunction!(projective_plane, m)?)?;
    m.add_function(wrap_pyfunction!(mindeg_floor, m)?)?;
    m.add_function(wrap_pyfunction!(lb_f, m)?)?;
    m.add_function(wrap_pyfunction!(lb_f_terms, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_search, m)?)?;
    Ok(())
}
