//! Python bindings: `import cnmaps`.
//!
//! Rationals cross the boundary as strings (`"1/3"`), structured reports as
//! plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

use ::cnmaps::complex::{self, simplify_presentation};
use ::cnmaps::plmap::UnionCheck;
use ::cnmaps::weights::{balance_constraints, solve_positive, verify_certificate};
use ::cnmaps::{Configuration, PLMultimap, Rational};

fn value_err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn config(s: &str) -> PyResult<Configuration> {
    s.parse().map_err(value_err)
}

fn rational(s: &str) -> PyResult<Rational> {
    s.parse().map_err(value_err)
}

/// Hausdorff distance between two comma-separated configurations.
#[pyfunction]
fn hausdorff_distance(a: &str, b: &str) -> PyResult<String> {
    Ok(::cnmaps::hausdorff_distance(&config(a)?, &config(b)?).to_string())
}

/// Whether `y` lies in the open Hausdorff ball of radius `eps` about `center`.
#[pyfunction]
fn in_hausdorff_ball(center: &str, eps: &str, y: &str) -> PyResult<bool> {
    Ok(::cnmaps::in_hausdorff_ball(
        &config(center)?,
        &rational(eps)?,
        &config(y)?,
    ))
}

/// `[(rank, [torsion...]), ...]` for `H_0 .. H_n` of `C_n(S^1)`.
#[pyfunction]
fn homology(n: usize) -> PyResult<Vec<(usize, Vec<String>)>> {
    let groups = complex::homology(n).map_err(value_err)?;
    Ok(groups
        .into_iter()
        .map(|g| (g.rank, g.torsion.iter().map(ToString::to_string).collect()))
        .collect())
}

/// `(presentation, verdict)` for the fundamental group of `C_n(S^1)`.
#[pyfunction]
fn pi1(n: usize) -> PyResult<(String, String)> {
    let p = complex::pi1_presentation(n).map_err(value_err)?;
    Ok((p.to_string(), simplify_presentation(&p).to_string()))
}

/// Cell counts and boundary matrices of `C_n(S^1)`.
#[pyfunction]
fn cells(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyAny>> {
    let cc = complex::build_cell_complex(n).map_err(value_err)?;
    json_to_py(py, &cc.to_json())
}

#[pyclass(name = "Multimap", frozen)]
struct PyMultimap {
    inner: PLMultimap,
}

#[pymethods]
impl PyMultimap {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyMultimap {
            inner: PLMultimap::from_json(text).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(value_err)?;
        Self::from_json(&text)
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn num_arcs(&self) -> usize {
        self.inner.arcs().len()
    }

    fn is_valid(&self) -> bool {
        self.inner.validate().is_valid()
    }

    fn violations(&self) -> Vec<String> {
        self.inner
            .validate()
            .violations
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    /// Values at `x` as reduced rationals in `[0, 1)`.
    fn evaluate(&self, x: &str) -> PyResult<Vec<String>> {
        let c = self.inner.evaluate(&rational(x)?).map_err(value_err)?;
        Ok(c.points().iter().map(|p| p.value().to_string()).collect())
    }

    fn profile(&self) -> String {
        self.inner.cardinality_profile().to_string()
    }

    fn is_equicardinal(&self) -> bool {
        self.inner.is_equicardinal()
    }

    /// `"sufficient"` or `"inconclusive"`.
    fn union_check(&self) -> &'static str {
        match self.inner.union_check() {
            UnionCheck::Sufficient => "sufficient",
            UnionCheck::Inconclusive { .. } => "inconclusive",
        }
    }

    /// Monodromy of the n-fold covering in cycle notation, e.g. `"(1 2)"`.
    fn monodromy(&self) -> PyResult<String> {
        let g = self.inner.to_nfold().map_err(value_err)?;
        Ok(g.monodromy().to_string())
    }

    /// The weight certificate as a dict with a `"status"` key.
    fn solve_weights<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let cert = solve_positive(&balance_constraints(&self.inner));
        debug_assert!(verify_certificate(&self.inner, &cert));
        json_to_py(py, &cert.to_json())
    }

    fn with_weights(&self, weights: Vec<u64>) -> PyResult<Self> {
        if weights.len() != self.inner.arcs().len() {
            return Err(value_err(format!(
                "{} weights for {} arcs",
                weights.len(),
                self.inner.arcs().len()
            )));
        }
        Ok(PyMultimap {
            inner: self.inner.with_weights(Some(&weights)).map_err(value_err)?,
        })
    }

    fn weighted_index(&self) -> PyResult<u64> {
        self.inner.weighted_index().map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Multimap(n={}, domain={:?}, arcs={})",
            self.inner.n(),
            self.inner.domain(),
            self.inner.arcs().len()
        )
    }
}

#[pymodule]
#[pyo3(name = "cnmaps")]
fn py_cnmaps(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(hausdorff_distance, m)?)?;
    m.add_function(wrap_pyfunction!(in_hausdorff_ball, m)?)?;
    m.add_function(wrap_pyfunction!(homology, m)?)?;
    m.add_function(wrap_pyfunction!(pi1, m)?)?;
    m.add_function(wrap_pyfunction!(cells, m)?)?;
    m.add_class::<PyMultimap>()?;
    Ok(())
}
