//! Python bindings: posets, generators, exact solvers, verifiers and the
//! path-width pipeline. Certificates cross the boundary as plain lists and
//! dicts in the same shape as the JSON documents.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use posetdim::generators::{Family, GeneratorSpec, DEFAULT_SIZE_BUDGET};
use posetdim::realizer::{audit_boolean_realizer, audit_realizer, verify_local_realizer};
use posetdim::solvers::{bdim_exact_with, dim_exact_with, ldim_exact_with, SolverOptions};
use posetdim::{BitString, BooleanRealizer, LinearOrder, PleFamily, RelationMode};

create_exception!(posetdim_py, PosetError, PyValueError, "Invalid input or failed precondition.");
create_exception!(posetdim_py, BudgetExceeded, PosetError, "A size or search budget ran out.");

fn err(e: posetdim::Error) -> PyErr {
    use posetdim::Error as E;
    match e {
        E::BudgetExceeded(_) | E::SizeBudgetExceeded { .. } | E::SearchBudgetExceeded(_) | E::Exceeded(_) => {
            BudgetExceeded::new_err(e.to_string())
        }
        _ => PosetError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match (n.as_u64(), n.as_i64()) {
            (Some(u), _) => u.into_pyobject(py)?.into_any(),
            (None, Some(i)) => i.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialized<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(value).map_err(|e| PosetError::new_err(e.to_string()))?;
    to_py(py, &v)
}

fn family_of(ples: Vec<Vec<usize>>) -> PleFamily {
    PleFamily::from_vecs(ples)
}

fn boolean_of(orders: Vec<Vec<usize>>, accepted: Vec<String>) -> PyResult<BooleanRealizer> {
    let accepted = accepted
        .iter()
        .map(|s| s.parse::<BitString>().map_err(|e| PosetError::new_err(format!("bad accepted string {s:?}: {e}"))))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(BooleanRealizer::new(orders.into_iter().map(LinearOrder).collect(), accepted))
}

/// A finite poset on elements `0..n`.
#[pyclass(name = "Poset", module = "posetdim_py", frozen)]
struct PyPoset {
    inner: posetdim::Poset,
}

#[pymethods]
impl PyPoset {
    /// `pairs` are cover pairs (`mode="cover"`) or any acyclic relation
    /// (`mode="full"`); either way the transitive closure is taken.
    #[new]
    #[pyo3(signature = (n, pairs, mode = "cover"))]
    fn new(n: usize, pairs: Vec<(usize, usize)>, mode: &str) -> PyResult<Self> {
        let mode = match mode {
            "cover" => RelationMode::Cover,
            "full" => RelationMode::Full,
            other => return Err(PosetError::new_err(format!("mode must be 'cover' or 'full', got {other:?}"))),
        };
        Ok(PyPoset { inner: posetdim::Poset::from_relation(n, &pairs, mode).map_err(err)? })
    }

    #[staticmethod]
    #[pyo3(signature = (family, *params, budget = DEFAULT_SIZE_BUDGET))]
    fn generate(family: &str, params: Vec<usize>, budget: usize) -> PyResult<Self> {
        let spec = GeneratorSpec::new(Family::parse(family).map_err(err)?, params).map_err(err)?;
        Ok(PyPoset { inner: spec.build(budget).map_err(err)? })
    }

    #[staticmethod]
    fn random(seed: u64, min: usize, max: usize) -> PyResult<Self> {
        if min == 0 || min > max {
            return Err(PosetError::new_err(format!("need 1 <= min <= max, got {min} {max}")));
        }
        Ok(PyPoset { inner: posetdim::random::seeded_poset(seed, min, max) })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPoset { inner: posetdim::io::poset_from_json(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        posetdim::io::poset_to_json(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Poset(n={}, covers={})", self.inner.len(), self.inner.cover_pairs().len())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn lt(&self, x: usize, y: usize) -> bool {
        self.inner.lt(x, y)
    }

    fn le(&self, x: usize, y: usize) -> bool {
        self.inner.le(x, y)
    }

    fn incomparable(&self, x: usize, y: usize) -> bool {
        self.inner.incomparable(x, y)
    }

    fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.inner.cover_pairs()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.elements().map(|x| self.inner.label(x)).collect()
    }

    fn height(&self) -> usize {
        self.inner.height()
    }

    fn width(&self) -> usize {
        self.inner.width().width
    }

    fn dual(&self) -> Self {
        PyPoset { inner: self.inner.dual() }
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        self.inner.is_isomorphic(&other.inner).is_some()
    }

    /// Dushnik-Miller dimension with its certificate, as a dict.
    #[pyo3(signature = (max = None, nodes = None))]
    fn dim<'py>(&self, py: Python<'py>, max: Option<usize>, nodes: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
        let p = &self.inner;
        let opts = options(SolverOptions::default().max_elements, nodes);
        let cert = py.detach(|| dim_exact_with(p, max.unwrap_or(p.len()), opts)).map_err(err)?;
        serialized(py, &cert)
    }

    #[pyo3(signature = (max = None, nodes = None))]
    fn ldim<'py>(&self, py: Python<'py>, max: Option<usize>, nodes: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
        let p = &self.inner;
        let opts = options(posetdim::solvers::ldim::DEFAULT_LDIM_MAX_ELEMENTS, nodes);
        let cert = py.detach(|| ldim_exact_with(p, max.unwrap_or(p.len()), opts)).map_err(err)?;
        serialized(py, &cert)
    }

    #[pyo3(signature = (max = None, nodes = None))]
    fn bdim<'py>(&self, py: Python<'py>, max: Option<usize>, nodes: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
        let p = &self.inner;
        let opts = options(posetdim::solvers::bdim::DEFAULT_BDIM_MAX_ELEMENTS, nodes);
        let cert = py.detach(|| bdim_exact_with(p, max.unwrap_or(p.len()), opts)).map_err(err)?;
        serialized(py, &cert)
    }
}

fn options(max_elements: usize, nodes: Option<u64>) -> SolverOptions {
    let defaults = SolverOptions::default();
    SolverOptions { max_elements, node_budget: nodes.unwrap_or(defaults.node_budget) }
}

/// `(name, usage)` for every generator family.
#[pyfunction]
fn families() -> Vec<(&'static str, &'static str)> {
    Family::ALL.iter().map(|f| (f.name(), f.usage())).collect()
}

/// The first violation as a dict, or `None` when `ples` realizes `p`.
#[pyfunction]
fn verify_realizer<'py>(py: Python<'py>, p: &PyPoset, ples: Vec<Vec<usize>>) -> PyResult<Bound<'py, PyAny>> {
    let v = audit_realizer(&p.inner, &family_of(ples)).map_err(err)?;
    serialized(py, &v)
}

/// `{"valid", "mu", "frequencies", "violation"}`.
#[pyfunction]
fn verify_local_realizer_report<'py>(
    py: Python<'py>,
    p: &PyPoset,
    ples: Vec<Vec<usize>>,
) -> PyResult<Bound<'py, PyAny>> {
    let rep = verify_local_realizer(&p.inner, &family_of(ples)).map_err(err)?;
    serialized(py, &rep)
}

#[pyfunction]
fn verify_boolean_realizer<'py>(
    py: Python<'py>,
    p: &PyPoset,
    orders: Vec<Vec<usize>>,
    accepted: Vec<String>,
) -> PyResult<Bound<'py, PyAny>> {
    let b = boolean_of(orders, accepted)?;
    let v = audit_boolean_realizer(&p.inner, &b).map_err(err)?;
    serialized(py, &v)
}

/// Local realizer from an exact path decomposition of the cover graph (or
/// the given bags); returns `(ples, report)`.
#[pyfunction]
#[pyo3(signature = (p, bags = None))]
fn ldim_from_pathwidth<'py>(
    py: Python<'py>,
    p: &PyPoset,
    bags: Option<Vec<Vec<usize>>>,
) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let poset = &p.inner;
    let out = py
        .detach(|| match bags {
            Some(bags) => posetdim::pipeline::ldim_from_path_decomposition(
                poset,
                &posetdim::decomposition::PathDecomposition { bags },
            ),
            None => posetdim::pipeline::ldim_from_pathwidth(poset),
        })
        .map_err(err)?;
    let ples: Vec<Vec<usize>> = out.family.ples.into_iter().map(|l| l.0).collect();
    Ok((serialized(py, &ples)?, serialized(py, &out.report)?))
}

/// Hasse diagram as Graphviz DOT.
#[pyfunction]
fn poset_dot(p: &PyPoset) -> String {
    posetdim::dot::poset_dot(&p.inner)
}

#[pymodule]
pub fn posetdim_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add("PosetError", m.py().get_type::<PosetError>())?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    m.add_function(wrap_pyfunction!(verify_realizer, m)?)?;
    m.add_function(wrap_pyfunction!(verify_local_realizer_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify_boolean_realizer, m)?)?;
    m.add_function(wrap_pyfunction!(ldim_from_pathwidth, m)?)?;
    m.add_function(wrap_pyfunction!(poset_dot, m)?)?;
    Ok(())
}
