//! Python bindings for the cherednik2 core crate.

use std::sync::Arc;

use cherednik2::arith::parse_rational;
use cherednik2::arith::rational::fmt_rational;
use cherednik2::hom::{hom_conditions, hom_dim_bruteforce, morphism_diagram};
use cherednik2::labels::{enumerate_labels, GroupElement, Label, Params};
use cherednik2::module::ModElem;
use cherednik2::oracle::y_act_oracle;
use cherednik2::singular::{applicable_cases, construct, CaseTag};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: cherednik2::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_label(s: &str) -> PyResult<Label> {
    s.parse().map_err(err)
}

#[pyclass(name = "Params", frozen)]
struct PyParams {
    inner: Arc<Params>,
}

#[pymethods]
impl PyParams {
    /// `c0` and the entries of `d` are rationals written as "p/q" strings
    /// (plain integers are accepted too).
    #[new]
    fn new(r: u32, c0: &str, d: Vec<String>) -> PyResult<Self> {
        let c0 = parse_rational(c0).map_err(err)?;
        let d = d.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>, _>>().map_err(err)?;
        Ok(PyParams { inner: Params::new(r, c0, d).map_err(err)?.shared() })
    }

    #[getter]
    fn r(&self) -> u32 {
        self.inner.r
    }

    #[getter]
    fn c0(&self) -> String {
        fmt_rational(&self.inner.c0)
    }

    #[getter]
    fn d(&self) -> Vec<String> {
        self.inner.d.iter().map(fmt_rational).collect()
    }

    fn labels(&self) -> Vec<String> {
        enumerate_labels(self.inner.r).iter().map(|l| l.to_string()).collect()
    }

    fn __repr__(&self) -> String {
        format!("Params(r={}, c0={}, d={:?})", self.inner.r, self.c0(), self.d())
    }
}

#[pyclass(name = "Element", frozen)]
struct PyElement {
    inner: ModElem,
}

#[pymethods]
impl PyElement {
    /// Parses a sum of terms such as "x1^2*x2@T1 - 1/3*x2^3@T2".
    #[new]
    fn new(params: &PyParams, label: &str, text: &str) -> PyResult<Self> {
        let e = ModElem::parse(parse_label(label)?, params.inner.clone(), text).map_err(err)?;
        Ok(PyElement { inner: e })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label.to_string()
    }

    fn y_act(&self, axis: u8) -> PyResult<Self> {
        if axis != 1 && axis != 2 {
            return Err(PyValueError::new_err("axis must be 1 or 2"));
        }
        Ok(PyElement { inner: self.inner.y_act(axis) })
    }

    /// y-action evaluated from the defining formula.
    fn y_act_oracle(&self, axis: u8) -> PyResult<Self> {
        Ok(PyElement { inner: y_act_oracle(&self.inner, axis).map_err(err)? })
    }

    fn x_mul(&self, axis: u8) -> Self {
        PyElement { inner: self.inner.x_mul(axis) }
    }

    /// Action of diag(ζ^a, ζ^b) followed by the coordinate swap when `swap`.
    /// Fails when the result has irrational coefficients.
    fn act(&self, a: i64, b: i64, swap: bool) -> PyResult<Self> {
        let g = GroupElement::new(self.inner.r(), a, b, swap);
        Ok(PyElement { inner: self.inner.w_act_rational(&g).map_err(err)? })
    }

    fn is_singular(&self) -> bool {
        self.inner.is_singular()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn normalized(&self) -> Self {
        PyElement { inner: self.inner.normalized() }
    }

    fn __add__(&self, other: &PyElement) -> PyResult<Self> {
        Ok(PyElement { inner: self.inner.add(&other.inner).map_err(err)? })
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<Self> {
        Ok(PyElement { inner: self.inner.sub(&other.inner).map_err(err)? })
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.inner == other.inner
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner.to_json()).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({}, {})", self.inner.label, self.inner)
    }
}

/// Whether some existence rule fires for Hom(Δ(from), Δ(to)).
#[pyfunction]
fn hom_exists(params: &PyParams, from: &str, to: &str) -> PyResult<bool> {
    Ok(hom_conditions(&parse_label(from)?, &parse_label(to)?, &params.inner).exists)
}

/// Full rule report as a JSON string.
#[pyfunction]
fn hom_report(params: &PyParams, from: &str, to: &str) -> PyResult<String> {
    let rep = hom_conditions(&parse_label(from)?, &parse_label(to)?, &params.inner);
    serde_json::to_string(&rep).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// dim Hom(Δ(from), Δ(to)) by exact linear algebra up to `max_degree`.
#[pyfunction]
#[pyo3(signature = (params, from, to, max_degree = 25))]
fn hom_dim(py: Python<'_>, params: &PyParams, from: &str, to: &str, max_degree: u32) -> PyResult<usize> {
    let (a, b) = (parse_label(from)?, parse_label(to)?);
    let p = params.inner.clone();
    py.detach(move || hom_dim_bruteforce(&a, &b, &p, max_degree)).map_err(err)
}

/// Catalogued clauses ("Family:n=N:k=K") applying to `label`.
#[pyfunction]
#[pyo3(signature = (params, label, max_n = 25))]
fn cases(params: &PyParams, label: &str, max_n: u32) -> PyResult<Vec<String>> {
    Ok(applicable_cases(&params.inner, &parse_label(label)?, max_n).iter().map(|c| c.to_string()).collect())
}

/// Builds the catalogued singular vector of `label` for clause `case`.
#[pyfunction]
fn singular_vector(params: &PyParams, label: &str, case: &str) -> PyResult<PyElement> {
    let tag: CaseTag = case.parse().map_err(err)?;
    let (e, _) = construct(&params.inner, &parse_label(label)?, &tag).map_err(err)?;
    Ok(PyElement { inner: e })
}

/// Graphviz text of the morphism diagram.
#[pyfunction]
#[pyo3(signature = (params, reduce = true))]
fn diagram_dot(params: &PyParams, reduce: bool) -> PyResult<String> {
    Ok(morphism_diagram(&params.inner).map_err(err)?.to_dot(reduce))
}

/// Reruns a bundled worked example; returns (ok, report as JSON).
#[pyfunction]
fn repro(example: &str) -> PyResult<(bool, String)> {
    let to_json = |v: serde_json::Result<String>| v.map_err(|e| PyValueError::new_err(e.to_string()));
    match example {
        "example35" => {
            let rep = cherednik2::repro::repro_example35().map_err(err)?;
            Ok((rep.ok(), to_json(serde_json::to_string(&rep))?))
        }
        "example36" => {
            let rep = cherednik2::repro::repro_example36().map_err(err)?;
            Ok((rep.ok(), to_json(serde_json::to_string(&rep))?))
        }
        other => Err(PyValueError::new_err(format!("unknown example {other:?}"))),
    }
}

#[pymodule]
fn pycherednik2(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParams>()?;
    m.add_class::<PyElement>()?;
    m.add_function(wrap_pyfunction!(hom_exists, m)?)?;
    m.add_function(wrap_pyfunction!(hom_report, m)?)?;
    m.add_function(wrap_pyfunction!(hom_dim, m)?)?;
    m.add_function(wrap_pyfunction!(cases, m)?)?;
    m.add_function(wrap_pyfunction!(singular_vector, m)?)?;
    m.add_function(wrap_pyfunction!(diagram_dot, m)?)?;
    m.add_function(wrap_pyfunction!(repro, m)?)?;
    Ok(())
}
