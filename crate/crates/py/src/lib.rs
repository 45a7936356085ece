//! Python bindings: `Multivector`, parsing, and the coefficient operations.
//!
//! Coefficients come back as `fractions.Fraction`.

use pyo3::create_exception;
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyType;

use cliffchar::{Error, Method, Rational, Signature};
use cliffchar_cli::expr::parse_expression;

create_exception!(cliffchar, SingularElementError, PyZeroDivisionError);
create_exception!(cliffchar, UnsupportedError, PyValueError);
create_exception!(cliffchar, MismatchError, PyValueError);

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::SingularElement => SingularElementError::new_err(e.to_string()),
        Error::UnsupportedDimension { .. } | Error::InvalidSignature { .. } => {
            UnsupportedError::new_err(e.to_string())
        }
        Error::NonScalarCoefficient { .. } | Error::ComplexCoefficient { .. } => {
            MismatchError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.to_string(),))
}

fn signature(p: usize, q: usize) -> PyResult<Signature> {
    Signature::new(p, q).map_err(to_py_err)
}

fn method(name: &str) -> PyResult<Method> {
    name.parse()
        .map_err(|_| UnsupportedError::new_err(format!("unknown method {name:?}")))
}

/// Element of Cl(p,q) with exact rational coordinates.
#[pyclass(module = "cliffchar", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Multivector {
    inner: cliffchar::Multivector,
}

impl Multivector {
    fn wrap(inner: cliffchar::Multivector) -> Self {
        Multivector { inner }
    }

    fn same_algebra(&self, other: &Multivector) -> PyResult<()> {
        if self.inner.signature() == other.inner.signature() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "signature mismatch: {} and {}",
                self.inner.signature(),
                other.inner.signature()
            )))
        }
    }
}

#[pymethods]
impl Multivector {
    /// Parse an expression such as `"3 - e1 + 1/2*e(1,2)"` in Cl(p,q).
    #[new]
    #[pyo3(signature = (p, q, expression = "0"))]
    fn new(p: usize, q: usize, expression: &str) -> PyResult<Self> {
        parse(p, q, expression)
    }

    #[classmethod]
    fn identity(_cls: &Bound<'_, PyType>, p: usize, q: usize) -> PyResult<Self> {
        Ok(Self::wrap(cliffchar::Multivector::identity(signature(p, q)?)))
    }

    #[getter]
    fn signature(&self) -> (usize, usize) {
        let s = self.inner.signature();
        (s.p(), s.q())
    }

    /// Nonzero coordinates as `(generator indices, Fraction)` pairs.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Vec<usize>, Bound<'py, PyAny>)>> {
        self.inner
            .terms()
            .map(|(blade, c)| Ok((blade.generators(), fraction(py, c)?)))
            .collect()
    }

    fn scalar_part<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.scalar_part())
    }

    fn grade(&self, k: usize) -> PyResult<Self> {
        self.inner.grade_project(k).map(Self::wrap).map_err(to_py_err)
    }

    fn hat(&self) -> Self {
        Self::wrap(self.inner.hat())
    }

    fn tilde(&self) -> Self {
        Self::wrap(self.inner.tilde())
    }

    fn hat_tilde(&self) -> Self {
        Self::wrap(self.inner.hat_tilde())
    }

    fn triangle(&self) -> Self {
        Self::wrap(self.inner.triangle())
    }

    /// `[C(1), ..., C(N)]` by the named method.
    #[pyo3(signature = (method = "recursive"))]
    fn charpoly<'py>(&self, py: Python<'py>, method: &str) -> PyResult<Vec<Bound<'py, PyAny>>> {
        let poly = self::method(method)?
            .compute(&self.inner)
            .map_err(to_py_err)?;
        poly.coeffs().iter().map(|c| fraction(py, c)).collect()
    }

    fn det<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &cliffchar::det(&self.inner))
    }

    fn adjugate(&self) -> Self {
        Self::wrap(cliffchar::adjugate(&self.inner))
    }

    fn inverse(&self) -> PyResult<Self> {
        cliffchar::inverse(&self.inner).map(Self::wrap).map_err(to_py_err)
    }

    fn __add__(&self, other: &Multivector) -> PyResult<Self> {
        self.same_algebra(other)?;
        Ok(Self::wrap(&self.inner + &other.inner))
    }

    fn __sub__(&self, other: &Multivector) -> PyResult<Self> {
        self.same_algebra(other)?;
        Ok(Self::wrap(&self.inner - &other.inner))
    }

    fn __mul__(&self, other: &Multivector) -> PyResult<Self> {
        self.same_algebra(other)?;
        Ok(Self::wrap(&self.inner * &other.inner))
    }

    fn __neg__(&self) -> Self {
        Self::wrap(-&self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        let (p, q) = self.signature();
        format!("Multivector({p}, {q}, {:?})", self.inner.to_string())
    }
}

#[pyfunction]
fn parse(p: usize, q: usize, expression: &str) -> PyResult<Multivector> {
    let sig = signature(p, q)?;
    parse_expression(expression, sig)
        .map(Multivector::wrap)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (u, method = "recursive"))]
fn charpoly<'py>(
    py: Python<'py>,
    u: &Multivector,
    method: &str,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    u.charpoly(py, method)
}

#[pyfunction]
fn det<'py>(py: Python<'py>, u: &Multivector) -> PyResult<Bound<'py, PyAny>> {
    u.det(py)
}

#[pyfunction]
fn inverse(u: &Multivector) -> PyResult<Multivector> {
    u.inverse()
}

/// Names accepted by `charpoly(method=...)`.
#[pyfunction]
fn methods() -> Vec<&'static str> {
    Method::ALL.iter().map(|m| m.name()).collect()
}

#[pymodule(name = "cliffchar")]
fn cliffchar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<Multivector>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly, m)?)?;
    m.add_function(wrap_pyfunction!(det, m)?)?;
    m.add_function(wrap_pyfunction!(inverse, m)?)?;
    m.add_function(wrap_pyfunction!(methods, m)?)?;
    m.add("SingularElementError", py.get_type::<SingularElementError>())?;
    m.add("UnsupportedError", py.get_type::<UnsupportedError>())?;
    m.add("MismatchError", py.get_type::<MismatchError>())?;
    Ok(())
}
