//! Python bindings. Rationals cross the boundary as `int`, `str` ("p/q")
//! or anything whose `str()` parses (e.g. `fractions.Fraction`); results
//! come back as plain dicts and lists with rationals rendered as strings.

use jk_core::error::Error;
use jk_core::exactmath::{parse_rational, Monomial, MultiPoly, Rational};
use jk_core::jk::{self, Sampling, DEFAULT_CEILING};
use jk_core::liealg::{zoo, LieAlgebra, Representation};
use jk_core::linalg::QMatrix;
use jk_core::pencil;
use jk_core::shifts::{self, ShiftContext};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(Rational::from_integer(i.into()));
    }
    let text = obj.str()?.to_string();
    parse_rational(&text).map_err(py_err)
}

fn vector(obj: &Bound<'_, PyAny>) -> PyResult<Vec<Rational>> {
    obj.iter()?.map(|x| rational(&x?)).collect()
}

fn matrix(obj: &Bound<'_, PyAny>, cols: Option<usize>) -> PyResult<QMatrix> {
    let rows: Vec<Vec<Rational>> = obj.iter()?.map(|r| vector(&r?)).collect::<PyResult<_>>()?;
    QMatrix::from_rows(rows, cols).map_err(py_err)
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<PyObject> {
    Ok(match v {
        Value::Null => py.None(),
        Value::Bool(b) => b.into_py(py),
        Value::Number(n) => match n.as_u64() {
            Some(u) => u.into_py(py),
            None => n.as_i64().map_or_else(|| n.as_f64().into_py(py), |i| i.into_py(py)),
        },
        Value::String(s) => s.into_py(py),
        Value::Array(items) => {
            let list = PyList::empty_bound(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_py(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new_bound(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_py(py)
        }
    })
}

fn report<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<PyObject> {
    let v = serde_json::to_value(value).map_err(|e| py_err(e.into()))?;
    to_py(py, &v)
}

fn sampling(seed: u64, trials: usize, bound: u64) -> PyResult<Sampling> {
    if seed == 0 || trials == 0 || bound == 0 {
        return Err(PyValueError::new_err("seed, trials and bound must be positive"));
    }
    Ok(Sampling::new(seed, trials, bound))
}

/// A polynomial given as `[(exponents, coeff), ...]`.
fn polynomial(obj: &Bound<'_, PyAny>, nvars: usize) -> PyResult<MultiPoly> {
    let mut terms = Vec::new();
    for term in obj.iter()? {
        let (exps, coeff): (Vec<u32>, Bound<'_, PyAny>) = term?.extract()?;
        if exps.len() != nvars {
            return Err(PyValueError::new_err(format!(
                "term has {} exponents, expected {nvars}",
                exps.len()
            )));
        }
        terms.push((Monomial::new(exps), rational(&coeff)?));
    }
    Ok(MultiPoly::from_terms(nvars, terms))
}

/// A pencil A + λB of m×n rational matrices.
#[pyclass(name = "Pencil", module = "jkinv")]
#[derive(Clone)]
struct PyPencil {
    inner: pencil::Pencil,
}

#[pymethods]
impl PyPencil {
    /// `shape` fixes the width when the matrices have no rows.
    #[new]
    #[pyo3(signature = (a, b, shape=None))]
    fn new(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, shape: Option<(usize, usize)>) -> PyResult<Self> {
        let cols = shape.map(|s| s.1);
        let inner = pencil::Pencil::new(matrix(a, cols)?, matrix(b, cols)?).map_err(py_err)?;
        if let Some(s) = shape {
            if inner.shape() != s {
                return Err(PyValueError::new_err(format!(
                    "matrices are {}x{}, shape says {}x{}",
                    inner.rows(),
                    inner.cols(),
                    s.0,
                    s.1
                )));
            }
        }
        Ok(PyPencil { inner })
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        self.inner.shape()
    }

    fn rank(&self) -> usize {
        pencil::pencil_rank(&self.inner)
    }

    /// Full Kronecker–Jordan invariants as a dict.
    fn invariants(&self, py: Python<'_>) -> PyResult<PyObject> {
        report(py, &pencil::pencil_invariants(&self.inner).map_err(py_err)?)
    }

    /// The pencil (αA + βB) + λ(γA + δB).
    fn recombine(
        &self,
        alpha: &Bound<'_, PyAny>,
        beta: &Bound<'_, PyAny>,
        gamma: &Bound<'_, PyAny>,
        delta: &Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        Ok(PyPencil {
            inner: self
                .inner
                .recombine(&rational(alpha)?, &rational(beta)?, &rational(gamma)?, &rational(delta)?),
        })
    }

    /// Reduced echelon bases of L_hor ⊂ U and L_vert ⊂ V*.
    fn l_spaces(&self, py: Python<'_>) -> PyResult<PyObject> {
        let strs = |vs: Vec<Vec<Rational>>| -> Vec<Vec<String>> {
            vs.into_iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()
        };
        let out = serde_json::json!({
            "l_hor": strs(pencil::l_hor(&self.inner)),
            "l_vert": strs(pencil::l_vert(&self.inner)),
        });
        to_py(py, &out)
    }

    fn __repr__(&self) -> String {
        let (m, n) = self.inner.shape();
        format!("Pencil({m}x{n})")
    }
}

/// A representation of a Lie algebra given by structure constants.
#[pyclass(name = "Representation", module = "jkinv")]
#[derive(Clone)]
struct PyRepresentation {
    inner: Representation,
    label: String,
    /// Invariants shipped with a zoo entry.
    known: Vec<MultiPoly>,
}

fn algebra(dim: usize, brackets: &Bound<'_, PyAny>) -> PyResult<LieAlgebra> {
    let mut out = Vec::new();
    for b in brackets.iter()? {
        let (i, j, k, c): (usize, usize, usize, Bound<'_, PyAny>) = b?.extract()?;
        out.push((i, j, k, rational(&c)?));
    }
    LieAlgebra::new(dim, out).map_err(py_err)
}

#[pymethods]
impl PyRepresentation {
    /// A built-in example; see `zoo_names()`.
    #[staticmethod]
    fn zoo(name: &str) -> PyResult<Self> {
        let e = zoo::entry(name).map_err(py_err)?;
        Ok(PyRepresentation {
            inner: e.representation,
            label: e.name.to_string(),
            known: e.invariants,
        })
    }

    /// Coadjoint representation of the algebra with brackets
    /// `[(i, j, k, c), ...]` meaning c_{ij}^k.
    #[staticmethod]
    fn coadjoint(dim: usize, brackets: &Bound<'_, PyAny>) -> PyResult<Self> {
        let alg = algebra(dim, brackets)?;
        Ok(PyRepresentation {
            inner: Representation::coadjoint(&alg),
            label: "coadjoint".into(),
            known: Vec::new(),
        })
    }

    #[staticmethod]
    fn adjoint(dim: usize, brackets: &Bound<'_, PyAny>) -> PyResult<Self> {
        let alg = algebra(dim, brackets)?;
        Ok(PyRepresentation {
            inner: Representation::adjoint(&alg),
            label: "adjoint".into(),
            known: Vec::new(),
        })
    }

    /// Explicit matrices ρ(e_1), …, ρ(e_n), checked to be a homomorphism.
    #[staticmethod]
    fn from_matrices(dim: usize, brackets: &Bound<'_, PyAny>, matrices: &Bound<'_, PyAny>) -> PyResult<Self> {
        let alg = algebra(dim, brackets)?;
        let rho: Vec<QMatrix> = matrices.iter()?.map(|m| matrix(&m?, None)).collect::<PyResult<_>>()?;
        Ok(PyRepresentation {
            inner: Representation::new(alg, rho).map_err(py_err)?,
            label: "custom".into(),
            known: Vec::new(),
        })
    }

    #[getter]
    fn dim_g(&self) -> usize {
        self.inner.dim_g()
    }

    #[getter]
    fn dim_v(&self) -> usize {
        self.inner.dim_v()
    }

    /// The pencil R_x + λR_a.
    fn pencil(&self, x: &Bound<'_, PyAny>, a: &Bound<'_, PyAny>) -> PyResult<PyPencil> {
        Ok(PyPencil {
            inner: self.inner.r_pencil(&vector(x)?, &vector(a)?).map_err(py_err)?,
        })
    }

    /// The Jordan–Kronecker invariant at a sampled generic pair.
    #[pyo3(signature = (seed=1, trials=8, bound=1000))]
    fn analyze(&self, py: Python<'_>, seed: u64, trials: usize, bound: u64) -> PyResult<PyObject> {
        let s = sampling(seed, trials, bound)?;
        report(py, &jk::jk_invariants(&self.inner, &s).map_err(py_err)?)
    }

    /// Degree and display form of the fundamental semi-invariant.
    #[pyo3(signature = (ceiling=None))]
    fn semiinvariant(&self, py: Python<'_>, ceiling: Option<u128>) -> PyResult<PyObject> {
        let s = jk::fundamental_semiinvariant(&self.inner, ceiling.unwrap_or(DEFAULT_CEILING)).map_err(py_err)?;
        to_py(py, &serde_json::json!({ "degree": s.degree, "display": s.poly.to_string() }))
    }

    /// Whether `poly` (`[(exponents, coeff), ...]`) is an invariant.
    fn is_invariant(&self, poly: &Bound<'_, PyAny>) -> PyResult<bool> {
        let p = polynomial(poly, self.inner.dim_v())?;
        Ok(shifts::verify_invariant(&self.inner, &p).map_err(py_err)?.is_verified())
    }

    /// trdeg Y_a and the span identity for the given invariants (the zoo's
    /// own invariants when omitted).
    #[pyo3(signature = (a, invariants=None, seed=1, trials=8, bound=1000))]
    fn trdeg(
        &self,
        py: Python<'_>,
        a: &Bound<'_, PyAny>,
        invariants: Option<&Bound<'_, PyAny>>,
        seed: u64,
        trials: usize,
        bound: u64,
    ) -> PyResult<PyObject> {
        let polys = match invariants {
            Some(list) => list
                .iter()?
                .map(|p| polynomial(&p?, self.inner.dim_v()))
                .collect::<PyResult<Vec<_>>>()?,
            None => self.known.clone(),
        };
        let fs = shifts::verify_all(&self.inner, &polys).map_err(py_err)?;
        let ctx = ShiftContext::new(&self.inner, &sampling(seed, trials, bound)?).map_err(py_err)?;
        report(py, &ctx.trdeg_ya(&fs, &vector(a)?).map_err(py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("Representation({}, dim g = {}, dim V = {})", self.label, self.inner.dim_g(), self.inner.dim_v())
    }
}

#[pyfunction]
fn zoo_names() -> Vec<&'static str> {
    zoo::all().iter().map(|e| e.name).collect()
}

/// Runs the command-line interface with `args` (without the program name)
/// and returns `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jk".to_string()).chain(args);
    let code = jk_core::cli::run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

#[pymodule]
fn jkinv(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPencil>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(zoo_names, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
