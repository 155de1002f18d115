//! Python bindings for the hermitia toolkit.
//!
//! Field elements cross the boundary as their integer encodings
//! `sum c_i p^i`; points as `(x, y)` pairs of encodings.

use std::sync::Arc;
use std::time::Duration;

use pyo3::exceptions::{PyRuntimeError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;

use hermitia::gf::{build_field, field_for_q, FieldElement, FieldSpec};
use hermitia::groebner::buchberger;
use hermitia::hermitian::{
    build_curve, code_parameters, codeword_from_support, divisor_cut, supports_codeword, Codeword, CurveContext,
    HermitianCode,
};
use hermitia::mwcount::{count_min_weight_with, line_union_codeword, CountOptions, MWResult};
use hermitia::oracle::{assignment_count_with, exhaustive_min_weight_with, OracleBudget};
use hermitia::poly::{Polynomial, Ring, TermOrder};
use hermitia::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => PyTimeoutError::new_err(e.to_string()),
        Error::KernelDimension(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// GF(q^2) for a prime power q, or GF(p^e) via `Field.of(p, e)`.
#[pyclass(name = "Field", module = "hermitia", frozen)]
struct PyField {
    inner: Arc<FieldSpec>,
}

impl PyField {
    fn el(&self, a: u32) -> PyResult<FieldElement> {
        self.inner.element(a).map_err(to_py)
    }
}

#[pymethods]
impl PyField {
    #[new]
    fn new(q: u32) -> PyResult<Self> {
        Ok(PyField {
            inner: Arc::new(field_for_q(q).map_err(to_py)?),
        })
    }

    #[staticmethod]
    fn of(p: u64, e: u32) -> PyResult<Self> {
        Ok(PyField {
            inner: Arc::new(build_field(p, e).map_err(to_py)?),
        })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    #[getter]
    fn size(&self) -> u32 {
        self.inner.size()
    }

    #[getter]
    fn modulus(&self) -> Vec<u32> {
        self.inner.modulus().to_vec()
    }

    fn elements(&self) -> Vec<u32> {
        self.inner.enumerate_elements().into_iter().map(FieldElement::index).collect()
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.add(self.el(a)?, self.el(b)?).index())
    }

    fn sub(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.sub(self.el(a)?, self.el(b)?).index())
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.mul(self.el(a)?, self.el(b)?).index())
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.inv(self.el(a)?).map_err(to_py)?.index())
    }

    fn pow(&self, a: u32, k: u64) -> PyResult<u32> {
        Ok(self.inner.pow(self.el(a)?, k).index())
    }

    fn trace(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.trace(self.el(a)?).index())
    }

    fn norm(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.norm(self.el(a)?).index())
    }

    fn __repr__(&self) -> String {
        format!("Field(size={})", self.inner.size())
    }
}

/// Result of a minimum-weight count.
#[pyclass(name = "MWResult", module = "hermitia", frozen, get_all)]
struct PyMWResult {
    q: u32,
    m: u32,
    d: u32,
    mu: Option<u32>,
    lambda_: Option<u32>,
    num_points_z: Option<u64>,
    mw_count: u64,
    elapsed_s: f64,
    method: String,
}

impl From<MWResult> for PyMWResult {
    fn from(r: MWResult) -> Self {
        PyMWResult {
            q: r.q,
            m: r.m,
            d: r.d,
            mu: r.mu,
            lambda_: r.lambda,
            num_points_z: r.num_points_z,
            mw_count: r.mw_count,
            elapsed_s: r.elapsed.as_secs_f64(),
            method: r.method.as_str().to_string(),
        }
    }
}

#[pymethods]
impl PyMWResult {
    fn __repr__(&self) -> String {
        format!(
            "MWResult(q={}, m={}, d={}, mw_count={}, method='{}')",
            self.q, self.m, self.d, self.mw_count, self.method
        )
    }
}

/// The Hermitian curve `x^(q+1) = y^q + y` over GF(q^2) with its rational points.
#[pyclass(name = "Curve", module = "hermitia", frozen)]
struct PyCurve {
    inner: Arc<CurveContext>,
}

#[pymethods]
impl PyCurve {
    #[new]
    fn new(q: u32) -> PyResult<Self> {
        Ok(PyCurve {
            inner: build_curve(field_for_q(q).map_err(to_py)?),
        })
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn genus(&self) -> u32 {
        self.inner.genus()
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField {
            inner: self.inner.field_arc().clone(),
        }
    }

    fn points(&self) -> Vec<(u32, u32)> {
        self.inner.points().iter().map(|(x, y)| (x.index(), y.index())).collect()
    }

    /// Exponent pairs `(a, b)` of the monomial basis, in w-degree order.
    fn basis(&self) -> Vec<(u32, u32)> {
        self.inner.basis().iter().map(|m| m.xy_exponents()).collect()
    }

    fn is_valid_m(&self, m: u32) -> bool {
        self.inner.is_valid_m(m)
    }

    fn valid_ms(&self) -> Vec<u32> {
        self.inner.valid_ms()
    }

    fn code(&self, m: u32) -> PyResult<PyCode> {
        Ok(PyCode {
            inner: code_parameters(&self.inner, m).map_err(to_py)?,
        })
    }

    /// Point indices where `f` (a polynomial in x, y) vanishes, and whether
    /// every such point is a simple zero.
    fn divisor_cut(&self, f: &str) -> PyResult<(Vec<usize>, bool)> {
        let poly = Polynomial::parse(self.inner.ring(), f).map_err(to_py)?;
        let (d, simple) = divisor_cut(&self.inner, &poly).map_err(to_py)?;
        Ok((d.indices().to_vec(), simple))
    }

    /// Reduced Groebner basis of the ideal generated by `gens` in GF(q^2)[x, y].
    #[pyo3(signature = (gens, order = "degrevlex"))]
    fn groebner_basis(&self, gens: Vec<String>, order: &str) -> PyResult<Vec<String>> {
        let ord = match order {
            "degrevlex" => TermOrder::DegRevLex,
            "weighted" => TermOrder::Weighted { q: self.inner.q() },
            other => return Err(PyValueError::new_err(format!("unknown order {other:?}"))),
        };
        let ring = Ring::plane(self.inner.field_arc().clone(), ord);
        let polys = gens
            .iter()
            .map(|g| Polynomial::parse(&ring, g))
            .collect::<Result<Vec<_>, _>>()
            .map_err(to_py)?;
        let gb = buchberger(&polys, ord).map_err(to_py)?;
        Ok(gb.generators().iter().map(|g| g.to_string()).collect())
    }

    fn __repr__(&self) -> String {
        format!("Curve(q={}, n={})", self.inner.q(), self.inner.n())
    }
}

/// The code `C_m`: kernel of the evaluation of the first monomials at all points.
#[pyclass(name = "Code", module = "hermitia", frozen)]
struct PyCode {
    inner: HermitianCode,
}

impl PyCode {
    fn divisor(&self, support: Vec<usize>) -> PyResult<hermitia::hermitian::Divisor> {
        self.inner.ctx().divisor(support).map_err(to_py)
    }
}

#[pymethods]
impl PyCode {
    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k()
    }

    #[getter]
    fn d(&self) -> Option<u32> {
        self.inner.d()
    }

    #[getter]
    fn phase(&self) -> u8 {
        self.inner.phase()
    }

    /// `(mu, beta, lambda)` for phases 3 and 4.
    #[getter]
    fn decomposition(&self) -> Option<(u32, u32, u32)> {
        self.inner.decomposition().map(|d| (d.mu, d.beta, d.lambda))
    }

    fn parity_check(&self) -> Vec<Vec<u32>> {
        self.inner
            .parity_check()
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(FieldElement::index).collect())
            .collect()
    }

    fn is_codeword(&self, word: Vec<u32>) -> PyResult<bool> {
        let field = self.inner.ctx().field();
        let entries = word
            .into_iter()
            .map(|a| field.element(a))
            .collect::<Result<Vec<_>, _>>()
            .map_err(to_py)?;
        if entries.len() != self.inner.n() as usize {
            return Ok(false);
        }
        Ok(self.inner.is_codeword(&Codeword { entries }))
    }

    fn supports_codeword(&self, support: Vec<usize>) -> PyResult<bool> {
        Ok(supports_codeword(&self.inner, &self.divisor(support)?))
    }

    fn codeword_from_support(&self, support: Vec<usize>) -> PyResult<Vec<u32>> {
        let word = codeword_from_support(&self.inner, &self.divisor(support)?).map_err(to_py)?;
        Ok(word.entries.into_iter().map(FieldElement::index).collect())
    }

    /// A union of lines cutting a minimum-weight support: `(F, support)`.
    #[pyo3(signature = (seed = 0))]
    fn line_union_codeword(&self, seed: u64) -> PyResult<(String, Vec<usize>)> {
        let (f, d) = line_union_codeword(&self.inner, seed).map_err(to_py)?;
        Ok((f.to_string(), d.indices().to_vec()))
    }

    #[pyo3(signature = (max_seconds = 600.0))]
    fn count_min_weight(&self, py: Python<'_>, max_seconds: f64) -> PyResult<PyMWResult> {
        let ctx = self.inner.ctx().clone();
        let m = self.inner.m();
        let opts = CountOptions {
            max_duration: Some(Duration::from_secs_f64(max_seconds)),
        };
        py.detach(|| count_min_weight_with(&ctx, m, opts))
            .map(PyMWResult::from)
            .map_err(to_py)
    }

    #[pyo3(signature = (max_enumerations = 100_000_000, max_seconds = 600.0))]
    fn exhaustive_min_weight(&self, py: Python<'_>, max_enumerations: u128, max_seconds: f64) -> PyResult<PyMWResult> {
        let budget = budget(max_enumerations, max_seconds);
        py.detach(|| exhaustive_min_weight_with(&self.inner, budget, None))
            .map(PyMWResult::from)
            .map_err(to_py)
    }

    #[pyo3(signature = (max_enumerations = 100_000_000, max_seconds = 600.0))]
    fn assignment_count(&self, py: Python<'_>, max_enumerations: u128, max_seconds: f64) -> PyResult<PyMWResult> {
        let budget = budget(max_enumerations, max_seconds);
        py.detach(|| assignment_count_with(&self.inner, budget, None))
            .map(PyMWResult::from)
            .map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "Code(q={}, m={}, n={}, k={}, d={:?})",
            self.inner.q(),
            self.inner.m(),
            self.inner.n(),
            self.inner.k(),
            self.inner.d()
        )
    }
}

fn budget(max_enumerations: u128, max_seconds: f64) -> OracleBudget {
    OracleBudget {
        max_enumerations,
        max_duration: Duration::from_secs_f64(max_seconds),
    }
}

/// Number of minimum-weight codewords of `C_m` over GF(q^2).
#[pyfunction]
fn count_min_weight(py: Python<'_>, q: u32, m: u32) -> PyResult<PyMWResult> {
    py.detach(|| hermitia::mwcount::count_min_weight(q, m))
        .map(PyMWResult::from)
        .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "hermitia")]
fn hermitia_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyCurve>()?;
    m.add_class::<PyCode>()?;
    m.add_class::<PyMWResult>()?;
    m.add_function(wrap_pyfunction!(count_min_weight, m)?)?;
    Ok(())
}
