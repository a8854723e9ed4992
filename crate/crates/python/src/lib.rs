//! Python bindings: Coxeter groups, KL tables, graded ranks and
//! Jones-Wenzl coefficient tables. Coefficients in `Q(v)` cross the
//! boundary as strings in the same notation the command line prints.

use std::path::PathBuf;
use std::sync::Arc;

use kljw::coxeter::{build_group, parse_word};
use kljw::grank::{grrk, jw_coefficient};
use kljw::hecke::{antisymmetriser, cache};
use kljw::report::{JwDocument, JwRecord};
use kljw::verify::{run_suite, Suite};
use kljw::{gtl, tl};
use kljw::{BuildOptions, CoxeterPresentation, ElementId, Error, Family, GroupTable, KlTable, LaurentPoly, LoopSign};
use pyo3::exceptions::{PyIndexError, PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Io(e) => PyOSError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn terms(p: &LaurentPoly) -> Vec<(i32, String)> {
    p.terms().rev().map(|(e, c)| (e, c.to_string())).collect()
}

fn presentation(family: &str, rank: Option<usize>, m: Option<u32>) -> PyResult<CoxeterPresentation> {
    let family: Family = family.parse().map_err(py_err)?;
    CoxeterPresentation::from_parts(family, rank, m).map_err(py_err)
}

fn make_group(p: &CoxeterPresentation, allow_large: bool) -> PyResult<Arc<GroupTable>> {
    let opts = BuildOptions { allow_large, ..BuildOptions::default() };
    build_group(p, opts).map(Arc::new).map_err(py_err)
}

/// A finite Coxeter group with elements numbered in ShortLex order.
/// Generators in words are 1-based.
#[pyclass(name = "CoxeterGroup", module = "kljw", frozen)]
struct PyGroup {
    inner: Arc<GroupTable>,
}

impl PyGroup {
    fn id(&self, x: u32) -> PyResult<ElementId> {
        if (x as usize) < self.inner.size() {
            Ok(ElementId(x))
        } else {
            Err(PyIndexError::new_err(format!("element {} out of range for order {}", x, self.inner.size())))
        }
    }
}

#[pymethods]
impl PyGroup {
    #[new]
    #[pyo3(signature = (family, rank = None, m = None, allow_large = false))]
    fn new(family: &str, rank: Option<usize>, m: Option<u32>, allow_large: bool) -> PyResult<Self> {
        let p = presentation(family, rank, m)?;
        Ok(Self { inner: make_group(&p, allow_large)? })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.presentation().label()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn w0(&self) -> u32 {
        self.inner.w0().0
    }

    fn __len__(&self) -> usize {
        self.inner.size()
    }

    fn __repr__(&self) -> String {
        format!("CoxeterGroup({}, order {})", self.label(), self.inner.size())
    }

    /// Hyphen-joined 1-based reduced word, `"e"` for the identity.
    fn word(&self, x: u32) -> PyResult<String> {
        Ok(self.inner.word_string(self.id(x)?))
    }

    /// Index of the element named by a word such as `"1-2-1"`.
    fn element(&self, word: &str) -> PyResult<u32> {
        let w = parse_word(word).map_err(py_err)?;
        Ok(self.inner.from_word(&w).map_err(py_err)?.0)
    }

    fn length(&self, x: u32) -> PyResult<usize> {
        Ok(self.inner.length(self.id(x)?))
    }

    fn multiply(&self, x: u32, y: u32) -> PyResult<u32> {
        Ok(self.inner.multiply(self.id(x)?, self.id(y)?).0)
    }

    fn inverse(&self, x: u32) -> PyResult<u32> {
        Ok(self.inner.inverse(self.id(x)?).0)
    }

    fn bruhat_leq(&self, y: u32, x: u32) -> PyResult<bool> {
        Ok(self.inner.bruhat_leq(self.id(y)?, self.id(x)?))
    }

    fn is_fully_commutative(&self, x: u32) -> PyResult<bool> {
        Ok(self.inner.is_fully_commutative(self.id(x)?))
    }

    fn fc_elements(&self) -> Vec<u32> {
        self.inner.fc_elements().into_iter().map(|x| x.0).collect()
    }
}

/// Kazhdan-Lusztig polynomials `h_{y,x}` (Soergel's normalisation),
/// computed lazily column by column.
#[pyclass(name = "KlTable", module = "kljw", frozen)]
struct PyKlTable {
    group: Py<PyGroup>,
    inner: KlTable,
}

impl PyKlTable {
    fn g(&self) -> &PyGroup {
        self.group.get()
    }
}

#[pymethods]
impl PyKlTable {
    #[new]
    fn new(group: Py<PyGroup>) -> Self {
        let inner = KlTable::new(group.get().inner.clone());
        Self { group, inner }
    }

    #[getter]
    fn group(&self, py: Python<'_>) -> Py<PyGroup> {
        self.group.clone_ref(py)
    }

    fn compute_all(&self, py: Python<'_>) {
        py.detach(|| self.inner.compute_all());
    }

    fn computed_count(&self) -> usize {
        self.inner.computed_count()
    }

    /// `h_{y,x}` as `[(exponent, coefficient), ...]`, highest exponent first.
    fn h(&self, py: Python<'_>, y: u32, x: u32) -> PyResult<Vec<(i32, String)>> {
        let (y, x) = (self.g().id(y)?, self.g().id(x)?);
        Ok(terms(&py.detach(|| self.inner.h(y, x))))
    }

    /// The coefficient of `v` in `h_{y,x}`.
    fn mu(&self, py: Python<'_>, y: u32, x: u32) -> PyResult<i64> {
        let (y, x) = (self.g().id(y)?, self.g().id(x)?);
        Ok(py.detach(|| self.inner.mu(y, x)))
    }

    /// `sum_y v^{-l(y)} h_{y,x}` as `[(exponent, coefficient), ...]`.
    fn grrk(&self, py: Python<'_>, x: u32) -> PyResult<Vec<(i32, String)>> {
        let x = self.g().id(x)?;
        Ok(terms(&py.detach(|| grrk(&self.inner, x)).value))
    }

    /// `(-1)^{l(x)} grrk(x w0) / grrk(w0)`, rendered.
    fn jw_coefficient(&self, py: Python<'_>, x: u32) -> PyResult<String> {
        let x = self.g().id(x)?;
        Ok(py.detach(|| jw_coefficient(&self.inner, x)).to_string())
    }

    /// Writes every computed column in the cache format.
    fn save(&self, path: PathBuf) -> PyResult<()> {
        cache::persist(&path, &self.inner).map_err(py_err)
    }

    /// Loads a cache file; returns the number of columns read.
    fn load(&self, path: PathBuf) -> PyResult<usize> {
        cache::load(&path, &self.inner).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("KlTable({}, {} of {} columns)", self.g().label(), self.inner.computed_count(), self.g().size())
    }
}

fn record_dict<'py>(py: Python<'py>, r: &JwRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("index", r.index)?;
    d.set_item("fc_word", &r.fc_word)?;
    if let Some(diagram) = &r.diagram {
        d.set_item("diagram", diagram.clone())?;
    }
    d.set_item("coefficient", &r.display)?;
    d.set_item("numerator", terms(r.coefficient.numerator()))?;
    d.set_item("denominator", terms(r.coefficient.denominator()))?;
    Ok(d)
}

fn records<'py>(py: Python<'py>, doc: &JwDocument) -> PyResult<Vec<Bound<'py, PyDict>>> {
    doc.records.iter().map(|r| record_dict(py, r)).collect()
}

fn loop_sign(sign: &str) -> PyResult<LoopSign> {
    sign.parse().map_err(py_err)
}

/// Coefficients of the Jones-Wenzl idempotent `j_n` on the monomial basis
/// `u_x`, one dict per fully commutative `x`.
#[pyfunction]
#[pyo3(signature = (n, method = "closed", sign = "plus"))]
fn jw<'py>(py: Python<'py>, n: usize, method: &str, sign: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let sign = loop_sign(sign)?;
    if n < 2 {
        return Err(PyValueError::new_err("n must be at least 2"));
    }
    let p = CoxeterPresentation::new(Family::A, n - 1).map_err(py_err)?;
    let g = make_group(&p, false)?;
    let doc = py.detach(|| -> PyResult<JwDocument> {
        let table = KlTable::new(g.clone());
        let elt = match (method, sign) {
            ("closed", LoopSign::Plus) => tl::closed_jw(&table),
            ("closed", LoopSign::Minus) => tl::jw_minus(&table),
            ("wenzl", _) => tl::wenzl_jw(n, sign),
            ("projection", LoopSign::Plus) => tl::project_pi(&antisymmetriser(&g), &table),
            ("projection", LoopSign::Minus) => {
                return Err(PyValueError::new_err("the minus variant supports the closed and wenzl methods"))
            }
            (other, _) => return Err(PyValueError::new_err(format!("unknown method '{}'", other))),
        }
        .map_err(py_err)?;
        JwDocument::from_tl(&g, n, method, &elt).map_err(py_err)
    })?;
    records(py, &doc)
}

/// The generalised Jones-Wenzl idempotent on the IC basis `beta_x` of the
/// generalised Temperley-Lieb algebra of `group`.
#[pyfunction]
#[pyo3(signature = (group, method = "closed"))]
fn gen_jw<'py>(py: Python<'py>, group: &PyGroup, method: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let g = group.inner.clone();
    let doc = py.detach(|| -> PyResult<JwDocument> {
        let table = KlTable::new(g.clone());
        let elt = match method {
            "closed" => gtl::gen_jw_closed(&table),
            "projection" => gtl::gen_jw_projection(&table),
            other => return Err(PyValueError::new_err(format!("unknown method '{}'", other))),
        };
        Ok(JwDocument::from_gtl(g.rank(), method, &elt))
    })?;
    records(py, &doc)
}

/// Runs verification suites; returns one dict per suite with `ok`,
/// per-check counts and failure descriptions.
#[pyfunction]
#[pyo3(signature = (group, suite = "all"))]
fn verify<'py>(py: Python<'py>, group: &PyGroup, suite: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let g = group.inner.clone();
    let is_a = g.family() == Family::A;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.into_iter().filter(|s| is_a || *s != Suite::TripleAgreement).collect()
    } else {
        vec![suite.parse().map_err(py_err)?]
    };
    let reports = py.detach(|| {
        let table = KlTable::new(g.clone());
        suites.iter().map(|s| run_suite(*s, &table)).collect::<Result<Vec<_>, _>>()
    });
    let mut out = Vec::new();
    for r in reports.map_err(py_err)? {
        let d = PyDict::new(py);
        d.set_item("suite", r.suite.name())?;
        d.set_item("group", &r.group)?;
        d.set_item("ok", r.ok())?;
        let checks: Vec<(String, usize, usize)> =
            r.checks.iter().map(|c| (c.name.clone(), c.passed, c.failed)).collect();
        d.set_item("checks", checks)?;
        d.set_item("failures", r.failures.clone())?;
        out.push(d);
    }
    Ok(out)
}

#[pymodule]
#[pyo3(name = "kljw")]
fn kljw_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyKlTable>()?;
    m.add_function(wrap_pyfunction!(jw, m)?)?;
    m.add_function(wrap_pyfunction!(gen_jw, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
