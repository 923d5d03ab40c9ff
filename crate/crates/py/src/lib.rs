//! Python bindings: a `Scheme` wrapper around an ideal over the default prime
//! field, plus the sequence and complete-intersection helpers.
//!
//! Structured results come back as plain dicts with the same layout as the
//! `--output json` reports of the command-line tool.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use avkit::algebra::PrimeField;
use avkit::cli::manifest::{self, CheckSettings};
use avkit::cli::scheme::{ideal_from_text, points_from_text};
use avkit::geometry::{points_ideal, Fixture};
use avkit::gin::{gin, is_lex_segment};
use avkit::groebner::{saturation, Ideal};
use avkit::hilbert::hilbert_function;
use avkit::report::{AvSummary, GinSummary, TripleRow};
use avkit::unexpected::{
    av_sequence, certify_no_unexpected, ci_vdim_closed_form, detect, persistence_table, sylvester_witness, Route,
    DEFAULT_TRIALS,
};
use avkit::Error;

create_exception!(avkit_py, RouteMismatchError, PyRuntimeError, "The direct and gin-colon routes disagree.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::RouteMismatch { .. } => RouteMismatchError::new_err(e.to_string()),
        Error::Parse { .. }
        | Error::Invalid(_)
        | Error::NonHomogeneous(_)
        | Error::Dimension { .. }
        | Error::TooManyVariables(_)
        | Error::FieldMismatch(_)
        | Error::CapTooSmall { .. } => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    let json = PyModule::import(py, "json")?;
    Ok(json.call_method1("loads", (text,))?.unbind())
}

fn field() -> PrimeField {
    PrimeField::default()
}

/// A zero-dimensional or curve scheme given by its saturated ideal.
#[pyclass(frozen, module = "avkit_py")]
struct Scheme {
    ideal: Ideal<PrimeField>,
    source: String,
    replaced_by_saturation: bool,
}

#[pymethods]
impl Scheme {
    /// Builds a named configuration; `n` is the rank of the root-system fixtures.
    #[staticmethod]
    #[pyo3(signature = (name, n=None, seed=0))]
    fn fixture(name: &str, n: Option<usize>, seed: u64) -> PyResult<Self> {
        let f = Fixture::parse(name, n).map_err(py_err)?;
        let ideal = f.recipe(seed).build(&field()).map_err(py_err)?;
        Ok(Scheme {
            ideal,
            source: format!("fixture {}", f.name()),
            replaced_by_saturation: false,
        })
    }

    /// The ideal of a finite set of points, given by integer coordinates.
    #[staticmethod]
    fn from_points(points: Vec<Vec<i64>>) -> PyResult<Self> {
        let text: String = points
            .iter()
            .map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ") + "\n")
            .collect();
        let f = field();
        let pts = points_from_text(&f, &text).map_err(py_err)?;
        let ideal = points_ideal(&f, &pts).map_err(py_err)?;
        Ok(Scheme {
            ideal,
            source: format!("{} points", pts.len()),
            replaced_by_saturation: false,
        })
    }

    /// Homogeneous generators in the variables `x0..x{n-1}` (or `x, y, z, w`);
    /// the ideal is replaced by its saturation.
    #[staticmethod]
    fn from_generators(nvars: usize, generators: Vec<String>) -> PyResult<Self> {
        let text = format!("ring: n={nvars}\n{}\n", generators.join("\n"));
        let f = field();
        let given = ideal_from_text(&f, &text).map_err(py_err)?;
        let sat = saturation(&given, None).map_err(py_err)?;
        let replaced = !sat.same_ideal(&given).map_err(py_err)?;
        Ok(Scheme {
            ideal: sat,
            source: "generators".into(),
            replaced_by_saturation: replaced,
        })
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    #[getter]
    fn source(&self) -> &str {
        &self.source
    }

    #[getter]
    fn replaced_by_saturation(&self) -> bool {
        self.replaced_by_saturation
    }

    fn generators(&self) -> Vec<String> {
        self.ideal.generators().iter().map(|g| g.to_string()).collect()
    }

    /// `h(0), ..., h(tmax)` of the coordinate ring.
    #[pyo3(signature = (tmax=10))]
    fn hilbert_function(&self, py: Python<'_>, tmax: usize) -> PyResult<Vec<u64>> {
        let h = py.detach(|| hilbert_function(&self.ideal, tmax)).map_err(py_err)?;
        Ok(h.values)
    }

    /// Lex generic initial ideal through degree `cap`.
    #[pyo3(signature = (cap=8, trials=DEFAULT_TRIALS, seed=0))]
    fn gin(&self, py: Python<'_>, cap: usize, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
        let g = py.detach(|| gin(&self.ideal, trials.max(2), seed, cap)).map_err(py_err)?;
        let summary = GinSummary {
            degree_cap: g.degree_cap,
            generators: g.ideal().generator_strings(),
            borel_certified: g.borel_certified,
            probabilistic: g.probabilistic,
            lex_segment_through_cap: (1..=cap).all(|t| is_lex_segment(g.ideal(), t)),
        };
        to_py(py, &summary)
    }

    /// `AV_{X,j}(m)` for `m = 1..=mmax`; `route` is `direct`, `gin_colon` or `both`.
    #[pyo3(signature = (j=1, mmax=8, route="both", trials=DEFAULT_TRIALS, seed=0))]
    fn av(&self, py: Python<'_>, j: usize, mmax: usize, route: &str, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
        let route: Route = route.parse().map_err(py_err)?;
        let r = py
            .detach(|| av_sequence(&self.ideal, j, mmax, route, trials, seed))
            .map_err(py_err)?;
        to_py(py, &AvSummary::from(&r))
    }

    /// Actual, virtual and expected dimension at `(t, m)` with the verdict.
    #[pyo3(signature = (t, m, trials=DEFAULT_TRIALS, seed=0))]
    fn detect(&self, py: Python<'_>, t: usize, m: usize, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
        let v = py.detach(|| detect(&self.ideal, t, m, trials, seed)).map_err(py_err)?;
        to_py(py, &TripleRow::from(&v))
    }

    #[pyo3(signature = (tmax=8, mmax=8, trials=DEFAULT_TRIALS, seed=0))]
    fn table(&self, py: Python<'_>, tmax: usize, mmax: usize, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
        let tab = py
            .detach(|| persistence_table(&self.ideal, tmax, mmax, trials, seed))
            .map_err(py_err)?;
        to_py(py, &tab)
    }

    /// Certificate or refusal from `AV_{X,0}(alpha)`.
    #[pyo3(signature = (trials=DEFAULT_TRIALS, seed=0))]
    fn certify(&self, py: Python<'_>, trials: usize, seed: u64) -> PyResult<Py<PyAny>> {
        let c = py.detach(|| certify_no_unexpected(&self.ideal, trials, seed)).map_err(py_err)?;
        to_py(py, &c)
    }

    fn __repr__(&self) -> String {
        format!("Scheme({}, nvars={})", self.source, self.ideal.nvars())
    }
}

/// Whether `s` is an O-sequence; returns `(ok, first violating index)`.
#[pyfunction]
fn is_o_sequence(s: Vec<u64>) -> (bool, Option<usize>) {
    let c = avkit::sequences::is_o_sequence(&s);
    (c.ok, c.violation)
}

/// The `d`-binomial expansion of `a` as `(k_i, i)` pairs.
#[pyfunction]
fn macaulay_rep(a: u64, d: u64) -> PyResult<Vec<(u64, u64)>> {
    if d == 0 {
        return Err(PyValueError::new_err("d must be at least 1"));
    }
    Ok(avkit::sequences::macaulay_rep(a, d))
}

/// vdim of degree-`t` forms through a general CI(a, b) of `P^n` with a general point of multiplicity `m`.
#[pyfunction]
fn ci_vdim(a: usize, b: usize, n: usize, t: usize, m: usize) -> i64 {
    ci_vdim_closed_form(a, b, n, t, m)
}

/// A hypersurface with a point of multiplicity `(a-j)(b-j)`, built from two
/// general forms of degrees `a <= b` in `P^n`.
#[pyfunction]
#[pyo3(signature = (a, b, j=1, n=3, seed=0))]
fn ci_witness(py: Python<'_>, a: usize, b: usize, j: usize, n: usize, seed: u64) -> PyResult<Py<PyAny>> {
    let w = sylvester_witness(&field(), a, b, j, n + 1, seed).map_err(py_err)?;
    let out = serde_json::json!({
        "a": a,
        "b": b,
        "j": j,
        "nvars": n + 1,
        "t": w.t,
        "m": w.m,
        "f": w.f.to_string(),
        "g": w.g.to_string(),
        "matrix_det": w.matrix_det.to_string(),
        "witness_form": w.witness_form.to_string(),
        "vdim": ci_vdim_closed_form(a, b, n, w.t, w.m),
    });
    to_py(py, &out)
}

/// Names of the bundled fixtures.
#[pyfunction]
#[pyo3(signature = (deep=false))]
fn fixtures(deep: bool) -> Vec<String> {
    let mut all = manifest::default_fixtures();
    if deep {
        all.extend(manifest::deep_fixtures());
    }
    all.iter().map(|f| f.name()).collect()
}

/// Replays the stored expectations of one fixture.
#[pyfunction]
#[pyo3(signature = (name, n=None, seed=0, trials=DEFAULT_TRIALS))]
fn run_fixture(py: Python<'_>, name: &str, n: Option<usize>, seed: u64, trials: usize) -> PyResult<Py<PyAny>> {
    let f = Fixture::parse(name, n).map_err(py_err)?;
    let settings = CheckSettings {
        construction_seed: seed,
        seed: avkit::seed::derive(seed, "fixtures", 0),
        trials,
        budget: Default::default(),
    };
    let outcome = py.detach(|| manifest::run_fixture(&field(), f, &settings));
    to_py(py, &outcome)
}

#[pymodule]
fn avkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Scheme>()?;
    m.add("RouteMismatchError", m.py().get_type::<RouteMismatchError>())?;
    m.add_function(wrap_pyfunction!(is_o_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(macaulay_rep, m)?)?;
    m.add_function(wrap_pyfunction!(ci_vdim, m)?)?;
    m.add_function(wrap_pyfunction!(ci_witness, m)?)?;
    m.add_function(wrap_pyfunction!(fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(run_fixture, m)?)?;
    Ok(())
}
