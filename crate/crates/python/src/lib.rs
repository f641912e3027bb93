//! Python bindings: `import hodge_spectrum`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hodge_spectrum as core;
use hodge_spectrum::document::{InputDocument, OutputDocument, RationalValue};
use hodge_spectrum::spectrum::BuildingSetChoice;

fn to_py(e: core::Error) -> PyErr {
    if e.is_validation() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

/// A central hyperplane arrangement. Coefficients may be ints or strings
/// such as "3/4".
#[pyclass(frozen, skip_from_py_object, module = "hodge_spectrum")]
#[derive(Clone)]
struct Arrangement {
    inner: core::Arrangement,
}

#[pymethods]
impl Arrangement {
    #[new]
    #[pyo3(signature = (n, normals, mults=None))]
    fn new(n: usize, normals: Vec<Vec<Bound<'_, PyAny>>>, mults: Option<Vec<u32>>) -> PyResult<Self> {
        let mults = mults.unwrap_or_else(|| vec![1; normals.len()]);
        if mults.len() != normals.len() {
            return Err(PyValueError::new_err("mults and normals differ in length"));
        }
        let mut hs = Vec::with_capacity(normals.len());
        for (row, mult) in normals.iter().zip(mults) {
            let coeffs = row
                .iter()
                .map(|x| {
                    let s = x.str()?.to_string();
                    s.parse::<RationalValue>().map(|r| r.0).map_err(to_py)
                })
                .collect::<PyResult<Vec<_>>>()?;
            hs.push(core::Hyperplane::new(coeffs, mult));
        }
        Ok(Arrangement { inner: core::Arrangement::new(n, hs).map_err(to_py)? })
    }

    /// Built-in arrangement, e.g. "example-a" or "lines:5".
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        Ok(Arrangement { inner: core::fixtures::by_name(name).map_err(to_py)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn degree(&self) -> u64 {
        self.inner.degree()
    }

    fn is_essential(&self) -> bool {
        self.inner.is_essential()
    }

    fn to_json(&self) -> String {
        InputDocument::from_arrangement(&self.inner).to_json()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Arrangement(n={}, hyperplanes={}, degree={})", self.inner.n(), self.inner.len(), self.inner.degree())
    }
}

/// Lattice, ring presentation and characteristic classes of one arrangement.
#[pyclass(frozen, module = "hodge_spectrum")]
struct Engine {
    inner: core::SpectrumEngine,
}

#[pymethods]
impl Engine {
    #[new]
    #[pyo3(signature = (arrangement, building_set=None))]
    fn new(arrangement: &Arrangement, building_set: Option<Vec<Vec<usize>>>) -> PyResult<Self> {
        let choice = building_set.map_or(BuildingSetChoice::Maximal, BuildingSetChoice::Closures);
        let inner = core::SpectrumEngine::new(&arrangement.inner, &choice).map_err(to_py)?;
        Ok(Engine { inner })
    }

    /// Nonzero spectral points as `(alpha, mult, k, p)` with `alpha` a string.
    #[pyo3(signature = (jobs=0))]
    fn spectrum(&self, py: Python<'_>, jobs: usize) -> PyResult<Vec<(String, i64, u64, usize)>> {
        let result = py.detach(|| self.inner.spectrum(jobs)).map_err(to_py)?;
        Ok(result.points.iter().map(|p| (p.alpha.to_string(), p.mult, p.k, p.p)).collect())
    }

    /// `n_alpha` for `alpha = k/d + p`.
    fn multiplicity(&self, k: u64, p: usize) -> PyResult<i64> {
        self.inner.multiplicity(k, p).map_err(to_py)
    }

    fn quotient_ranks(&self) -> Vec<usize> {
        self.inner.ideal().quotient_ranks()
    }

    fn euler_characteristic(&self) -> PyResult<i64> {
        self.inner.lattice().euler_projective_complement().map_err(to_py)
    }

    /// `(closure, dim, mobius)` for every flat, ambient space first.
    fn flats(&self) -> Vec<(Vec<usize>, usize, i64)> {
        let lat = self.inner.lattice();
        lat.flats().iter().enumerate().map(|(i, f)| (f.closure.clone(), f.dim, lat.mobius(i))).collect()
    }

    /// `(name, passed, detail)` for every consistency check.
    #[pyo3(signature = (jobs=0))]
    fn verify(&self, py: Python<'_>, jobs: usize) -> PyResult<Vec<(String, bool, String)>> {
        let report = py.detach(|| core::verify::run(&self.inner, jobs)).map_err(to_py)?;
        Ok(report.checks.into_iter().map(|c| (c.name, c.passed, c.detail)).collect())
    }

    fn warnings(&self) -> Vec<String> {
        self.inner.warnings().to_vec()
    }
}

/// Spectrum of an arrangement as `(alpha, mult)` pairs.
#[pyfunction]
fn spectrum(py: Python<'_>, arrangement: &Arrangement) -> PyResult<Vec<(String, i64)>> {
    let result = py
        .detach(|| core::spectrum::spectrum(&arrangement.inner, &core::Options::default()))
        .map_err(to_py)?;
    Ok(result.points.iter().map(|p| (p.alpha.to_string(), p.mult)).collect())
}

/// Runs a JSON input document and returns the JSON output document.
#[pyfunction]
#[pyo3(signature = (document, checks=true))]
fn compute_json(py: Python<'_>, document: &str, checks: bool) -> PyResult<String> {
    py.detach(|| {
        let doc = InputDocument::parse(document)?;
        let engine = core::SpectrumEngine::new(&doc.to_arrangement()?, &doc.building_set.to_choice()?)?;
        let result = engine.spectrum(0)?;
        let report = if checks { Some(core::verify::run(&engine, 0)?) } else { None };
        Ok(OutputDocument::new(&result, report).to_json())
    })
    .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "hodge_spectrum")]
fn hodge_spectrum_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Arrangement>()?;
    m.add_class::<Engine>()?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(compute_json, m)?)?;
    m.add("FIXTURES", core::fixtures::NAMES.to_vec())?;
    Ok(())
}
