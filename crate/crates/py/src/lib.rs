//! Python bindings. Couplings are plain floats; `float("inf")` selects the
//! impenetrable branch. Invalid input raises ValueError, numerical
//! breakdowns raise RuntimeError.

use modent::fock::{self, TwoModeFockState};
use modent::modes::{self, SpatialMode, Verdict};
use modent::sprdm::SprdmEvaluator;
use modent::sweep;
use modent::twoboson::{self, Coupling};
use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: modent::Error) -> PyErr {
    if e.is_config() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn coupling(g: f64) -> PyResult<Coupling> {
    if g.is_nan() {
        return Err(PyValueError::new_err("coupling must not be NaN"));
    }
    if g.is_infinite() {
        if g < 0.0 {
            return Err(PyValueError::new_err("coupling must be nonnegative"));
        }
        return Ok(Coupling::Infinite);
    }
    Ok(Coupling::Finite(g))
}

/// Even relative-motion levels as (index, energy) pairs.
#[pyfunction]
#[pyo3(signature = (g, count = 5))]
fn relative_energies(g: f64, count: usize) -> PyResult<Vec<(usize, f64)>> {
    let pairs = twoboson::solve_relative_energies(coupling(g)?, count)
        .map_err(|e| to_py(e.into()))?;
    Ok(pairs.iter().map(|p| (p.nu, p.energy)).collect())
}

/// One-body density kernel of the trapped pair, pure or thermal.
#[pyclass(frozen)]
struct Kernel {
    inner: SprdmEvaluator,
}

#[pymethods]
impl Kernel {
    /// Zero-temperature ground-state kernel.
    #[staticmethod]
    fn ground(g: f64) -> PyResult<Kernel> {
        let inner = SprdmEvaluator::ground(coupling(g)?).map_err(|e| to_py(e.into()))?;
        Ok(Kernel { inner })
    }

    /// Canonical-ensemble kernel; tail_tol bounds the truncated weight.
    #[staticmethod]
    #[pyo3(signature = (g, t, tail_tol = 1e-8))]
    fn thermal(g: f64, t: f64, tail_tol: f64) -> PyResult<Kernel> {
        let inner = SprdmEvaluator::thermal(coupling(g)?, t, tail_tol)
            .map_err(|e| to_py(e.into()))?;
        Ok(Kernel { inner })
    }

    fn eval(&self, x: f64, xp: f64) -> PyResult<f64> {
        self.inner.eval(x, xp).map_err(|e| to_py(e.into()))
    }

    fn trace(&self) -> PyResult<f64> {
        self.inner.trace().map_err(|e| to_py(e.into()))
    }

    /// Kernel values on points x points, row-major.
    fn grid(&self, points: Vec<f64>) -> PyResult<Vec<Vec<f64>>> {
        let m = self.inner.grid(&points).map_err(|e| to_py(e.into()))?;
        Ok((0..points.len())
            .map(|i| (0..points.len()).map(|j| m[(i, j)]).collect())
            .collect())
    }

    /// Radius beyond which the kernel is numerically zero.
    #[getter]
    fn trace_radius(&self) -> f64 {
        self.inner.trace_radius()
    }

    /// Product eigenstates kept by the thermal truncation (1 when pure).
    #[getter]
    fn included_states(&self) -> usize {
        self.inner.ensemble().map(|e| e.cutoff.included).unwrap_or(1)
    }

    fn __repr__(&self) -> String {
        match self.inner.ensemble() {
            Some(e) => format!(
                "Kernel(g={}, T={}, states={})",
                self.inner.coupling(),
                e.temperature,
                e.cutoff.included
            ),
            None => format!("Kernel(g={}, pure)", self.inner.coupling()),
        }
    }
}

/// Spatial region with a normalized weight profile.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Mode {
    inner: SpatialMode,
}

#[pymethods]
impl Mode {
    /// Flat profile 1/sqrt(length); infinite ends are truncated at the
    /// kernel support radius when used.
    #[staticmethod]
    fn uniform(lo: f64, hi: f64) -> PyResult<Mode> {
        let inner = SpatialMode::uniform(lo, hi).map_err(|e| to_py(e.into()))?;
        Ok(Mode { inner })
    }

    /// Gaussian profile restricted to [lo, hi] and renormalized.
    #[staticmethod]
    fn gaussian(lo: f64, hi: f64, center: f64, width: f64) -> PyResult<Mode> {
        let inner = SpatialMode::new(
            lo,
            hi,
            modes::Weight::GaussianNormalized { center, width },
        )
        .map_err(|e| to_py(e.into()))?;
        Ok(Mode { inner })
    }

    #[getter]
    fn interval(&self) -> (f64, f64) {
        self.inner.interval()
    }

    fn __repr__(&self) -> String {
        let (lo, hi) = self.inner.interval();
        format!("Mode([{lo}, {hi}])")
    }
}

/// Mode-coherence witness tr[psi_a^dag psi_b rho]; nonzero certifies
/// entanglement between disjoint modes.
#[pyfunction]
#[pyo3(signature = (kernel, a, b, tol = 1e-8))]
fn epsilon(kernel: &Kernel, a: &Mode, b: &Mode, tol: f64) -> PyResult<Complex64> {
    let r = modes::epsilon_pair_detailed(&a.inner, &b.inner, &kernel.inner, tol)
        .map_err(|e| to_py(e.into()))?;
    Ok(r.value)
}

/// Mode-mode correlator matrix over uniform modes on the given intervals.
#[pyfunction]
#[pyo3(signature = (kernel, intervals, tol = 1e-8))]
fn correlator(
    kernel: &Kernel,
    intervals: Vec<(f64, f64)>,
    tol: f64,
) -> PyResult<Vec<Vec<Complex64>>> {
    let set = interval_set(&intervals)?;
    let corr = modes::correlator_matrix_with_tol(&set, &kernel.inner, tol)
        .map_err(|e| to_py(e.into()))?;
    let n = corr.dim();
    Ok((0..n)
        .map(|i| (0..n).map(|j| corr.entry(i, j)).collect())
        .collect())
}

fn interval_set(intervals: &[(f64, f64)]) -> PyResult<modes::ModeSet> {
    let list = intervals
        .iter()
        .map(|&(lo, hi)| SpatialMode::uniform(lo, hi))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| to_py(e.into()))?;
    modes::ModeSet::new(list).map_err(|e| to_py(e.into()))
}

/// Check every bipartition of uniform modes on the intervals. Returns
/// (fully_entangled, outcomes) with one (block_a, block_b, sigma_max,
/// margin) tuple per bipartition.
#[pyfunction]
#[pyo3(signature = (kernel, intervals, threshold = 1e-6, tol = 1e-8))]
fn classify(
    kernel: &Kernel,
    intervals: Vec<(f64, f64)>,
    threshold: f64,
    tol: f64,
) -> PyResult<(bool, Vec<(Vec<usize>, Vec<usize>, f64, f64)>)> {
    let set = interval_set(&intervals)?;
    let report = modes::classify_separability_with_tol(&set, &kernel.inner, threshold, tol)
        .map_err(|e| to_py(e.into()))?;
    let outcomes = report
        .outcomes
        .iter()
        .map(|o| (o.a.clone(), o.b.clone(), o.value, o.margin))
        .collect();
    Ok((report.verdict == Verdict::FullyEntangled, outcomes))
}

fn fock_err(e: fock::FockError) -> PyErr {
    match e {
        fock::FockError::IdentityViolation { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Mean output counts (mode c, mode d) after a 50:50 beamsplitter with a
/// phase on the second input, for the pure state sum_n amps[n] |n, N-n>.
#[pyfunction]
#[pyo3(signature = (amplitudes, phase = 0.0))]
fn beamsplitter_counts(amplitudes: Vec<Complex64>, phase: f64) -> PyResult<(f64, f64)> {
    let state = pure_state(amplitudes)?;
    Ok(fock::beamsplitter_counts(&state, phase))
}

/// Verify |<n_c> - <n_d>| = 2|<a^dag b>| for a pure two-mode state.
/// Returns (eps, predicted, at_optimal_phase, max_on_grid).
#[pyfunction]
fn verify_count_identity(
    amplitudes: Vec<Complex64>,
) -> PyResult<(Complex64, f64, f64, f64)> {
    let state = pure_state(amplitudes)?;
    let r = fock::verify_identity(&state).map_err(fock_err)?;
    Ok((r.eps, r.predicted, r.at_optimal_phase, r.max_on_grid))
}

fn pure_state(amplitudes: Vec<Complex64>) -> PyResult<TwoModeFockState> {
    if amplitudes.is_empty() {
        return Err(PyValueError::new_err("need at least one amplitude"));
    }
    TwoModeFockState::pure(amplitudes.len() - 1, amplitudes).map_err(fock_err)
}

/// Full deterministic oracle batch; returns the text report.
#[pyfunction]
#[pyo3(signature = (trials = 200, n_max = 4, seed = 1))]
fn oracle_report(trials: usize, n_max: usize, seed: u64) -> PyResult<String> {
    let report = sweep::oracle_run(trials, n_max, seed).map_err(fock_err)?;
    Ok(sweep::oracle_text(&report))
}

#[pymodule]
fn modent_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Kernel>()?;
    m.add_class::<Mode>()?;
    m.add_function(wrap_pyfunction!(relative_energies, m)?)?;
    m.add_function(wrap_pyfunction!(epsilon, m)?)?;
    m.add_function(wrap_pyfunction!(correlator, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(beamsplitter_counts, m)?)?;
    m.add_function(wrap_pyfunction!(verify_count_identity, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_report, m)?)?;
    Ok(())
}
