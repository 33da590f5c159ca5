//! Second-quantized check of the detection scheme on two discrete modes.
//!
//! Everything here is exact ladder-operator algebra on the fixed-N basis
//! |n, N-n>. The beamsplitter output counts are obtained by expanding
//! (c^dag +/- d^dag) powers, not from the number-difference identity, so the
//! identity Delta_N = 2|<a^dag b>| can be verified rather than assumed.

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FockError {
    #[error("invalid distribution: {0}")]
    BadDistribution(String),
    #[error("total particle number {n} exceeds the supported cap {max}")]
    CapExceeded { n: usize, max: usize },
    #[error(
        "count identity violated: phase-swept number difference {count_side} \
         vs 2|eps| = {eps_side} (diff {diff:.3e})"
    )]
    IdentityViolation {
        count_side: f64,
        eps_side: f64,
        diff: f64,
    },
}

/// Basis dimension is N+1, so this cap is generous for an oracle.
pub const MAX_TOTAL_N: usize = 12;

const NORM_TOL: f64 = 1e-12;

/// State of two bosonic modes at fixed total particle number: a single
/// amplitude vector over |n, N-n>, or a probabilistic mixture of such.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeFockState {
    n_total: usize,
    branches: Vec<(f64, Vec<Complex64>)>,
}

fn check_amplitudes(n_total: usize, amps: &[Complex64]) -> Result<(), FockError> {
    if amps.len() != n_total + 1 {
        return Err(FockError::BadDistribution(format!(
            "amplitude vector has length {}, expected {}",
            amps.len(),
            n_total + 1
        )));
    }
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(FockError::BadDistribution(format!(
            "amplitude norm^2 = {norm}, expected 1"
        )));
    }
    Ok(())
}

impl TwoModeFockState {
    pub fn pure(n_total: usize, amplitudes: Vec<Complex64>) -> Result<Self, FockError> {
        if n_total > MAX_TOTAL_N {
            return Err(FockError::CapExceeded {
                n: n_total,
                max: MAX_TOTAL_N,
            });
        }
        check_amplitudes(n_total, &amplitudes)?;
        Ok(TwoModeFockState {
            n_total,
            branches: vec![(1.0, amplitudes)],
        })
    }

    pub fn mixture(
        n_total: usize,
        branches: Vec<(f64, Vec<Complex64>)>,
    ) -> Result<Self, FockError> {
        if n_total > MAX_TOTAL_N {
            return Err(FockError::CapExceeded {
                n: n_total,
                max: MAX_TOTAL_N,
            });
        }
        if branches.is_empty() {
            return Err(FockError::BadDistribution("mixture has no branches".into()));
        }
        let mut total = 0.0;
        for (p, amps) in &branches {
            if !(*p >= 0.0) || !p.is_finite() {
                return Err(FockError::BadDistribution(format!(
                    "branch probability {p} is not a probability"
                )));
            }
            check_amplitudes(n_total, amps)?;
            total += p;
        }
        if (total - 1.0).abs() > NORM_TOL {
            return Err(FockError::BadDistribution(format!(
                "branch probabilities sum to {total}, expected 1"
            )));
        }
        Ok(TwoModeFockState { n_total, branches })
    }

    /// Number state |n, N-n>.
    pub fn number_state(n_total: usize, n_a: usize) -> Result<Self, FockError> {
        if n_a > n_total {
            return Err(FockError::BadDistribution(format!(
                "cannot put {n_a} of {n_total} particles in one mode"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); n_total + 1];
        amps[n_a] = Complex64::new(1.0, 0.0);
        TwoModeFockState::pure(n_total, amps)
    }

    pub fn n_total(&self) -> usize {
        self.n_total
    }

    pub fn branches(&self) -> &[(f64, Vec<Complex64>)] {
        &self.branches
    }
}

/// The diagonal mixture sum_n p_n |n, N-n><n, N-n|: one number state per
/// nonzero probability, no cross coherence anywhere.
pub fn separable_state(n_total: usize, p: &[f64]) -> Result<TwoModeFockState, FockError> {
    if n_total > MAX_TOTAL_N {
        return Err(FockError::CapExceeded {
            n: n_total,
            max: MAX_TOTAL_N,
        });
    }
    if p.len() != n_total + 1 {
        return Err(FockError::BadDistribution(format!(
            "distribution has length {}, expected {}",
            p.len(),
            n_total + 1
        )));
    }
    if p.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
        return Err(FockError::BadDistribution(
            "probabilities must be nonnegative and finite".into(),
        ));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > NORM_TOL {
        return Err(FockError::BadDistribution(format!(
            "probabilities sum to {total}, expected 1"
        )));
    }
    let mut branches = Vec::new();
    for (n, &pn) in p.iter().enumerate() {
        if pn > 0.0 {
            let mut amps = vec![Complex64::new(0.0, 0.0); n_total + 1];
            amps[n] = Complex64::new(1.0, 0.0);
            branches.push((pn, amps));
        }
    }
    TwoModeFockState::mixture(n_total, branches)
}

fn pure_eps(n_total: usize, amps: &[Complex64]) -> Complex64 {
    // a^dag b |n, m> = sqrt((n+1) m) |n+1, m-1>
    let mut acc = Complex64::new(0.0, 0.0);
    for n in 0..n_total {
        let m = (n_total - n) as f64;
        acc += amps[n + 1].conj() * amps[n] * ((n as f64 + 1.0) * m).sqrt();
    }
    acc
}

/// The two-mode witness <a^dag b>, taken branch by branch.
pub fn eps_two_mode(state: &TwoModeFockState) -> Complex64 {
    state
        .branches
        .iter()
        .map(|(p, amps)| pure_eps(state.n_total, amps) * *p)
        .sum()
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|x| x as f64).product()
}

fn binomial(n: usize, k: usize) -> f64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Output amplitudes of the basis state |n, m>_ab after the 50:50 mixing
/// a^dag = (c^dag + d^dag)/sqrt2, b^dag = (c^dag - d^dag)/sqrt2, indexed by
/// the c-mode count.
fn beamsplitter_basis(n: usize, m: usize) -> Vec<f64> {
    let total = n + m;
    let pref = 2f64.powf(-0.5 * total as f64) / (factorial(n) * factorial(m)).sqrt();
    let mut out = vec![0.0; total + 1];
    for i in 0..=n {
        for j in 0..=m {
            let p = i + j;
            let sign = if (m - j) % 2 == 1 { -1.0 } else { 1.0 };
            out[p] += pref
                * binomial(n, i)
                * binomial(m, j)
                * sign
                * (factorial(p) * factorial(total - p)).sqrt();
        }
    }
    out
}

/// Mean counts behind the splitter. The optional phase acts on mode b
/// before mixing (|n, m> picks up e^{i phi m}); the counts come from the
/// transformed amplitude vector, squared and weighted by occupation.
pub fn beamsplitter_counts(state: &TwoModeFockState, phase: f64) -> (f64, f64) {
    let nn = state.n_total;
    let mut mean_c = 0.0;
    let mut mean_d = 0.0;
    for (prob, amps) in &state.branches {
        let mut out = vec![Complex64::new(0.0, 0.0); nn + 1];
        for (n, &a) in amps.iter().enumerate() {
            if a == Complex64::new(0.0, 0.0) {
                continue;
            }
            let m = nn - n;
            let rotated = a * Complex64::from_polar(1.0, phase * m as f64);
            for (p, &coef) in beamsplitter_basis(n, m).iter().enumerate() {
                out[p] += rotated * coef;
            }
        }
        for (p, o) in out.iter().enumerate() {
            let w = prob * o.norm_sqr();
            mean_c += w * p as f64;
            mean_d += w * (nn - p) as f64;
        }
    }
    (mean_c, mean_d)
}

/// Outcome of sweeping the pre-mixing phase and comparing the largest count
/// difference against the witness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityReport {
    pub n_total: usize,
    pub eps: Complex64,
    /// 2|eps|, the predicted maximal count difference.
    pub predicted: f64,
    /// Count difference at the analytically optimal phase -arg(eps).
    pub at_optimal_phase: f64,
    /// Largest count difference seen on the phase grid.
    pub max_on_grid: f64,
    pub optimal_phase: f64,
}

const PHASE_GRID: usize = 256;
const IDENTITY_TOL: f64 = 1e-12;

/// Sweep the phase, confirm the count difference never beats 2|eps| and
/// attains it at phi = -arg(eps).
pub fn verify_identity(state: &TwoModeFockState) -> Result<IdentityReport, FockError> {
    let eps = eps_two_mode(state);
    let predicted = 2.0 * eps.norm();
    let optimal_phase = -eps.arg();
    let delta = |phi: f64| {
        let (c, d) = beamsplitter_counts(state, phi);
        (c - d).abs()
    };
    let at_optimal_phase = delta(optimal_phase);
    let mut max_on_grid = 0.0f64;
    for k in 0..PHASE_GRID {
        let phi = 2.0 * std::f64::consts::PI * k as f64 / PHASE_GRID as f64;
        max_on_grid = max_on_grid.max(delta(phi));
    }
    let attained = (at_optimal_phase - predicted).abs();
    let bounded = max_on_grid - predicted;
    // scale the absolute tolerance with N: counts are O(N) sums
    let tol = IDENTITY_TOL * (1.0 + state.n_total as f64);
    if attained > tol || bounded > tol {
        return Err(FockError::IdentityViolation {
            count_side: at_optimal_phase.max(max_on_grid),
            eps_side: predicted,
            diff: attained.max(bounded),
        });
    }
    Ok(IdentityReport {
        n_total: state.n_total,
        eps,
        predicted,
        at_optimal_phase,
        max_on_grid,
        optimal_phase,
    })
}
