//! Exact eigenstates of two bosons in a harmonic trap with a contact
//! interaction, in center-of-mass / relative coordinates
//! X = (x1 + x2)/sqrt(2), x = (x1 - x2)/sqrt(2).
//!
//! The center of mass is a plain oscillator. Even relative levels E solve
//! 2 Gamma(3/4 - E/2) / Gamma(1/4 - E/2) = -g, one root per interval
//! (1/2 + 2 nu, 3/2 + 2 nu); odd levels are untouched by the contact term
//! and never mix in for bosons. The relative eigenfunction is
//! psi(x) = U(1/4 - E/2, 1/2, x^2) exp(-x^2/2) extended evenly, which
//! carries the cusp psi'(0+)/psi(0) = g.

use crate::cheb::PiecewiseCheb;
use crate::quad::{self, QuadError};
use crate::rootfind::{self, RootError};
use crate::specfun::{self, SpecFunError};
use std::cell::RefCell;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TwoBosonError {
    #[error("coupling must be nonnegative, got {g}")]
    NegativeCoupling { g: f64 },
    #[error("cannot parse coupling strength from '{0}'")]
    ParseCoupling(String),
    #[error("energy solve residual {residual:.3e} exceeds {tol:.3e} at E = {energy}")]
    Residual {
        energy: f64,
        residual: f64,
        tol: f64,
    },
    #[error("confinement-induced resonance: a_perp = 1.4603 * a_3d = {a_perp}")]
    ConfinementResonance { a_perp: f64 },
    #[error("transverse oscillator length must be positive, got {0}")]
    BadTransverseWidth(f64),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Quad(#[from] QuadError),
}

/// Contact-interaction strength in oscillator units; `Infinite` is the
/// fermionized (Tonks-Girardeau) limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coupling {
    Finite(f64),
    Infinite,
}

impl Coupling {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Coupling::Infinite)
    }

    /// Finite value if any; used by reporting code.
    pub fn finite(&self) -> Option<f64> {
        match self {
            Coupling::Finite(g) => Some(*g),
            Coupling::Infinite => None,
        }
    }

    pub fn validated(self) -> Result<Coupling, TwoBosonError> {
        match self {
            Coupling::Finite(g) if !(g >= 0.0) => Err(TwoBosonError::NegativeCoupling { g }),
            other => Ok(other),
        }
    }
}

impl FromStr for Coupling {
    type Err = TwoBosonError;

    fn from_str(s: &str) -> Result<Coupling, TwoBosonError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinite") {
            return Ok(Coupling::Infinite);
        }
        match t.parse::<f64>() {
            Ok(g) if g >= 0.0 && g.is_finite() => Ok(Coupling::Finite(g)),
            Ok(g) if g.is_infinite() && g > 0.0 => Ok(Coupling::Infinite),
            Ok(g) => Err(TwoBosonError::NegativeCoupling { g }),
            Err(_) => Err(TwoBosonError::ParseCoupling(t.to_string())),
        }
    }
}

impl std::fmt::Display for Coupling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coupling::Finite(g) => write!(f, "{g}"),
            Coupling::Infinite => write!(f, "inf"),
        }
    }
}

/// One even relative level: index nu and its energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    pub nu: usize,
    pub energy: f64,
}

const ENERGY_RESIDUAL_TOL: f64 = 1e-9;

/// The level equation evaluated in terms of the distance `delta` below the
/// upper bracket edge: E = 3/2 + 2 nu - delta, delta in (0, 1).
///
/// Written as 2 * Gamma(1 + d/2) / Gamma(1/2 + d/2) times an exact pole-shift
/// product, so no catastrophic cancellation occurs even when delta is 1e-12
/// of the way from the pole. Solving in delta keeps the residual near
/// g * machine-epsilon for arbitrarily strong coupling, where solving in E
/// would lose g^2-amplified digits to the representation of E itself.
fn ratio_at_delta(nu: usize, delta: f64) -> f64 {
    let h = 0.5 * delta;
    let mut prod = 1.0;
    for k in 0..=nu {
        let kf = k as f64;
        prod *= (h - 0.5 - kf) / (h - kf);
    }
    // Gamma(1 + h) / Gamma(1/2 + h), both arguments inside [1/2, 3/2]
    let inv_num = specfun::rgamma(0.5 + h);
    let inv_den = specfun::rgamma(1.0 + h);
    2.0 * prod * inv_num / inv_den
}

fn solve_delta(g: f64, nu: usize) -> Result<f64, TwoBosonError> {
    let f = |d: f64| ratio_at_delta(nu, d) + g;
    // pull the bracket edges toward the poles until the signs straddle
    let mut hi_off = 1e-9;
    while f(1.0 - hi_off) <= 0.0 && hi_off > 1e-15 {
        hi_off *= 0.1;
    }
    let mut lo = 1e-9;
    while f(lo) >= 0.0 && lo > 1e-250 {
        lo *= 0.1;
    }
    let delta = rootfind::solve(f, lo, 1.0 - hi_off, 0.0)?;
    let residual = f(delta).abs();
    let tol = ENERGY_RESIDUAL_TOL * g.max(1.0);
    if residual > tol {
        return Err(TwoBosonError::Residual {
            energy: 1.5 + 2.0 * nu as f64 - delta,
            residual,
            tol,
        });
    }
    Ok(delta)
}

/// Energy of the nu-th even relative level.
pub fn relative_energy(coupling: Coupling, nu: usize) -> Result<f64, TwoBosonError> {
    match coupling.validated()? {
        Coupling::Infinite => Ok(1.5 + 2.0 * nu as f64),
        Coupling::Finite(g) if g == 0.0 => Ok(0.5 + 2.0 * nu as f64),
        Coupling::Finite(g) => {
            let delta = solve_delta(g, nu)?;
            Ok(1.5 + 2.0 * nu as f64 - delta)
        }
    }
}

/// First `count` even relative levels, lowest first.
pub fn solve_relative_energies(
    coupling: Coupling,
    count: usize,
) -> Result<Vec<EigenPair>, TwoBosonError> {
    (0..count)
        .map(|nu| {
            relative_energy(coupling, nu).map(|energy| EigenPair { nu, energy })
        })
        .collect()
}

/// Defect of the level equation at (nu, energy), scaled by max(1, g): how
/// far the Gamma-ratio side is from -g. The fermionized branch checks the
/// reciprocal relation, which its roots drive to zero instead.
pub fn energy_residual(coupling: Coupling, nu: usize, energy: f64) -> Result<f64, TwoBosonError> {
    let delta = 1.5 + 2.0 * nu as f64 - energy;
    match coupling.validated()? {
        Coupling::Infinite => Ok((1.0 / ratio_at_delta(nu, delta)).abs()),
        Coupling::Finite(g) => Ok((ratio_at_delta(nu, delta) + g).abs() / g.max(1.0)),
    }
}

/// Spatial truncation radius for a relative level: classical turning point
/// plus six oscillator widths, beyond which psi^2 is below 1e-16 of its peak.
pub fn x_max(energy: f64) -> f64 {
    (2.0 * energy.max(0.0)).sqrt() + 6.0
}

/// Unnormalized relative eigenfunction at x >= 0 straight from the confluent
/// representation; the slow reference route.
pub fn raw_relative_psi(energy: f64, x: f64) -> Result<f64, SpecFunError> {
    let a = 0.25 - 0.5 * energy;
    Ok(specfun::tricomi_u(a, 0.5, x * x)? * (-0.5 * x * x).exp())
}

/// One even relative eigenstate with a fast piecewise-Chebyshev evaluator and
/// its L2 normalization over the whole line.
#[derive(Debug, Clone)]
pub struct RelativeState {
    pub nu: usize,
    pub energy: f64,
    pub x_max: f64,
    /// Multiplies the interpolated profile to make the even extension
    /// unit-norm on the line.
    pub norm: f64,
    interp: PiecewiseCheb,
}

impl RelativeState {
    /// Build the state for a level of known energy.
    pub fn from_energy(nu: usize, energy: f64) -> Result<RelativeState, TwoBosonError> {
        let xm = x_max(energy);
        let failure: RefCell<Option<SpecFunError>> = RefCell::new(None);
        let interp = PiecewiseCheb::build(
            |x| match raw_relative_psi(energy, x) {
                Ok(v) => v,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    f64::NAN
                }
            },
            0.0,
            xm,
            3e-12,
        );
        if let Some(e) = failure.into_inner() {
            return Err(e.into());
        }
        // scale-aware tolerance: unnormalized amplitudes span many orders of
        // magnitude across the spectrum
        let mut peak = 0.0f64;
        for i in 0..=400 {
            peak = peak.max(interp.eval(xm * i as f64 / 400.0).abs());
        }
        let tol = (peak * peak * 1e-13).max(1e-280);
        let half = quad::integrate(|x| interp.eval(x).powi(2), 0.0, xm, tol)?;
        let norm = 1.0 / (2.0 * half.value).sqrt();
        Ok(RelativeState {
            nu,
            energy,
            x_max: xm,
            norm,
            interp,
        })
    }

    /// Solve the level equation and build the state.
    pub fn build(coupling: Coupling, nu: usize) -> Result<RelativeState, TwoBosonError> {
        let energy = relative_energy(coupling, nu)?;
        RelativeState::from_energy(nu, energy)
    }

    /// Normalized eigenfunction; even in x, zero beyond the truncation radius.
    pub fn eval(&self, x: f64) -> f64 {
        let r = x.abs();
        if r > self.x_max {
            return 0.0;
        }
        self.norm * self.interp.eval(r)
    }

    /// Unnormalized profile from the interpolant (x >= 0); for accuracy
    /// cross-checks against `raw_relative_psi`.
    pub fn eval_unnormalized(&self, x: f64) -> f64 {
        self.interp.eval(x)
    }
}

/// Solve-then-build for the lowest `count` relative states.
pub fn relative_wavefunctions(
    coupling: Coupling,
    count: usize,
) -> Result<Vec<RelativeState>, TwoBosonError> {
    solve_relative_energies(coupling, count)?
        .into_iter()
        .map(|p| RelativeState::from_energy(p.nu, p.energy))
        .collect()
}

/// Normalization constant for the even extension of the unnormalized profile
/// at the given relative energy.
pub fn normalize_relative(energy: f64) -> Result<f64, TwoBosonError> {
    Ok(RelativeState::from_energy(0, energy)?.norm)
}

/// Center-of-mass eigenfunction: the n-th oscillator state at X.
pub fn com_wavefunction(n: usize, x: f64) -> Result<f64, SpecFunError> {
    specfun::hermite_function(n, x)
}

/// Full two-body eigenfunction Psi(x1, x2) = phi_n(X) psi_rel(x),
/// X = (x1 + x2)/sqrt(2), x = (x1 - x2)/sqrt(2) (unit Jacobian).
pub fn two_body_psi(
    rel: &RelativeState,
    n_com: usize,
    x1: f64,
    x2: f64,
) -> Result<f64, TwoBosonError> {
    let cx = (x1 + x2) / std::f64::consts::SQRT_2;
    let rx = (x1 - x2) / std::f64::consts::SQRT_2;
    Ok(com_wavefunction(n_com, cx)? * rel.eval(rx))
}

/// Effective 1D coupling from the 3D scattering length and the transverse
/// confinement length (hbar = m = 1):
/// g_1D = a_3d / (a_perp * (a_perp - C a_3d)), C = 1.4603.
pub fn g1d_from_scattering(a_3d: f64, a_perp: f64) -> Result<f64, TwoBosonError> {
    const C: f64 = 1.4603;
    if !(a_perp > 0.0) {
        return Err(TwoBosonError::BadTransverseWidth(a_perp));
    }
    let denom = a_perp - C * a_3d;
    if denom.abs() <= 1e-12 * a_perp {
        return Err(TwoBosonError::ConfinementResonance { a_perp });
    }
    Ok(a_3d / (a_perp * denom))
}
