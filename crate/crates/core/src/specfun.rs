//! Special-function kernels: signed log-Gamma, the Gamma-ratio function whose
//! roots are the relative energies, physicists' Hermite polynomials, and the
//! Tricomi confluent hypergeometric U.

mod ddgamma;
mod tables;
mod tricomi;

pub(crate) use ddgamma::rgamma_dd;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecFunError {
    #[error("Gamma pole at x = {0}")]
    Pole(f64),
    #[error("{what} (got {value})")]
    Domain { what: &'static str, value: f64 },
    #[error("Hermite order {n} exceeds the configured maximum {max}")]
    OrderExceeded { n: usize, max: usize },
    #[error("tricomi_u supports b = 1/2 and b = 3/2 only (got b = {b})")]
    UnsupportedB { b: f64 },
    #[error("tricomi_u could not reach 1e-9 at (a, b, z) = ({a}, {b}, {z})")]
    Convergence { a: f64, b: f64, z: f64 },
}

/// ln|Gamma(x)| with the sign of Gamma(x) carried separately, so callers can
/// form ratios of Gammas near poles without overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogGamma {
    pub ln_abs: f64,
    /// +1.0 or -1.0
    pub sign: f64,
}

impl SignedLogGamma {
    /// Direct value; overflows to +/-inf for large ln_abs.
    pub fn gamma(&self) -> f64 {
        self.sign * self.ln_abs.exp()
    }
}

/// Largest Hermite order accepted by `hermite` and `hermite_function`.
pub const MAX_HERMITE_ORDER: usize = 200;

/// sin(pi x) with exact range reduction; good to a few ulp for |x| < 2^50.
fn sinpi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n; // exact
    let s = (std::f64::consts::PI * r).sin();
    if (n as i64) % 2 != 0 {
        -s
    } else {
        s
    }
}

/// Stirling series for ln Gamma(x), x >= 20: error below 1e-21 there.
fn stirling_ln_gamma(x: f64) -> f64 {
    // B_2k / (2k (2k-1)) for 2k = 2..16
    const C: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360360.0,
        1.0 / 156.0,
        -3617.0 / 122400.0,
    ];
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in C {
        corr += c * p;
        p *= inv2;
    }
    const HALF_LN_2PI: f64 = 0.918938533204672741780329736406;
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + corr
}

/// ln|Gamma(x)| plus the sign of Gamma. Full accuracy for |x| <= 50 per the
/// module contract; remains usable (Stirling tail) out to x ~ 300 for the
/// Hermite normalization constants.
pub fn log_gamma(x: f64) -> Result<SignedLogGamma, SpecFunError> {
    if x <= 0.0 && x == x.floor() {
        return Err(SpecFunError::Pole(x));
    }
    if x >= 20.0 {
        return Ok(SignedLogGamma {
            ln_abs: stirling_ln_gamma(x),
            sign: 1.0,
        });
    }
    if x > 0.0 {
        // the double-double reciprocal-Gamma walk is exact to ~1e-30; the
        // f64 log keeps everything it can hold
        let r = rgamma_dd(x);
        return Ok(SignedLogGamma {
            ln_abs: -(r.to_f64().ln()),
            sign: 1.0,
        });
    }
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    let s = sinpi(x);
    let y = 1.0 - x;
    let ln_y = if y >= 20.0 {
        stirling_ln_gamma(y)
    } else {
        -(rgamma_dd(y).to_f64().ln())
    };
    Ok(SignedLogGamma {
        ln_abs: std::f64::consts::PI.ln() - s.abs().ln() - ln_y,
        sign: if s > 0.0 { 1.0 } else { -1.0 },
    })
}

/// The transcendental function 2 Gamma(-E/2 + 3/4) / Gamma(-E/2 + 1/4) whose
/// level sets define the relative energies: f(E) = -g.
///
/// Zeros sit exactly at E = 1/2 + 2k (denominator poles), poles exactly at
/// E = 3/2 + 2k (numerator poles). Both are detected by index arithmetic on
/// the Gamma arguments, never by magnitude checks, because root bracketing
/// leans on their exact locations.
pub fn gamma_energy_ratio(e: f64) -> Result<f64, SpecFunError> {
    let num_arg = 0.75 - 0.5 * e;
    let den_arg = 0.25 - 0.5 * e;
    if num_arg <= 0.0 && num_arg == num_arg.floor() {
        return Err(SpecFunError::Pole(e));
    }
    if den_arg <= 0.0 && den_arg == den_arg.floor() {
        return Ok(0.0);
    }
    let n = log_gamma(num_arg)?;
    let d = log_gamma(den_arg)?;
    Ok(2.0 * n.sign * d.sign * (n.ln_abs - d.ln_abs).exp())
}

/// Physicists' Hermite polynomial by the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.
pub fn hermite(n: usize, x: f64) -> Result<f64, SpecFunError> {
    if n > MAX_HERMITE_ORDER {
        return Err(SpecFunError::OrderExceeded {
            n,
            max: MAX_HERMITE_ORDER,
        });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut hm = 1.0;
    let mut h = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * h - 2.0 * (k as f64) * hm;
        hm = h;
        h = next;
    }
    Ok(h)
}

/// Normalized harmonic-oscillator eigenfunction
/// phi_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)), evaluated by the
/// recurrence on the normalized functions themselves so nothing overflows.
pub fn hermite_function(n: usize, x: f64) -> Result<f64, SpecFunError> {
    if n > MAX_HERMITE_ORDER {
        return Err(SpecFunError::OrderExceeded {
            n,
            max: MAX_HERMITE_ORDER,
        });
    }
    let mut cur = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    if n == 0 {
        return Ok(cur);
    }
    let mut prev = 0.0;
    for k in 0..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Fill `out[k] = phi_k(x)` for k = 0..out.len(). Shared by the kernel loops
/// that need every center-of-mass order at once.
pub(crate) fn hermite_function_row(x: f64, out: &mut [f64]) {
    if out.is_empty() {
        return;
    }
    let g = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    out[0] = g;
    if out.len() == 1 {
        return;
    }
    out[1] = std::f64::consts::SQRT_2 * x * g;
    for k in 1..out.len() - 1 {
        let kf = k as f64;
        out[k + 1] = (2.0 / (kf + 1.0)).sqrt() * x * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
    }
}

/// Tricomi confluent hypergeometric U(a, b, z); see the `tricomi` submodule
/// for the evaluation strategy. Relative accuracy 1e-9 or an error.
pub fn tricomi_u(a: f64, b: f64, z: f64) -> Result<f64, SpecFunError> {
    tricomi::eval(a, b, z)
}

/// 1/Gamma(x) rounded to f64; convenience wrapper over the double-double walk.
pub fn rgamma(x: f64) -> f64 {
    if x.abs() <= ddgamma::RGAMMA_DD_MAX {
        rgamma_dd(x).to_f64()
    } else if x > 0.0 {
        let lg = stirling_ln_gamma(x);
        if lg > 709.0 {
            0.0
        } else {
            (-lg).exp()
        }
    } else {
        // sin(pi x) * Gamma(1-x) / pi
        sinpi(x) * (stirling_ln_gamma(1.0 - x)).exp() / std::f64::consts::PI
    }
}
