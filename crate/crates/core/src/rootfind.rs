//! Bracketed scalar root finding: coarse bisection to isolate the root, then
//! Brent's method for the final digits.

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RootError {
    #[error("no sign change on [{a}, {b}] (f = {fa:.3e}, {fb:.3e})")]
    NoBracket { a: f64, b: f64, fa: f64, fb: f64 },
    #[error("root iteration did not converge on [{a}, {b}]")]
    MaxIterations { a: f64, b: f64 },
}

/// Width below which the bisection stage hands over to Brent.
const BISECT_WIDTH: f64 = 1e-3;
const MAX_ITER: usize = 200;

/// Find the root of f in [a, b] to absolute x tolerance `xtol`.
/// Requires a sign change over the bracket.
pub fn solve<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, xtol: f64) -> Result<f64, RootError> {
    let (mut lo, mut hi) = (a, b);
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(RootError::NoBracket {
            a,
            b,
            fa: flo,
            fb: fhi,
        });
    }
    // bisection stage: cheap, immune to the wild curvature near bracket edges
    while hi - lo > BISECT_WIDTH {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    brent(&f, lo, hi, flo, fhi, xtol)
}

fn brent<F: Fn(f64) -> f64>(
    f: &F,
    mut a: f64,
    mut b: f64,
    mut fa: f64,
    mut fb: f64,
    xtol: f64,
) -> Result<f64, RootError> {
    let (orig_a, orig_b) = (a, b);
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_ITER {
        if fb.abs() > fc.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b);
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    Err(RootError::MaxIterations {
        a: orig_a,
        b: orig_b,
    })
}
