//! Piecewise Chebyshev interpolation for expensive smooth functions.
//!
//! Each piece fits a degree-N expansion at Chebyshev-Lobatto points and the
//! builder bisects any interval whose trailing coefficients have not decayed
//! below the requested relative tolerance. Evaluation is a binary search for
//! the piece followed by Clenshaw recurrence.

const DEGREE: usize = 32;
const MIN_WIDTH: f64 = 1e-8;
const MAX_PIECES: usize = 4096;

#[derive(Debug, Clone)]
struct Piece {
    a: f64,
    b: f64,
    // plain-sum coefficients: f(x) = sum_j c[j] T_j(t), t in [-1, 1]
    coeffs: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct PiecewiseCheb {
    pieces: Vec<Piece>,
    a: f64,
    b: f64,
    /// Worst relative coefficient tail accepted across pieces.
    pub tail_estimate: f64,
}

impl PiecewiseCheb {
    /// Interpolate f on [a, b], splitting until the coefficient tail of each
    /// piece falls below rel_tol times the piece's largest coefficient.
    pub fn build<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> PiecewiseCheb {
        assert!(a < b, "empty interpolation interval");
        let mut stack = vec![(a, b)];
        let mut pieces: Vec<Piece> = Vec::new();
        let mut worst_tail: f64 = 0.0;
        while let Some((lo, hi)) = stack.pop() {
            let (coeffs, tail) = fit(&f, lo, hi);
            let width = hi - lo;
            if tail <= rel_tol || width <= MIN_WIDTH || pieces.len() + stack.len() >= MAX_PIECES {
                worst_tail = worst_tail.max(tail);
                pieces.push(Piece {
                    a: lo,
                    b: hi,
                    coeffs,
                });
            } else {
                let mid = 0.5 * (lo + hi);
                stack.push((mid, hi));
                stack.push((lo, mid));
            }
        }
        pieces.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap());
        PiecewiseCheb {
            pieces,
            a,
            b,
            tail_estimate: worst_tail,
        }
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }

    /// Evaluate at x; arguments outside the domain are clamped to the nearest
    /// endpoint (tolerates rounding at the boundaries).
    pub fn eval(&self, x: f64) -> f64 {
        let x = x.clamp(self.a, self.b);
        let idx = match self
            .pieces
            .partition_point(|p| p.b < x)
        {
            i if i >= self.pieces.len() => self.pieces.len() - 1,
            i => i,
        };
        let p = &self.pieces[idx];
        let t = (2.0 * x - p.a - p.b) / (p.b - p.a);
        clenshaw(&p.coeffs, t)
    }
}

fn clenshaw(c: &[f64], t: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    let two_t = 2.0 * t;
    for &ck in c.iter().skip(1).rev() {
        let b0 = ck + two_t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c[0] + t * b1 - b2
}

/// Fit one piece; returns plain-sum coefficients and the relative tail size.
fn fit<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (Vec<f64>, f64) {
    let n = DEGREE;
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut fv = vec![0.0; n + 1];
    for (k, v) in fv.iter_mut().enumerate() {
        let t = (std::f64::consts::PI * k as f64 / n as f64).cos();
        *v = f(mid + half * t);
    }
    let mut coeffs = vec![0.0; n + 1];
    for (j, cj) in coeffs.iter_mut().enumerate() {
        let mut s = 0.5 * (fv[0] + if j % 2 == 0 { fv[n] } else { -fv[n] });
        for (k, &v) in fv.iter().enumerate().take(n).skip(1) {
            s += v * (std::f64::consts::PI * (j * k) as f64 / n as f64).cos();
        }
        *cj = 2.0 * s / n as f64;
    }
    // convert to plain-sum convention: halve the first and last coefficients
    coeffs[0] *= 0.5;
    coeffs[n] *= 0.5;
    let scale = coeffs.iter().fold(0.0f64, |m, &c| m.max(c.abs()));
    let tail = coeffs[n - 2..]
        .iter()
        .fold(0.0f64, |m, &c| m.max(c.abs()));
    let rel_tail = if scale > 0.0 { tail / scale } else { 0.0 };
    (coeffs, rel_tail)
}
