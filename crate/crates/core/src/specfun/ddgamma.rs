//! Double-double reciprocal Gamma. The confluent-hypergeometric connection
//! formula subtracts two terms that can agree to ten-plus digits, so its
//! Gamma prefactors must carry more than f64 precision or the cancellation
//! amplifies their rounding into the result.
//!
//! Route: Chebyshev expansion of 1/Gamma on [1,2] (coefficients generated
//! offline), argument shifted into the base interval by the exact recurrence
//! Gamma(x+1) = x*Gamma(x), and the reflection formula for x < 1. Everything
//! is additions, multiplications and divisions, which double-double handles
//! at full width; no extended-precision exp or log is required.

use super::tables::{PI_DD, RGAMMA_CHEB, SIN_ODD};
use crate::dd::Dd;

/// Largest |x| the recurrence walk accepts. Gamma(61) is near the f64
/// overflow edge in the intermediate products.
pub(crate) const RGAMMA_DD_MAX: f64 = 60.0;

/// sin(pi x) in double-double. Range reduction x -> x - round(x) is exact in
/// the dd pair, so the only rounding is the pi multiply and the Taylor sum.
/// The argument is dd because callers form it from sums like a + 1 - b that
/// f64 cannot hold exactly, and the reflection result is fully sensitive to
/// those lost bits.
pub(crate) fn sinpi_dd(x: Dd) -> Dd {
    let n = x.to_f64().round();
    let r = x.add_f64(-n); // exact two-sum decrement
    if r == Dd::ZERO {
        return Dd::ZERO;
    }
    let odd = (n as i64) % 2 != 0;
    let t = Dd::from_pair(PI_DD).mul(r);
    let t2 = t.mul(t);
    // Horner over the frozen signed 1/(2k+1)! table
    let mut acc = Dd::from_pair(SIN_ODD[SIN_ODD.len() - 1]);
    for k in (0..SIN_ODD.len() - 1).rev() {
        acc = acc.mul(t2).add(Dd::from_pair(SIN_ODD[k]));
    }
    let s = acc.mul(t);
    if odd {
        s.neg()
    } else {
        s
    }
}

/// 1/Gamma on the base interval [1, 2] by Clenshaw recurrence. The argument
/// is double-double because the reflection branch produces 1 - x, which f64
/// cannot represent exactly.
fn rgamma_base(x: Dd) -> Dd {
    debug_assert!((1.0 - 1e-12..=2.0 + 1e-12).contains(&x.to_f64()));
    let t = x.add_f64(-1.5).mul_f64(2.0); // maps [1,2] onto [-1,1]
    let two_t = t.mul_f64(2.0);
    let mut b1 = Dd::ZERO;
    let mut b2 = Dd::ZERO;
    for k in (1..RGAMMA_CHEB.len()).rev() {
        let next = b1.mul(two_t).sub(b2).add(Dd::from_pair(RGAMMA_CHEB[k]));
        b2 = b1;
        b1 = next;
    }
    b1.mul(t).sub(b2).add(Dd::from_pair(RGAMMA_CHEB[0]))
}

/// 1/Gamma(x) for a double-double argument, |x| <= RGAMMA_DD_MAX. Entire
/// function: returns exact zero at the poles of Gamma (x = 0, -1, -2, ...).
pub(crate) fn rgamma_dd_pair(x: Dd) -> Dd {
    debug_assert!(
        x.to_f64().abs() <= RGAMMA_DD_MAX,
        "rgamma out of range: {}",
        x.to_f64()
    );
    if x.to_f64() >= 1.0 {
        // walk down: 1/Gamma(x) = 1 / [(x-1)(x-2)...(b) ... ] with b in [1,2];
        // each decrement is exact in the dd pair
        let mut prod = Dd::ONE;
        let mut w = x;
        while w.to_f64() > 2.0 {
            w = w.add_f64(-1.0);
            prod = prod.mul(w);
        }
        rgamma_base(w).div(prod)
    } else {
        // reflection: 1/Gamma(x) = Gamma(1-x) * sin(pi x) / pi. 1 - x is kept
        // as a dd pair: rounding it to f64 alone would cost ~6e-17 relative.
        let s = sinpi_dd(x);
        if s == Dd::ZERO {
            return Dd::ZERO; // pole of Gamma
        }
        let mut w = Dd::ONE.sub(x);
        let mut prod = Dd::ONE;
        while w.to_f64() > 2.0 {
            w = w.add_f64(-1.0);
            prod = prod.mul(w);
        }
        if w.to_f64() < 1.0 {
            // 1-x in (0,1): Gamma(y) = Gamma(y+1)/y
            prod = prod.div(w);
            w = w.add_f64(1.0);
        }
        let gamma_1mx = prod.div(rgamma_base(w));
        gamma_1mx.mul(s).div(Dd::from_pair(PI_DD))
    }
}

/// 1/Gamma(x) in double-double for an exactly-representable f64 argument.
pub(crate) fn rgamma_dd(x: f64) -> Dd {
    rgamma_dd_pair(Dd::from_f64(x))
}
