//! Bessel function of the first kind, order zero.
//!
//! Three regimes, all self-contained:
//!
//! * `|x| <= 8`: the Maclaurin series, summed term by term.
//! * `8 < |x| < 25`: Miller's backward recurrence normalized with
//!   `J0 + 2 (J2 + J4 + ...) = 1`. The series loses too many digits to
//!   cancellation here and the asymptotic expansion is not yet sharp enough.
//! * `|x| >= 25`: the Hankel amplitude-phase expansion, truncated at its
//!   smallest term (about `exp(-2|x|)` relative).

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};

const SERIES_LIMIT: f64 = 8.0;
const ASYMPTOTIC_LIMIT: f64 = 25.0;

/// J0(x), rejecting non-finite input.
pub fn bessel_j0(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "bessel_j0 argument must be finite, got {x}"
        )));
    }
    Ok(j0(x))
}

/// J0(x) for finite `x`. Returns NaN for NaN input.
#[inline]
pub fn j0(x: f64) -> f64 {
    let ax = x.abs();
    if ax <= SERIES_LIMIT {
        j0_series(ax)
    } else if ax < ASYMPTOTIC_LIMIT {
        j0_miller(ax)
    } else {
        j0_asymptotic(ax)
    }
}

fn j0_series(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..64 {
        let kf = k as f64;
        term *= q / (kf * kf);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-3) {
            break;
        }
    }
    sum
}

fn j0_miller(x: f64) -> f64 {
    // Start order well past the turning point so that J_N(x) is negligible.
    let start = 2 * ((1.5 * x + 40.0) as usize / 2);
    let two_over_x = 2.0 / x;
    let mut next = 0.0; // J_{n+1}
    let mut cur = 1e-30; // J_n
    let mut norm = 0.0;
    for n in (1..=start).rev() {
        let prev = n as f64 * two_over_x * cur - next;
        next = cur;
        cur = prev;
        // `cur` now holds J_{n-1}.
        if (n - 1) % 2 == 0 && n > 1 {
            norm += 2.0 * cur;
        }
        if cur.abs() > 1e250 {
            next *= 1e-250;
            cur *= 1e-250;
            norm *= 1e-250;
        }
    }
    norm += cur;
    cur / norm
}

fn j0_asymptotic(x: f64) -> f64 {
    // P and Q of the Hankel expansion; a_k = prod_{j<=k} (2j-1)^2 / (k! (8x)^k).
    let inv8x = 1.0 / (8.0 * x);
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= odd * odd * inv8x / k as f64;
        if term >= last || term < 1e-17 {
            break;
        }
        last = term;
        // P = 1 - a2 + a4 - ..., Q = -a1 + a3 - ...
        match k % 4 {
            1 => q -= term,
            2 => p -= term,
            3 => q += term,
            _ => p += term,
        }
    }
    // cos(x - pi/4) and sin(x - pi/4) without subtracting pi/4 from a large x.
    let (s, c) = x.sin_cos();
    let cos_chi = FRAC_1_SQRT_2 * (c + s);
    let sin_chi = FRAC_1_SQRT_2 * (s - c);
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}
