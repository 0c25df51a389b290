//! Sinc-squared kernels shared by the closed-form outcome law and the
//! level-function calculus.

use core::f64::consts::PI;

/// Offsets closer than this to a pole of the periodic kernel are treated as
/// sitting on it.
pub const POLE_TOLERANCE: f64 = 1e-9;

/// `sin²(πx) / (πx)²`, with the removable singularity at zero filled in.
pub fn sinc_sq(x: f64) -> f64 {
    if x == 0.0 {
        return 1.0;
    }
    let s = sin_pi(x);
    let px = PI * x;
    (s * s) / (px * px)
}

/// Periodic (Fejér-type) kernel `sin²(πΔ) / (M² sin²(πΔ/M))`.
///
/// The value is `1` whenever `Δ ≡ 0 (mod M)`. Offsets within
/// [`POLE_TOLERANCE`] of a pole are evaluated with the second-order expansion
/// `1 - (π²r²/3)(1 - 1/M²)`.
pub fn periodic_kernel(delta: f64, m: u64) -> f64 {
    let mf = m as f64;
    // The kernel has period M in Δ.
    let r = delta - mf * libm::round(delta / mf);
    if libm::fabs(r) < POLE_TOLERANCE {
        let pr = PI * r;
        return 1.0 - pr * pr / 3.0 * (1.0 - 1.0 / (mf * mf));
    }
    let num = sin_pi(r);
    let den = mf * libm::sin(PI * r / mf);
    (num * num) / (den * den)
}

/// `sin(πx)` with the argument reduced to `[-1/2, 1/2]` first so that values
/// near integers keep their relative accuracy.
pub fn sin_pi(x: f64) -> f64 {
    let n = libm::round(x);
    let s = libm::sin(PI * (x - n));
    if libm::fmod(n, 2.0) == 0.0 {
        s
    } else {
        -s
    }
}
