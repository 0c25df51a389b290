//! The level functions `v`, `v⁻¹`, `C(p)` and the helpers `g`, `h`, `w`.

use core::f64::consts::PI;

use crate::sinc::{periodic_kernel, sinc_sq};
use crate::{Error, Result};

/// `v(1/4)`, the largest level handled by `v⁻¹`.
pub const EIGHT_OVER_PI2: f64 = 8.0 / (PI * PI);
/// `v(1/2)`, the smallest level handled by `v⁻¹`.
pub const FOUR_OVER_PI2: f64 = 4.0 / (PI * PI);

const BISECTION_WIDTH: f64 = 1e-12;

/// `v(Δ) = sin²(πΔ) / (π²Δ²)`.
pub fn v(delta: f64) -> f64 {
    sinc_sq(delta)
}

/// Inverse of `v` restricted to `[1/4, 1/2]`, by bisection.
pub fn v_inverse(p: f64) -> Result<f64> {
    if !(FOUR_OVER_PI2..=EIGHT_OVER_PI2).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    // v is decreasing here: v(lo) >= p >= v(hi).
    let (mut lo, mut hi) = (0.25, 0.5);
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if v(mid) >= p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Constant `C(p)` in the bound `C(p) π / M` on the worst-probabilistic error.
pub fn c_bound(p: f64, m: u64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    if p < FOUR_OVER_PI2 {
        Ok(0.5)
    } else if p <= EIGHT_OVER_PI2 {
        Ok(1.0 - v_inverse(p)?)
    } else {
        Ok(m as f64 / PI)
    }
}

/// `g(Δ) = v(Δ) + v(1 - Δ)`.
pub fn g(delta: f64) -> f64 {
    sinc_sq(delta) + sinc_sq(1.0 - delta)
}

/// `h(Δ) = max{v(Δ), v(1 - Δ)}`.
pub fn h(delta: f64) -> f64 {
    sinc_sq(delta).max(sinc_sq(1.0 - delta))
}

/// `w(Δ) = sin²(πΔ) / (M² sin²(πΔ/M))`.
pub fn w(delta: f64, m: u64) -> f64 {
    periodic_kernel(delta, m)
}

/// `π²p/16 + 1/4`, a linear stand-in for `1 - v⁻¹(p)`.
pub fn linear_estimate(p: f64) -> f64 {
    PI * PI * p / 16.0 + 0.25
}

/// Number of outcomes that guarantees error at most `ε` with probability `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonPlan {
    pub m: u64,
    pub queries: u64,
}

pub fn queries_for_epsilon(epsilon: f64, p: f64) -> Result<EpsilonPlan> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::EpsilonOutOfRange(epsilon));
    }
    if !(p > 0.5 && p <= EIGHT_OVER_PI2) {
        return Err(Error::ProbabilityOutOfRange(p));
    }
    let m = libm::ceil((1.0 - v_inverse(p)?) * PI / epsilon) as u64;
    Ok(EpsilonPlan { m, queries: m - 1 })
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;

    #[test]
    fn inverse_anchors() {
        assert!((v_inverse(EIGHT_OVER_PI2).unwrap() - 0.25).abs() <= 1e-10);
        assert!((v_inverse(FOUR_OVER_PI2).unwrap() - 0.5).abs() <= 1e-10);
        assert!(((1.0 - v_inverse(0.75).unwrap()) * PI - 2.23).abs() <= 0.01);
        assert!(((1.0 - v_inverse(0.501).unwrap()) * PI - 1.75).abs() <= 0.01);
        for i in 0..=200 {
            let p = FOUR_OVER_PI2 + (EIGHT_OVER_PI2 - FOUR_OVER_PI2) * i as f64 / 200.0;
            assert!((v(v_inverse(p).unwrap()) - p).abs() <= 1e-10);
        }
        assert!(v_inverse(0.3).is_err());
        assert!(v_inverse(0.9).is_err());
    }

    #[test]
    fn c_bound_branches() {
        assert_eq!(c_bound(0.1, 8).unwrap(), 0.5);
        assert!((c_bound(EIGHT_OVER_PI2, 8).unwrap() - 0.75).abs() <= 1e-10);
        assert_eq!(c_bound(0.9, 16).unwrap(), 16.0 / PI);
        assert!(c_bound(1.1, 16).is_err());
    }

    #[test]
    fn helper_examples() {
        assert!((g(0.5) - EIGHT_OVER_PI2).abs() < 1e-15);
        assert!((h(0.25) - EIGHT_OVER_PI2).abs() < 1e-15);
        assert_eq!(g(0.0), 1.0);
        assert_eq!(h(1.0), 1.0);
        for m in 2..100u64 {
            let s = libm::sin(PI / (2.0 * m as f64));
            let expected = 1.0 / ((m * m) as f64 * s * s);
            assert!((w(0.5, m) - expected).abs() < 1e-13);
            assert!(w(0.5, m) >= FOUR_OVER_PI2);
        }
    }

    #[test]
    fn monotone_calculus() {
        let mut prev = f64::INFINITY;
        for i in 0..=1000 {
            let d = 0.25 + 0.25 * i as f64 / 1000.0;
            assert!(v(d) < prev);
            prev = v(d);
        }
        for i in 0..=10_000 {
            let d = i as f64 / 10_000.0;
            if i == 5000 {
                continue;
            }
            assert!(g(d) > EIGHT_OVER_PI2);
            if d <= 0.25 || d >= 0.75 {
                assert!(h(d) >= EIGHT_OVER_PI2 - 1e-15);
            }
        }
    }

    #[test]
    fn linear_estimate_residual() {
        let mut worst: f64 = 0.0;
        for i in 0..1000 {
            let p = FOUR_OVER_PI2 + (EIGHT_OVER_PI2 - FOUR_OVER_PI2) * i as f64 / 999.0;
            worst = worst.max((linear_estimate(p) - (1.0 - v_inverse(p).unwrap())).abs());
        }
        assert!(worst <= 0.0085, "{worst}");
    }

    #[test]
    fn epsilon_plans() {
        assert_eq!(
            queries_for_epsilon(0.01, EIGHT_OVER_PI2).unwrap(),
            EpsilonPlan {
                m: 236,
                queries: 235
            }
        );
        assert_eq!(queries_for_epsilon(0.1, 0.75).unwrap().m, 23);
        assert!(queries_for_epsilon(0.0, 0.75).is_err());
        assert!(queries_for_epsilon(1.0, 0.75).is_err());
        assert!(queries_for_epsilon(0.1, 0.5).is_err());
    }
}
