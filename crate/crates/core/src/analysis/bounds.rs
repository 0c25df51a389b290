//! Closed-form bounds on the average error and the rounding guarantee.

use core::f64::consts::PI;

use crate::boolean::Mean;
use crate::closed_form::distribution;
use crate::{Error, Result};

/// Upper bound on the average error under the uniform measure on functions,
/// valid when `4 | M`.
///
/// The second branch needs `N ≥ 2`; for `N = 1` only `3π/(4M)` remains.
pub fn wa4_upper_bound(m: u64, n_points: u64) -> Result<f64> {
    if m == 0 || m % 4 != 0 {
        return Err(Error::NotDivisibleByFour(m));
    }
    let mf = m as f64;
    let first = 0.75 * PI / mf;
    if n_points <= 1 {
        return Ok(first);
    }
    let nm1 = (n_points - 1) as f64;
    let second = libm::sqrt(3.0 / (2.0 * PI))
        * libm::sqrt(1.0 + PI * PI / (4.0 * mf * mf))
        * libm::exp(1.0 / (12.0 * nm1))
        / libm::sqrt(nm1);
    Ok(first.min(second))
}

/// Lower bound on the average error under the uniform measure on functions,
/// valid when `M > 4` and `4 ∤ M`. May be negative for `β` close to 1.
pub fn wan4_lower_bound(m: u64, n_points: u64, beta: f64) -> Result<f64> {
    if m % 4 == 0 {
        return Err(Error::DivisibleByFour(m));
    }
    if m <= 4 {
        return Err(Error::TooFewOutcomes(m));
    }
    if beta.is_nan() || beta <= 1.0 {
        return Err(Error::BetaTooSmall(beta));
    }
    let mf = m as f64;
    let t = PI / (8.0 * beta * mf);
    let tail = 1.0 - 2.0 * libm::exp(-(n_points as f64) * t * t);
    Ok(PI / (4.0 * mf) * (1.0 - 1.0 / mf - 1.0 / beta) * tail)
}

/// Probability that rounding the output to the nearest multiple of `1/N`
/// returns exactly `k/N`.
pub fn rounding_success_probability(k: u64, n_points: u64, m: u64) -> Result<f64> {
    let dist = distribution(Mean::new(k, n_points)?, m)?;
    let nf = n_points as f64;
    Ok(dist
        .outputs()
        .iter()
        .zip(dist.probs())
        .filter(|(&out, _)| libm::round(out * nf) as u64 == k)
        .map(|(_, &p)| p)
        .sum())
}

/// Smallest `M` with `M > 3πN/2`.
pub fn rounding_resolution(n_points: u64) -> u64 {
    libm::floor(1.5 * PI * n_points as f64) as u64 + 1
}
