//! Analytic outcome law of the algorithm.
//!
//! With `σ = (M/π) arcsin √a`, outcome `j ∈ 0..M` occurs with probability
//!
//! ```text
//! p(j) = ½ [ K(j - σ) + K(j + σ) ],   K(Δ) = sin²(πΔ) / (M² sin²(πΔ/M)),
//! ```
//!
//! and yields the output `sin²(πj/M)`. The half-sum form is used for every
//! `a ∈ [0, 1]`, including the degenerate endpoints.

use alloc::vec::Vec;
use core::f64::consts::PI;

use rand::Rng;

use crate::boolean::{Mean, SigmaValue};
use crate::sinc::periodic_kernel;
use crate::{Error, Result};

/// `|⟨S_M(ω₁)|S_M(ω₂)⟩|² = sin²(Mπδ) / (M² sin²(πδ))` with `δ = ω₁ - ω₂`;
/// equal to `1` when `δ` is an integer.
///
/// # Panics
///
/// If `m == 0`.
pub fn kernel(omega1: f64, omega2: f64, m: u64) -> f64 {
    assert!(m >= 1, "kernel needs M >= 1");
    periodic_kernel(m as f64 * (omega1 - omega2), m)
}

/// Probability of outcome `j` (any integer, the law is `M`-periodic).
pub fn outcome_probability(j: u64, sigma: &SigmaValue) -> f64 {
    let (m, s) = (sigma.m(), sigma.sigma());
    let jf = j as f64;
    0.5 * (periodic_kernel(jf - s, m) + periodic_kernel(jf + s, m))
}

/// `ā(j) = sin²(πj/M)` for `0 ≤ j < M`.
pub fn output_value(j: u64, m: u64) -> Result<f64> {
    if j >= m {
        return Err(Error::OutcomeOutOfRange { j, m });
    }
    Ok(mirrored_output(j, m))
}

// Evaluated at min(j, M - j) so that outputs[j] == outputs[M - j] bit for bit.
pub(crate) fn mirrored_output(j: u64, m: u64) -> f64 {
    let t = j.min(m - j);
    let s = libm::sin(PI * t as f64 / m as f64);
    s * s
}

/// Outcome probabilities and outputs for one `(a, M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    m: u64,
    probs: Vec<f64>,
    outputs: Vec<f64>,
    sigma: SigmaValue,
    mean: Option<Mean>,
}

impl OutcomeDistribution {
    pub fn from_sigma(sigma: SigmaValue) -> Self {
        let m = sigma.m();
        let probs = (0..m).map(|j| outcome_probability(j, &sigma)).collect();
        let outputs = (0..m).map(|j| mirrored_output(j, m)).collect();
        Self {
            m,
            probs,
            outputs,
            sigma,
            mean: None,
        }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn outputs(&self) -> &[f64] {
        &self.outputs
    }

    pub fn sigma(&self) -> &SigmaValue {
        &self.sigma
    }

    /// The exact mean, when the distribution was built from one.
    pub fn mean(&self) -> Option<Mean> {
        self.mean
    }

    pub fn a(&self) -> f64 {
        self.sigma.a()
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

pub fn distribution(a: Mean, m: u64) -> Result<OutcomeDistribution> {
    let mut d = OutcomeDistribution::from_sigma(SigmaValue::from_real(a.value(), m)?);
    d.mean = Some(a);
    Ok(d)
}

/// Same law for an arbitrary real `a ∈ [0, 1]`.
pub fn distribution_real(a: f64, m: u64) -> Result<OutcomeDistribution> {
    Ok(OutcomeDistribution::from_sigma(SigmaValue::from_real(
        a, m,
    )?))
}

/// Error and probability of the two outputs bracketing `σ` when `σ` is not
/// an integer: `sin²(π⌈σ⌉/M)` (outcomes `⌈σ⌉`, `M - ⌈σ⌉`) and
/// `sin²(π⌊σ⌋/M)` (outcomes `⌊σ⌋`, `M - ⌊σ⌋`, the latter folded onto `0`
/// when `⌊σ⌋ = 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CeilFloorPair {
    pub ceil: u64,
    pub floor: u64,
    pub err_up: f64,
    pub prob_up: f64,
    pub err_down: f64,
    pub prob_down: f64,
}

pub fn ceil_floor_pair(a: f64, m: u64) -> Result<CeilFloorPair> {
    let sv = SigmaValue::from_real(a, m)?;
    if m < 2 {
        return Err(Error::TooFewOutcomes(m));
    }
    if sv.is_integral() {
        return Err(Error::IntegralSigma(sv.sigma()));
    }
    let (sigma, mf) = (sv.sigma(), m as f64);
    let (ceil, floor) = (sv.ceil(), sv.floor());
    let root = 2.0 * libm::sqrt(a * (1.0 - a));
    let error = |x: f64| {
        let (s, c) = libm::sincos(x);
        libm::fabs(s * (root * c + (1.0 - 2.0 * a) * s))
    };
    let up = ceil as f64 - sigma;
    let down = sigma - floor as f64;
    let ratio = |d: f64, other: f64| {
        let num = libm::sin(PI * d / mf);
        let den = libm::sin(PI * other / mf);
        (num * num) / (den * den)
    };
    let up_pairs = !(m % 2 == 0 && ceil == m / 2);
    let down_pairs = floor != 0;
    let prob_up = periodic_kernel(up, m)
        * (1.0
            + if up_pairs {
                ratio(up, ceil as f64 + sigma)
            } else {
                0.0
            });
    let prob_down = periodic_kernel(down, m)
        * (1.0
            + if down_pairs {
                ratio(down, sigma + floor as f64)
            } else {
                0.0
            });
    Ok(CeilFloorPair {
        ceil,
        floor,
        err_up: error(PI * up / mf),
        prob_up,
        err_down: error(PI * down / mf),
        prob_down,
    })
}

/// Draws one outcome from `dist`.
pub fn sample<R: Rng + ?Sized>(dist: &OutcomeDistribution, rng: &mut R) -> u64 {
    inverse_cdf(&dist.probs, rng.random::<f64>()) as u64
}

/// Median of `runs` independent outputs of the algorithm; `runs` must be odd.
pub fn median_amplify<R: Rng + ?Sized>(a: Mean, m: u64, runs: usize, rng: &mut R) -> Result<f64> {
    if runs % 2 == 0 {
        return Err(Error::EvenRuns(runs));
    }
    let dist = distribution(a, m)?;
    let mut outputs: Vec<f64> = (0..runs)
        .map(|_| dist.outputs[sample(&dist, rng) as usize])
        .collect();
    let (_, median, _) = outputs.select_nth_unstable_by(runs / 2, f64::total_cmp);
    Ok(*median)
}

/// Inverse-CDF lookup of `u ∈ [0, 1)`; entries with zero probability are
/// never returned.
pub(crate) fn inverse_cdf(probs: &[f64], u: f64) -> usize {
    let total: f64 = probs.iter().sum();
    let target = u * total;
    let mut cum = 0.0;
    let mut last = 0;
    for (j, &p) in probs.iter().enumerate() {
        if p <= 0.0 {
            continue;
        }
        cum += p;
        last = j;
        if target < cum {
            return j;
        }
    }
    last
}
