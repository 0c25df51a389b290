//! Worst-case and average-case sweeps over the attainable means `k/N`.
//!
//! The outcome law depends on `f` only through its mean, so maximising or
//! averaging over `B_N` reduces to `k = 0..=N`.

use core::f64::consts::PI;
use core::fmt;

use super::bounds::{wa4_upper_bound, wan4_lower_bound};
use super::calculus::{c_bound, EIGHT_OVER_PI2};
use super::level::{check_level, walk};
use crate::boolean::{Measure, SigmaValue};
use crate::compensated::CompensatedSum;
use crate::{Error, Result};

/// `β` used by [`wan4_lower_bound`] unless chosen explicitly.
pub const DEFAULT_BETA: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Setting {
    WorstProbabilistic,
    AvgProbabilistic,
}

impl Setting {
    pub fn as_str(self) -> &'static str {
        match self {
            Setting::WorstProbabilistic => "worst",
            Setting::AvgProbabilistic => "avg",
        }
    }
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Upper,
    Lower,
}

/// Which bound accompanies an [`ErrorRecord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundRef {
    /// `3π/(4M)` at level `8/π²`.
    ThreeQuarters,
    /// `C(p) π / M` at any level.
    LevelConstant,
    /// Average-case upper bound, `4 | M`.
    AvgDivisible,
    /// Average-case lower bound, `4 ∤ M`.
    AvgIndivisible,
}

impl BoundRef {
    /// Tag written to the `bound_ref` CSV column.
    pub fn tag(self) -> &'static str {
        match self {
            BoundRef::ThreeQuarters => "ImprovedCor",
            BoundRef::LevelConstant => "GlobalCor",
            BoundRef::AvgDivisible => "WA4",
            BoundRef::AvgIndivisible => "WAn4",
        }
    }

    pub fn kind(self) -> BoundKind {
        match self {
            BoundRef::AvgIndivisible => BoundKind::Lower,
            _ => BoundKind::Upper,
        }
    }
}

impl fmt::Display for BoundRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRecord {
    pub m: u64,
    pub n_points: u64,
    pub p: f64,
    pub setting: Setting,
    pub measure: Option<Measure>,
    pub value: f64,
    pub bound: Option<f64>,
    pub bound_ref: Option<BoundRef>,
}

impl ErrorRecord {
    /// Whether `value` respects the attached bound (`None` without one).
    pub fn bound_holds(&self) -> Option<bool> {
        let bound = self.bound?;
        Some(match self.bound_ref?.kind() {
            BoundKind::Upper => self.value <= bound * (1.0 + 1e-12),
            BoundKind::Lower => self.value >= bound,
        })
    }
}

fn validate(m: u64, n_points: u64, p: f64) -> Result<()> {
    if m == 0 {
        return Err(Error::ZeroOutcomes);
    }
    if !n_points.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n_points));
    }
    check_level(p)
}

/// Error at level `p` for functions with mean `k/N`.
pub fn class_error(k: u64, n_points: u64, m: u64, p: f64) -> Result<f64> {
    if k > n_points {
        return Err(Error::ClassOutOfRange { k, n: n_points });
    }
    check_level(p)?;
    let sigma = SigmaValue::from_real(k as f64 / n_points as f64, m)?;
    Ok(walk(&sigma, p))
}

fn is_top_level(p: f64) -> bool {
    libm::fabs(p - EIGHT_OVER_PI2) <= 1e-15
}

/// Upper bound on the worst-probabilistic error at level `p`.
pub fn worst_case_bound(m: u64, p: f64) -> Result<(f64, BoundRef)> {
    let mf = m as f64;
    if is_top_level(p) {
        Ok((0.75 * PI / mf, BoundRef::ThreeQuarters))
    } else {
        Ok((c_bound(p, m)? * PI / mf, BoundRef::LevelConstant))
    }
}

/// Attach the worst-case bound to an already computed maximum.
pub fn worst_record(m: u64, n_points: u64, p: f64, value: f64) -> Result<ErrorRecord> {
    validate(m, n_points, p)?;
    let (bound, bound_ref) = worst_case_bound(m, p)?;
    Ok(ErrorRecord {
        m,
        n_points,
        p,
        setting: Setting::WorstProbabilistic,
        measure: None,
        value,
        bound: Some(bound),
        bound_ref: Some(bound_ref),
    })
}

/// Largest class error and the first `k` attaining it.
pub fn worst_case_argmax(m: u64, n_points: u64, p: f64) -> Result<(u64, f64)> {
    validate(m, n_points, p)?;
    let mut best = (0, class_error(0, n_points, m, p)?);
    for k in 1..=n_points {
        let e = class_error(k, n_points, m, p)?;
        if e > best.1 {
            best = (k, e);
        }
    }
    Ok(best)
}

/// `max_k error_at_level(k/N, M, p)` over every `k = 0..=N`.
pub fn worst_probabilistic_error(m: u64, n_points: u64, p: f64) -> Result<ErrorRecord> {
    let (_, value) = worst_case_argmax(m, n_points, p)?;
    worst_record(m, n_points, p, value)
}

/// Maximum over `k = 0, stride, 2·stride, …` and `k = N`; a lower estimate
/// of the worst-probabilistic error for very large `N`.
pub fn worst_probabilistic_error_sampled(
    m: u64,
    n_points: u64,
    p: f64,
    stride: u64,
) -> Result<ErrorRecord> {
    validate(m, n_points, p)?;
    let stride = stride.max(1);
    let mut value = class_error(n_points, n_points, m, p)?;
    let mut k = 0;
    while k < n_points {
        value = value.max(class_error(k, n_points, m, p)?);
        k = k.saturating_add(stride);
    }
    worst_record(m, n_points, p, value)
}

/// Attach the applicable average-case bound to an already computed average.
///
/// Under the uniform measure on functions and `p ∈ (1/2, 8/π²]` the
/// divisibility of `M` by 4 selects between the two dedicated bounds; all
/// other cases fall back to the worst-case bound, which dominates.
pub fn avg_record(
    m: u64,
    n_points: u64,
    p: f64,
    measure: Measure,
    beta: f64,
    value: f64,
) -> Result<ErrorRecord> {
    validate(m, n_points, p)?;
    let dedicated = measure == Measure::UniformOnFunctions && p > 0.5 && p <= EIGHT_OVER_PI2;
    let (bound, bound_ref) = if dedicated && m % 4 == 0 {
        (wa4_upper_bound(m, n_points)?, BoundRef::AvgDivisible)
    } else if dedicated && m > 4 {
        (
            wan4_lower_bound(m, n_points, beta)?,
            BoundRef::AvgIndivisible,
        )
    } else {
        worst_case_bound(m, p)?
    };
    Ok(ErrorRecord {
        m,
        n_points,
        p,
        setting: Setting::AvgProbabilistic,
        measure: Some(measure),
        value,
        bound: Some(bound),
        bound_ref: Some(bound_ref),
    })
}

/// `Σ_k w(k) · error_at_level(k/N, M, p)` with weights from `measure`.
pub fn avg_probabilistic_error(
    m: u64,
    n_points: u64,
    p: f64,
    measure: Measure,
) -> Result<ErrorRecord> {
    avg_probabilistic_error_with_beta(m, n_points, p, measure, DEFAULT_BETA)
}

pub fn avg_probabilistic_error_with_beta(
    m: u64,
    n_points: u64,
    p: f64,
    measure: Measure,
    beta: f64,
) -> Result<ErrorRecord> {
    validate(m, n_points, p)?;
    let mut sum = CompensatedSum::new();
    for k in 0..=n_points {
        let weight = measure.class_weight(k, n_points)?;
        if weight > 0.0 {
            sum.add(weight * class_error(k, n_points, m, p)?);
        }
    }
    avg_record(m, n_points, p, measure, beta, sum.value())
}
