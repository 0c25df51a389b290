use alloc::vec::Vec;

use crate::boolean::SigmaValue;
use crate::closed_form::{mirrored_output, outcome_probability, OutcomeDistribution};
use crate::{Error, Result};

/// Cumulative probability may fall short of the level by this much.
pub const LEVEL_SLACK: f64 = 1e-12;

pub(crate) fn check_level(p: f64) -> Result<()> {
    if p > 0.0 && p <= 1.0 {
        Ok(())
    } else {
        Err(Error::ProbabilityOutOfRange(p))
    }
}

/// `min { α : Σ_{j : |ā(j) - a| ≤ α} p(j) ≥ p }` for a fully tabulated law.
///
/// Outcomes are sorted by distance to `a` and accumulated group by group;
/// equidistant outcomes enter together.
pub fn error_at_level(dist: &OutcomeDistribution, p: f64) -> Result<f64> {
    check_level(p)?;
    let a = dist.a();
    let mut items: Vec<(f64, f64)> = dist
        .outputs()
        .iter()
        .zip(dist.probs())
        .map(|(&out, &prob)| (libm::fabs(a - out), prob))
        .collect();
    items.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut acc = 0.0;
    let mut i = 0;
    while i < items.len() {
        let d = items[i].0;
        while i < items.len() && items[i].0 == d {
            acc += items[i].1;
            i += 1;
        }
        if acc >= p - LEVEL_SLACK {
            return Ok(d);
        }
    }
    Ok(items.last().map_or(0.0, |x| x.0))
}

/// Same quantity as [`error_at_level`], evaluated without tabulating the law.
///
/// Distinct outputs `sin²(πt/M)`, `t = 0..=⌊M/2⌋`, are increasing in `t`, so
/// the distance order is a merge of the two runs on either side of `a`. Only
/// the probabilities that are actually reached get computed, which is what
/// makes exhaustive sweeps over `N = 2²⁰` means cheap.
pub fn error_at_level_for(a: f64, m: u64, p: f64) -> Result<f64> {
    check_level(p)?;
    let sigma = SigmaValue::from_real(a, m)?;
    Ok(walk(&sigma, p))
}

pub(crate) fn walk(sigma: &SigmaValue, p: f64) -> f64 {
    let (m, a) = (sigma.m(), sigma.a());
    let top = m / 2;
    let out = |t: u64| mirrored_output(t, m);
    let mass = |t: u64| {
        if t == 0 || 2 * t == m {
            outcome_probability(t, sigma)
        } else {
            outcome_probability(t, sigma) + outcome_probability(m - t, sigma)
        }
    };

    let mut below = sigma.floor().min(top);
    while below < top && out(below + 1) <= a {
        below += 1;
    }
    while below > 0 && out(below) > a {
        below -= 1;
    }
    let mut left = Some(below);
    let mut right = (below < top).then_some(below + 1);

    let mut acc = 0.0;
    let mut last = 0.0;
    loop {
        let dl = left.map(|t| a - out(t));
        let dr = right.map(|t| out(t) - a);
        let d = match (dl, dr) {
            (None, None) => return last,
            (Some(x), None) => x,
            (None, Some(y)) => y,
            (Some(x), Some(y)) => x.min(y),
        };
        if let (Some(t), Some(x)) = (left, dl) {
            if x == d {
                acc += mass(t);
                left = t.checked_sub(1);
            }
        }
        if let (Some(t), Some(y)) = (right, dr) {
            if y == d {
                acc += mass(t);
                right = (t < top).then_some(t + 1);
            }
        }
        last = d;
        if acc >= p - LEVEL_SLACK {
            return d;
        }
    }
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use crate::analysis::EIGHT_OVER_PI2;
    use crate::boolean::Mean;
    use crate::closed_form::distribution;
    use core::f64::consts::PI;

    /// Minimum over all admissible outcome sets of the largest error in the set.
    fn subset_oracle(dist: &OutcomeDistribution, p: f64) -> f64 {
        let m = dist.m() as usize;
        let mut best = f64::INFINITY;
        for mask in 1u32..(1 << m) {
            let mut mu = 0.0;
            let mut worst: f64 = 0.0;
            for j in 0..m {
                if mask >> j & 1 == 1 {
                    mu += dist.probs()[j];
                    worst = worst.max(libm::fabs(dist.a() - dist.outputs()[j]));
                }
            }
            if mu >= p - LEVEL_SLACK {
                best = best.min(worst);
            }
        }
        best
    }

    #[test]
    fn level_examples() {
        let d = distribution(Mean::zero(), 8).unwrap();
        assert_eq!(error_at_level(&d, 0.8).unwrap(), 0.0);
        let d = distribution(Mean::new(1, 2).unwrap(), 4).unwrap();
        assert!(error_at_level(&d, 0.75).unwrap() < 1e-15);

        let d = distribution(Mean::new(17, 64).unwrap(), 8).unwrap();
        let e = error_at_level(&d, EIGHT_OVER_PI2).unwrap();
        assert!(e <= 3.0 * PI / 32.0);
        assert!((e - subset_oracle(&d, EIGHT_OVER_PI2)).abs() < 1e-12);
    }

    #[test]
    fn level_rejects_bad_probability() {
        let d = distribution(Mean::zero(), 4).unwrap();
        assert!(error_at_level(&d, 0.0).is_err());
        assert!(error_at_level(&d, 1.5).is_err());
        assert!(error_at_level_for(0.2, 4, -0.1).is_err());
    }

    #[test]
    fn greedy_matches_subset_oracle() {
        for m in 1..=8u64 {
            for k in 0..=16 {
                let d = distribution(Mean::new(k, 16).unwrap(), m).unwrap();
                for p in [0.3, 0.51, 0.75, EIGHT_OVER_PI2, 0.95, 1.0] {
                    let oracle = subset_oracle(&d, p);
                    let sorted = error_at_level(&d, p).unwrap();
                    let walked = error_at_level_for(d.a(), m, p).unwrap();
                    assert!((sorted - oracle).abs() <= 1e-12, "m={m} k={k} p={p}");
                    assert!((walked - oracle).abs() <= 1e-12, "m={m} k={k} p={p}");
                }
            }
        }
    }

    #[test]
    fn walk_matches_sort_on_larger_grid() {
        for m in [9u64, 16, 31, 64, 100] {
            for k in 0..=64 {
                let d = distribution(Mean::new(k, 64).unwrap(), m).unwrap();
                for p in [0.51, 0.6, 0.75, EIGHT_OVER_PI2, 0.99] {
                    let a = error_at_level(&d, p).unwrap();
                    let b = error_at_level_for(d.a(), m, p).unwrap();
                    assert!((a - b).abs() <= 1e-12, "m={m} k={k} p={p}");
                }
            }
        }
    }

    #[test]
    fn nondecreasing_in_level() {
        for m in [3u64, 8, 13] {
            for k in 0..=32 {
                let d = distribution(Mean::new(k, 32).unwrap(), m).unwrap();
                let mut prev = 0.0;
                for i in 1..=100 {
                    let e = error_at_level(&d, i as f64 / 100.0).unwrap();
                    assert!(e >= prev);
                    prev = e;
                }
            }
        }
    }
}
