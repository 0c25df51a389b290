use alloc::vec::Vec;

use super::{
    apply_lambda, apply_primitive, measure, MeasurementRecord, Primitive, QubitLayout, StateVector,
};
use crate::boolean::BooleanFunction;
use crate::closed_form::output_value;
use crate::{seeded_rng, Result};

/// Everything one execution of the algorithm produces.
#[derive(Debug, Clone, PartialEq)]
pub struct QsRun {
    /// Probability of each index outcome `j ∈ 0..2^m`.
    pub distribution: Vec<f64>,
    /// Present when the run was given a seed.
    pub measurement: Option<MeasurementRecord>,
    /// `sin²(πj/M)` for the measured `j`.
    pub output: Option<f64>,
    pub query_count: u64,
    pub qubit_count: u32,
    /// The state right before measurement.
    pub state: StateVector,
}

/// Runs the algorithm on `f` with parameter `M`:
///
/// 1. `|η₁⟩ = (F_{M,m} ⊗ W_N)|0⟩|0⟩`
/// 2. `|η₂⟩ = Λ_m(Q_f)|η₁⟩`
/// 3. `|η₃⟩ = (F_{M,m}^{-1} ⊗ I)|η₂⟩`
///
/// and, when `seed` is given, measures the index register of `|η₃⟩`.
pub fn run_qs(f: &BooleanFunction, m: u64, seed: Option<u64>) -> Result<QsRun> {
    let layout = QubitLayout::new(f.qubits(), m)?;
    let mut state = StateVector::zero(layout);
    apply_primitive(&mut state, Primitive::Qft, None)?;
    apply_primitive(&mut state, Primitive::WalshHadamard, None)?;
    let query_count = apply_lambda(&mut state, f)?;
    apply_primitive(&mut state, Primitive::QftInverse, None)?;

    let distribution = state.index_marginals();
    let (measurement, output) = match seed {
        Some(seed) => {
            let record = measure(&state, &mut seeded_rng(seed));
            let output = output_value(record.outcome, m)?;
            (Some(record), Some(output))
        }
        None => (None, None),
    };
    Ok(QsRun {
        distribution,
        measurement,
        output,
        query_count,
        qubit_count: layout.total_qubits(),
        state,
    })
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;

    #[test]
    fn zero_function_is_exact() {
        let run = run_qs(&BooleanFunction::zero(3), 4, Some(7)).unwrap();
        assert!((run.distribution[0] - 1.0).abs() < 1e-12);
        let rec = run.measurement.unwrap();
        assert_eq!(rec.outcome, 0);
        assert!((rec.probability - 1.0).abs() < 1e-12);
        assert_eq!(run.output, Some(0.0));
        assert_eq!(run.query_count, 3);
        assert_eq!(run.qubit_count, 5);
    }

    #[test]
    fn half_mean_splits_between_two_outcomes() {
        let f = BooleanFunction::from_mean(3, 4).unwrap();
        let run = run_qs(&f, 4, None).unwrap();
        let expected = [0.0, 0.5, 0.0, 0.5];
        for (p, e) in run.distribution.iter().zip(expected) {
            assert!((p - e).abs() < 1e-12);
        }
        for seed in 0..20 {
            let run = run_qs(&f, 4, Some(seed)).unwrap();
            let j = run.measurement.as_ref().unwrap().outcome;
            assert!(j == 1 || j == 3);
            assert!((run.output.unwrap() - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn single_outcome_edge() {
        let f = BooleanFunction::from_mean(2, 1).unwrap();
        let run = run_qs(&f, 1, Some(1)).unwrap();
        assert_eq!(run.distribution.len(), 1);
        assert!((run.distribution[0] - 1.0).abs() < 1e-12);
        assert_eq!(run.output, Some(0.0));
        assert_eq!(run.query_count, 0);
        assert_eq!(run.qubit_count, 2);
    }

    #[test]
    fn collapsed_state_is_normalised_and_supported_on_outcome() {
        let f = BooleanFunction::from_mean(3, 3).unwrap();
        let run = run_qs(&f, 6, Some(11)).unwrap();
        let rec = run.measurement.unwrap();
        assert!((rec.collapsed.norm_sqr() - 1.0).abs() < 1e-10);
        let marg = rec.collapsed.index_marginals();
        assert!((marg[rec.outcome as usize] - 1.0).abs() < 1e-10);
        assert!(rec.probability > 0.0);
    }

    #[test]
    fn seeded_runs_repeat() {
        let f = BooleanFunction::from_mean(4, 5).unwrap();
        let a = run_qs(&f, 9, Some(42)).unwrap();
        let b = run_qs(&f, 9, Some(42)).unwrap();
        assert_eq!(a, b);
    }
}
