use num_complex::Complex64;
use rand::Rng;

use super::StateVector;
use crate::closed_form::inverse_cdf;

/// Result of measuring the index register with `{|j⟩⟨j| ⊗ I}`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementRecord {
    pub outcome: u64,
    /// `⟨η|M_j† M_j|η⟩`.
    pub probability: f64,
    /// `M_j|η⟩ / √probability`.
    pub collapsed: StateVector,
}

/// Measures the index register of `state`. Outcomes of zero probability are
/// never drawn.
pub fn measure<R: Rng + ?Sized>(state: &StateVector, rng: &mut R) -> MeasurementRecord {
    let marginals = state.index_marginals();
    let j = inverse_cdf(&marginals, rng.random::<f64>());
    let probability = marginals[j];
    let block = state.layout().block_len();
    let scale = 1.0 / libm::sqrt(probability);
    let amps = state
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if i / block == j {
                a * scale
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    let collapsed =
        StateVector::from_amplitudes(*state.layout(), amps).expect("same layout as input");
    MeasurementRecord {
        outcome: j as u64,
        probability,
        collapsed,
    }
}
