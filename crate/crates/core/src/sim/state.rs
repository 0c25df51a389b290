use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::QubitLayout;
use crate::{Error, Result};

/// Allowed drift of the squared norm after a chain of operators.
pub const UNITARITY_TOLERANCE: f64 = 1e-10;

/// Amplitudes over the computational basis of a [`QubitLayout`].
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
    layout: QubitLayout,
}

impl StateVector {
    /// `|0⟩|0⟩` (and ancilla `|0⟩`).
    pub fn zero(layout: QubitLayout) -> Self {
        Self::basis(layout, 0)
    }

    pub fn basis(layout: QubitLayout, position: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); layout.dim()];
        amps[position] = Complex64::new(1.0, 0.0);
        Self { amps, layout }
    }

    pub fn from_amplitudes(layout: QubitLayout, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != layout.dim() {
            return Err(Error::StateLength {
                expected: layout.dim(),
                got: amps.len(),
            });
        }
        Ok(Self { amps, layout })
    }

    pub fn layout(&self) -> &QubitLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Euclidean distance `‖self - other‖`.
    pub fn distance(&self, other: &StateVector) -> f64 {
        libm::sqrt(
            self.amps
                .iter()
                .zip(&other.amps)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum(),
        )
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn scale(&mut self, c: Complex64) {
        for a in &mut self.amps {
            *a *= c;
        }
    }

    /// Probability of each index-register outcome `j ∈ 0..2^m`.
    pub fn index_marginals(&self) -> Vec<f64> {
        self.amps
            .chunks(self.layout.block_len())
            .map(|block| block.iter().map(|a| a.norm_sqr()).sum())
            .collect()
    }

    pub(crate) fn blocks_mut(&mut self) -> core::slice::ChunksMut<'_, Complex64> {
        let len = self.layout.block_len();
        self.amps.chunks_mut(len)
    }
}
