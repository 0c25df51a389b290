use crate::{Error, Result};

/// Register sizes for one run of the algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QubitLayout {
    data_qubits: u32,
    index_qubits: u32,
    m: u64,
    ancilla: bool,
}

/// `⌈log₂ M⌉`, with `0` for `M = 1`.
pub fn index_qubits_for(m: u64) -> u32 {
    if m <= 1 {
        0
    } else {
        u64::BITS - (m - 1).leading_zeros()
    }
}

impl QubitLayout {
    /// Canonical layout: `n` data qubits and `⌈log₂ M⌉` index qubits.
    pub fn new(data_qubits: u32, m: u64) -> Result<Self> {
        Self::with_index_qubits(data_qubits, index_qubits_for(m), m)
    }

    /// Layout with an explicit index register size. `M` is not checked
    /// against the register here; the Fourier transform rejects `M > 2^m`.
    pub fn with_index_qubits(data_qubits: u32, index_qubits: u32, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroOutcomes);
        }
        Ok(Self {
            data_qubits,
            index_qubits,
            m,
            ancilla: false,
        })
    }

    /// Layout holding only a data register (`M = 1`, no index qubits).
    pub fn data_only(data_qubits: u32) -> Self {
        Self {
            data_qubits,
            index_qubits: 0,
            m: 1,
            ancilla: false,
        }
    }

    pub fn with_ancilla(mut self) -> Self {
        self.ancilla = true;
        self
    }

    pub fn data_qubits(&self) -> u32 {
        self.data_qubits
    }

    pub fn index_qubits(&self) -> u32 {
        self.index_qubits
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn has_ancilla(&self) -> bool {
        self.ancilla
    }

    /// `N = 2ⁿ`.
    pub fn data_len(&self) -> usize {
        1 << self.data_qubits
    }

    /// `2^m`.
    pub fn index_len(&self) -> usize {
        1 << self.index_qubits
    }

    pub(crate) fn ancilla_len(&self) -> usize {
        if self.ancilla {
            2
        } else {
            1
        }
    }

    /// Length of one index block (all data and ancilla amplitudes for a fixed `j`).
    pub(crate) fn block_len(&self) -> usize {
        self.data_len() * self.ancilla_len()
    }

    pub fn dim(&self) -> usize {
        self.index_len() * self.block_len()
    }

    pub fn total_qubits(&self) -> u32 {
        self.data_qubits + self.index_qubits + u32::from(self.ancilla)
    }

    /// Flat position of `|j⟩|y⟩|b⟩` (`b` must be `0` without ancilla).
    pub fn position(&self, j: usize, y: usize, b: usize) -> usize {
        (j * self.data_len() + y) * self.ancilla_len() + b
    }
}
