//! Gate-level statevector simulation of the quantum summation algorithm.
//!
//! The state lives on `H_m ⊗ H_n` (index register ⊗ data register), with an
//! optional trailing ancilla qubit for the bit-flip form of the query. Basis
//! state `|j⟩|y⟩` sits at flat index `j·2ⁿ + y` (times two, plus the ancilla
//! bit, when the ancilla is present).

mod layout;
mod measure;
mod ops;
mod qs;
mod spectrum;
mod state;

pub use layout::{index_qubits_for, QubitLayout};
pub use measure::{measure, MeasurementRecord};
pub use num_complex::Complex64;
pub use ops::{apply_grover, apply_lambda, apply_primitive, apply_standard_query, Primitive};
pub use qs::{run_qs, QsRun};
pub use spectrum::{grover_spectrum, GroverSpectrum};
pub use state::{StateVector, UNITARITY_TOLERANCE};
