//! Exact simulation and error analysis of the quantum summation algorithm.
//!
//! Quantum summation (better known as amplitude estimation) approximates the
//! mean `a = (1/N) Σ f(i)` of a Boolean function `f` with `M - 1` queries to
//! `f`. This crate provides:
//!
//! - [`boolean`]: Boolean functions, exact rational means, the `σ`/`θ`
//!   reparameterisation and the two measures over functions used for
//!   average-case analysis.
//! - [`sim`]: a gate-level statevector implementation of every operator the
//!   algorithm uses, the register measurement and the full algorithm.
//! - [`closed_form`]: the analytic outcome law of the algorithm, sampling and
//!   median amplification.
//! - [`analysis`]: worst-probabilistic and average-probabilistic error
//!   functionals, the level-function calculus and the associated bounds.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod analysis;
pub mod binomial;
pub mod boolean;
pub mod closed_form;
mod compensated;
mod error;
pub mod sim;
pub mod sinc;

pub use compensated::CompensatedSum;
pub use error::{Error, Result};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random generator used wherever a run must be reproducible from a `u64` seed.
pub type SeededRng = ChaCha8Rng;

/// Builds the reproducible generator for `seed`.
pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}
