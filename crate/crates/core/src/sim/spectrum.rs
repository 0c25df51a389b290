use alloc::vec::Vec;

use num_complex::Complex64;

use super::{QubitLayout, StateVector};
use crate::boolean::{BooleanFunction, Mean};
use crate::{Error, Result};

/// Spectrum of `Q_f` on its invariant plane `span{|ψ₀⟩, |ψ₁⟩}`, where
/// `|ψ_b⟩ = N^{-1/2} Σ_{f(k)=b} |k⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverSpectrum {
    mean: Mean,
    theta: f64,
    lambda_plus: Complex64,
    lambda_minus: Complex64,
    /// Action on the basis `(|ψ₀⟩, |ψ₁⟩)`: column `b` holds the image of `|ψ_b⟩`.
    subspace_matrix: [[f64; 2]; 2],
}

/// `θ = arcsin √a`, `λ± = e^{±2iθ}`; for `a ∈ {0, 1}` both eigenvalues are
/// `(-1)^a`.
pub fn grover_spectrum(a: Mean) -> GroverSpectrum {
    let av = a.value();
    let theta = libm::asin(libm::sqrt(av));
    let (lambda_plus, lambda_minus) = if a.numerator() == 0 {
        (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))
    } else if a.numerator() == a.denominator() {
        (Complex64::new(-1.0, 0.0), Complex64::new(-1.0, 0.0))
    } else {
        let re = 1.0 - 2.0 * av;
        let im = 2.0 * libm::sqrt(av * (1.0 - av));
        (Complex64::new(re, im), Complex64::new(re, -im))
    };
    GroverSpectrum {
        mean: a,
        theta,
        lambda_plus,
        lambda_minus,
        subspace_matrix: [
            [1.0 - 2.0 * av, -2.0 * av],
            [2.0 * (1.0 - av), 1.0 - 2.0 * av],
        ],
    }
}

impl GroverSpectrum {
    pub fn mean(&self) -> Mean {
        self.mean
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn lambda_plus(&self) -> Complex64 {
        self.lambda_plus
    }

    pub fn lambda_minus(&self) -> Complex64 {
        self.lambda_minus
    }

    pub fn subspace_matrix(&self) -> [[f64; 2]; 2] {
        self.subspace_matrix
    }

    /// `(|ψ₀⟩, |ψ₁⟩)` for `f`, on a data-only layout.
    pub fn invariant_basis(f: &BooleanFunction) -> (StateVector, StateVector) {
        let c = 1.0 / libm::sqrt(f.domain_size() as f64);
        let layout = QubitLayout::data_only(f.qubits());
        let part = |bit: bool| -> StateVector {
            let amps: Vec<Complex64> = f
                .values()
                .iter()
                .map(|&v| Complex64::new(if v == bit { c } else { 0.0 }, 0.0))
                .collect();
            StateVector::from_amplitudes(layout, amps).expect("layout matches table")
        };
        (part(false), part(true))
    }

    /// Eigenvectors `(|ψ₊⟩, |ψ₋⟩)` of `Q_f` for `λ₊`, `λ₋`.
    ///
    /// For `a ∈ (0, 1)`: `|ψ±⟩ = 2^{-1/2} (±i (1-a)^{-1/2} |ψ₀⟩ + a^{-1/2} |ψ₁⟩)`.
    /// For `a ∈ {0, 1}`: `|ψ₊⟩ = i^{1-a} √2 |ψ⟩` and `|ψ₋⟩ = 0`, which keeps
    /// `|ψ⟩ = (-i/√2)(e^{iθ}|ψ₊⟩ - e^{-iθ}|ψ₋⟩)` valid.
    pub fn eigenvectors(&self, f: &BooleanFunction) -> Result<(StateVector, StateVector)> {
        let fm = f.mean();
        if fm.numerator() * self.mean.denominator() != self.mean.numerator() * fm.denominator() {
            return Err(Error::MeanOutOfRange(fm.value()));
        }
        let (psi0, psi1) = Self::invariant_basis(f);
        let layout = *psi0.layout();
        let a = self.mean.value();
        let sqrt2 = core::f64::consts::SQRT_2;
        let k = self.mean.numerator();
        if k == 0 || k == self.mean.denominator() {
            let phase = if k == 0 {
                Complex64::new(0.0, sqrt2)
            } else {
                Complex64::new(sqrt2, 0.0)
            };
            let plus = psi0
                .amplitudes()
                .iter()
                .zip(psi1.amplitudes())
                .map(|(x, y)| (x + y) * phase)
                .collect();
            let minus = alloc::vec![Complex64::new(0.0, 0.0); layout.dim()];
            return Ok((
                StateVector::from_amplitudes(layout, plus)?,
                StateVector::from_amplitudes(layout, minus)?,
            ));
        }
        let c0 = 1.0 / (sqrt2 * libm::sqrt(1.0 - a));
        let c1 = 1.0 / (sqrt2 * libm::sqrt(a));
        let build = |sign: f64| -> Result<StateVector> {
            let amps = psi0
                .amplitudes()
                .iter()
                .zip(psi1.amplitudes())
                .map(|(x, y)| Complex64::new(0.0, sign * c0) * x + y * c1)
                .collect();
            StateVector::from_amplitudes(layout, amps)
        };
        Ok((build(1.0)?, build(-1.0)?))
    }
}
