//! The unitary building blocks of the algorithm.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::StateVector;
use crate::boolean::BooleanFunction;
use crate::{Error, Result};

/// Primitive operators. `S0`, `WalshHadamard` and `Query` act on the data
/// register, the Fourier transforms on the first `M` index states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primitive {
    /// `S₀|0⟩ = -|0⟩`, identity on every other basis state.
    S0,
    /// `W_N = H^{⊗n}`; self-inverse.
    WalshHadamard,
    /// `F_{M,m}|j⟩ = M^{-1/2} Σ_k e^{2πijk/M} |k⟩` for `j < M`, `|j⟩` otherwise.
    Qft,
    QftInverse,
    /// Phase query `S_f|y⟩ = (-1)^{f(y)} |y⟩`.
    Query,
}

pub fn apply_primitive(
    state: &mut StateVector,
    which: Primitive,
    f: Option<&BooleanFunction>,
) -> Result<()> {
    match which {
        Primitive::S0 => {
            let a = state.layout().ancilla_len();
            state.blocks_mut().for_each(|b| reflect_zero(b, a));
        }
        Primitive::WalshHadamard => {
            let a = state.layout().ancilla_len();
            state.blocks_mut().for_each(|b| walsh_hadamard(b, a));
        }
        Primitive::Qft => fourier(state, false)?,
        Primitive::QftInverse => fourier(state, true)?,
        Primitive::Query => {
            let f = f.ok_or(Error::MissingFunction)?;
            check_register(state, f)?;
            let a = state.layout().ancilla_len();
            state.blocks_mut().for_each(|b| phase_query(b, a, f));
        }
    }
    Ok(())
}

/// Bit-flip query `S̄_f|y⟩|b⟩ = |y⟩|b ⊕ f(y)⟩` on the data register and the
/// ancilla.
pub fn apply_standard_query(state: &mut StateVector, f: &BooleanFunction) -> Result<()> {
    if !state.layout().has_ancilla() {
        return Err(Error::NoAncilla);
    }
    check_register(state, f)?;
    for block in state.blocks_mut() {
        for (y, pair) in block.chunks_exact_mut(2).enumerate() {
            if f.eval(y) {
                pair.swap(0, 1);
            }
        }
    }
    Ok(())
}

/// Grover operator `Q_f = -W_N S₀ W_N S_f` on the data register.
pub fn apply_grover(state: &mut StateVector, f: &BooleanFunction) -> Result<()> {
    check_register(state, f)?;
    let a = state.layout().ancilla_len();
    state.blocks_mut().for_each(|b| grover(b, a, f));
    Ok(())
}

/// Grover iterate `Λ_m(Q_f)|j⟩|y⟩ = |j⟩ Q_f^j |y⟩`.
///
/// Block `j` receives `j` sequential applications of `Q_f`. Returns the
/// number of queries the algorithm is charged for, `M - 1`: only the first
/// `M` index states are ever populated.
pub fn apply_lambda(state: &mut StateVector, f: &BooleanFunction) -> Result<u64> {
    check_register(state, f)?;
    let a = state.layout().ancilla_len();
    let queries = state.layout().m() - 1;
    for (j, block) in state.blocks_mut().enumerate() {
        // Q_f^j of the zero vector is zero.
        if block.iter().all(|z| z.re == 0.0 && z.im == 0.0) {
            continue;
        }
        for _ in 0..j {
            grover(block, a, f);
        }
    }
    Ok(queries)
}

fn check_register(state: &StateVector, f: &BooleanFunction) -> Result<()> {
    let expected = state.layout().data_qubits();
    if f.qubits() != expected {
        return Err(Error::RegisterMismatch {
            expected,
            got: f.qubits(),
        });
    }
    Ok(())
}

fn grover(block: &mut [Complex64], ancilla: usize, f: &BooleanFunction) {
    phase_query(block, ancilla, f);
    walsh_hadamard(block, ancilla);
    reflect_zero(block, ancilla);
    walsh_hadamard(block, ancilla);
    for z in block.iter_mut() {
        *z = -*z;
    }
}

fn phase_query(block: &mut [Complex64], ancilla: usize, f: &BooleanFunction) {
    for (y, lane) in block.chunks_exact_mut(ancilla).enumerate() {
        if f.eval(y) {
            lane.iter_mut().for_each(|z| *z = -*z);
        }
    }
}

fn reflect_zero(block: &mut [Complex64], ancilla: usize) {
    block[..ancilla].iter_mut().for_each(|z| *z = -*z);
}

/// In-place fast Walsh–Hadamard transform over the data index of one block.
fn walsh_hadamard(block: &mut [Complex64], ancilla: usize) {
    let n = block.len() / ancilla;
    let mut h = 1;
    while h < n {
        for start in (0..n).step_by(2 * h) {
            for y in start..start + h {
                for b in 0..ancilla {
                    let (i, k) = (y * ancilla + b, (y + h) * ancilla + b);
                    let (u, v) = (block[i], block[k]);
                    block[i] = u + v;
                    block[k] = u - v;
                }
            }
        }
        h *= 2;
    }
    let scale = 1.0 / libm::sqrt(n as f64);
    block.iter_mut().for_each(|z| *z *= scale);
}

/// Dense `M × M` Fourier matrix on the first `M` index states of every
/// data/ancilla column; identity on the remaining `2^m - M`.
fn fourier(state: &mut StateVector, inverse: bool) -> Result<()> {
    let layout = *state.layout();
    let m = layout.m();
    if m > layout.index_len() as u64 {
        return Err(Error::IndexRegisterTooSmall {
            m,
            qubits: layout.index_qubits(),
        });
    }
    let m = m as usize;
    let sign = if inverse { -1.0 } else { 1.0 };
    let norm = 1.0 / libm::sqrt(m as f64);
    let twiddle: Vec<Complex64> = (0..m)
        .map(|t| {
            let (s, c) = libm::sincos(2.0 * PI * t as f64 / m as f64);
            Complex64::new(c * norm, sign * s * norm)
        })
        .collect();
    let stride = layout.block_len();
    let amps = state.amplitudes_mut();
    let mut column = vec![Complex64::new(0.0, 0.0); m];
    for c in 0..stride {
        for (k, x) in column.iter_mut().enumerate() {
            *x = amps[k * stride + c];
        }
        for j in 0..m {
            amps[j * stride + c] = column
                .iter()
                .enumerate()
                .map(|(k, x)| twiddle[(j * k) % m] * x)
                .sum();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use crate::sim::QubitLayout;
    use crate::{seeded_rng, SeededRng};
    use rand::Rng;

    fn random_state(layout: QubitLayout, rng: &mut SeededRng) -> StateVector {
        let amps: Vec<Complex64> = (0..layout.dim())
            .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect();
        let norm = libm::sqrt(amps.iter().map(|a| a.norm_sqr()).sum::<f64>());
        StateVector::from_amplitudes(layout, amps.into_iter().map(|a| a / norm).collect()).unwrap()
    }

    fn random_function(qubits: u32, rng: &mut SeededRng) -> BooleanFunction {
        BooleanFunction::from_fn(qubits, |_| rng.random::<bool>())
    }

    #[test]
    fn walsh_hadamard_is_an_involution() {
        let mut rng = seeded_rng(1);
        let layout = QubitLayout::new(4, 3).unwrap();
        let x = random_state(layout, &mut rng);
        let mut y = x.clone();
        apply_primitive(&mut y, Primitive::WalshHadamard, None).unwrap();
        assert!((y.norm_sqr() - 1.0).abs() < UNIT);
        apply_primitive(&mut y, Primitive::WalshHadamard, None).unwrap();
        assert!(x.distance(&y) <= 1e-12);
    }

    const UNIT: f64 = crate::sim::UNITARITY_TOLERANCE;

    #[test]
    fn walsh_hadamard_of_zero_is_uniform() {
        let mut s = StateVector::zero(QubitLayout::data_only(3));
        apply_primitive(&mut s, Primitive::WalshHadamard, None).unwrap();
        let c = 1.0 / libm::sqrt(8.0);
        assert!(s
            .amplitudes()
            .iter()
            .all(|a| (a.re - c).abs() < 1e-15 && a.im == 0.0));
    }

    #[test]
    fn s0_flips_only_zero() {
        let layout = QubitLayout::data_only(3);
        let mut s = StateVector::basis(layout, 0);
        apply_primitive(&mut s, Primitive::S0, None).unwrap();
        assert_eq!(s.amplitudes()[0], Complex64::new(-1.0, 0.0));
        let mut s = StateVector::basis(layout, 5);
        apply_primitive(&mut s, Primitive::S0, None).unwrap();
        assert_eq!(s.amplitudes()[5], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn qft_round_trip_non_power_of_two() {
        let mut rng = seeded_rng(2);
        let layout = QubitLayout::new(2, 6).unwrap();
        assert_eq!(layout.index_qubits(), 3);
        let x = random_state(layout, &mut rng);
        let mut y = x.clone();
        apply_primitive(&mut y, Primitive::Qft, None).unwrap();
        assert!((y.norm_sqr() - 1.0).abs() < UNIT);
        apply_primitive(&mut y, Primitive::QftInverse, None).unwrap();
        assert!(x.distance(&y) <= 1e-12);
    }

    #[test]
    fn qft_leaves_unused_index_states_alone() {
        let layout = QubitLayout::new(1, 5).unwrap();
        let pos = layout.position(6, 1, 0);
        let mut s = StateVector::basis(layout, pos);
        apply_primitive(&mut s, Primitive::Qft, None).unwrap();
        assert_eq!(s.amplitudes()[pos], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn qft_rejects_small_register() {
        let layout = QubitLayout::with_index_qubits(1, 2, 6).unwrap();
        let mut s = StateVector::zero(layout);
        assert_eq!(
            apply_primitive(&mut s, Primitive::Qft, None),
            Err(Error::IndexRegisterTooSmall { m: 6, qubits: 2 })
        );
    }

    #[test]
    fn query_requires_matching_function() {
        let mut s = StateVector::zero(QubitLayout::data_only(3));
        assert_eq!(
            apply_primitive(&mut s, Primitive::Query, None),
            Err(Error::MissingFunction)
        );
        let f = BooleanFunction::zero(2);
        assert!(matches!(
            apply_primitive(&mut s, Primitive::Query, Some(&f)),
            Err(Error::RegisterMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn standard_query_identities() {
        let layout = QubitLayout::data_only(3).with_ancilla();
        let mut rng = seeded_rng(3);

        // f ≡ 0 is the identity.
        let x = random_state(layout, &mut rng);
        let mut y = x.clone();
        apply_standard_query(&mut y, &BooleanFunction::zero(3)).unwrap();
        assert_eq!(x, y);

        // ancilla |0⟩ flips to |1⟩ for f ≡ 1.
        let mut s = StateVector::basis(layout, layout.position(0, 4, 0));
        apply_standard_query(&mut s, &BooleanFunction::one(3)).unwrap();
        assert_eq!(
            s.amplitudes()[layout.position(0, 4, 1)],
            Complex64::new(1.0, 0.0)
        );

        // With the ancilla in (|1⟩ - |0⟩)/√2 the bit flip acts as the phase query.
        let f = random_function(3, &mut rng);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let data: Vec<Complex64> = (0..8)
            .map(|_| Complex64::new(rng.random::<f64>(), rng.random::<f64>()))
            .collect();
        let norm = libm::sqrt(data.iter().map(|a| a.norm_sqr()).sum::<f64>());
        let mut amps = Vec::new();
        for d in &data {
            amps.push(-d / norm * h);
            amps.push(d / norm * h);
        }
        let mut bitflip = StateVector::from_amplitudes(layout, amps).unwrap();
        let mut phase = bitflip.clone();
        apply_standard_query(&mut bitflip, &f).unwrap();
        apply_primitive(&mut phase, Primitive::Query, Some(&f)).unwrap();
        assert!(bitflip.distance(&phase) <= 1e-12);

        let mut plain = StateVector::zero(QubitLayout::data_only(3));
        assert_eq!(apply_standard_query(&mut plain, &f), Err(Error::NoAncilla));
    }

    #[test]
    fn grover_fixes_uniform_state_for_constant_functions() {
        let layout = QubitLayout::data_only(3);
        let mut psi = StateVector::zero(layout);
        apply_primitive(&mut psi, Primitive::WalshHadamard, None).unwrap();

        let mut s = psi.clone();
        apply_grover(&mut s, &BooleanFunction::zero(3)).unwrap();
        assert!(s.distance(&psi) <= 1e-12);

        let mut s = psi.clone();
        apply_grover(&mut s, &BooleanFunction::one(3)).unwrap();
        let mut neg = psi.clone();
        neg.scale(Complex64::new(-1.0, 0.0));
        assert!(s.distance(&neg) <= 1e-12);
    }

    #[test]
    fn lambda_matches_sequential_grover() {
        let mut rng = seeded_rng(4);
        let f = random_function(3, &mut rng);
        let layout = QubitLayout::new(3, 4).unwrap();
        let data = random_state(QubitLayout::data_only(3), &mut rng);

        let mut amps = vec![Complex64::new(0.0, 0.0); layout.dim()];
        amps[3 * 8..4 * 8].copy_from_slice(data.amplitudes());
        let mut joint = StateVector::from_amplitudes(layout, amps).unwrap();
        assert_eq!(apply_lambda(&mut joint, &f).unwrap(), 3);

        let mut expected = data;
        for _ in 0..3 {
            apply_grover(&mut expected, &f).unwrap();
        }
        let got = &joint.amplitudes()[3 * 8..4 * 8];
        let err: f64 = got
            .iter()
            .zip(expected.amplitudes())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        assert!(libm::sqrt(err) <= 1e-12);
    }

    #[test]
    fn lambda_even_powers_of_zero_function_and_block_zero() {
        let mut rng = seeded_rng(5);
        let layout = QubitLayout::new(3, 7).unwrap();
        let x = random_state(layout, &mut rng);
        let mut y = x.clone();
        apply_lambda(&mut y, &BooleanFunction::zero(3)).unwrap();
        // Q_0 is a reflection, so even powers act trivially.
        for j in (0..7).step_by(2) {
            let r = j * 8..(j + 1) * 8;
            let d: f64 = x.amplitudes()[r.clone()]
                .iter()
                .zip(&y.amplitudes()[r])
                .map(|(a, b)| (a - b).norm_sqr())
                .sum();
            assert!(libm::sqrt(d) <= 1e-12);
        }

        let layout = QubitLayout::new(2, 2).unwrap();
        let f = random_function(2, &mut rng);
        let x = StateVector::basis(layout, layout.position(0, 3, 0));
        let mut y = x.clone();
        apply_lambda(&mut y, &f).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn every_operator_preserves_norm() {
        let mut rng = seeded_rng(6);
        for &(n, m) in &[(1u32, 1u64), (2, 3), (3, 5), (4, 8), (5, 11)] {
            let f = random_function(n, &mut rng);
            let mut s = random_state(QubitLayout::new(n, m).unwrap(), &mut rng);
            for p in [
                Primitive::S0,
                Primitive::WalshHadamard,
                Primitive::Qft,
                Primitive::QftInverse,
                Primitive::Query,
            ] {
                apply_primitive(&mut s, p, Some(&f)).unwrap();
                assert!((s.norm_sqr() - 1.0).abs() < UNIT);
            }
            apply_grover(&mut s, &f).unwrap();
            assert!((s.norm_sqr() - 1.0).abs() < UNIT);
            apply_lambda(&mut s, &f).unwrap();
            assert!((s.norm_sqr() - 1.0).abs() < UNIT);
        }
    }
}
