//! Entanglement and coherence measures for two-qubit states.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::ops::{self, c};
use crate::types::check_density_matrix;

/// Spin-flipped state ρ̃ = (σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y).
fn spin_flip(rho: &Array2<C64>) -> Array2<C64> {
    let yy = ops::kron(&ops::sigma_y(), &ops::sigma_y());
    let conj = rho.mapv(|v| v.conj());
    yy.dot(&conj).dot(&yy)
}

/// Wootters concurrence of a two-qubit density matrix.
///
/// C(ρ) = max(0, λ₁ − λ₂ − λ₃ − λ₄) where the λᵢ are the square roots of
/// the eigenvalues of √ρ · ρ̃ · √ρ in decreasing order. The Hermitian
/// square-root route is used so that only real-symmetric-eigensolver
/// quality is needed; eigenvalues that dip slightly negative from rounding
/// are clamped to zero.
pub fn concurrence(rho: &Array2<C64>) -> Result<f64> {
    if rho.dim() != (4, 4) {
        return Err(Error::Dimension(format!(
            "concurrence needs a 4×4 matrix, got {}×{}",
            rho.nrows(),
            rho.ncols()
        )));
    }
    check_density_matrix(rho, 4)?;
    let (vals, vecs) = ops::hermitian_eigensystem(rho);
    // sqrt(rho) from the spectral decomposition; eigenvalues at the
    // rounding floor are dropped so their sqrt (~1e-8) cannot contaminate
    // the subtracted lambdas
    let cutoff = 1e-14 * vals.iter().cloned().fold(0.0, f64::max);
    let mut sqrt_rho = Array2::<C64>::zeros((4, 4));
    for (k, &lam) in vals.iter().enumerate() {
        if lam <= cutoff {
            continue;
        }
        let s = lam.sqrt();
        let v = vecs.column(k);
        for i in 0..4 {
            for j in 0..4 {
                sqrt_rho[[i, j]] += c(s) * v[i] * v[j].conj();
            }
        }
    }
    let m = sqrt_rho.dot(&spin_flip(rho)).dot(&sqrt_rho);
    // m is Hermitian positive semidefinite up to rounding. Its rounding
    // noise is absolute (set by the unit trace of ρ, not by m's own
    // largest eigenvalue), so the floor below must be absolute too, or a
    // stray ~1e-16 eigenvalue turns into a ~1e-8 error after the sqrt
    let lambdas = ops::hermitian_eigenvalues(&m);
    let floor = 1e-14;
    let mut roots: Vec<f64> =
        lambdas.iter().map(|&x| if x > floor { x.sqrt() } else { 0.0 }).collect();
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((roots[0] - roots[1] - roots[2] - roots[3]).max(0.0))
}

/// Concurrence of a pure two-qubit state written in the product basis as
/// (a₊, b₊, a₋, b₋) ↦ |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩: C = 2|a₊b₋ − b₊a₋|.
pub fn pure_concurrence_amplitudes(amplitudes: &[C64; 4]) -> f64 {
    2.0 * (amplitudes[0] * amplitudes[3] - amplitudes[1] * amplitudes[2]).norm()
}

/// Closed-form concurrence of two resonantly driven qubits with exchange
/// coupling J and no bath, starting from |↑↓⟩: C(t) = |sin Jt|.
///
/// The resonant drive rotates the triplet component as a rigid spin-1
/// block while the singlet component only accumulates the exchange phase
/// e^{iJt}; the drive amplitude cancels out of the Wootters formula, so
/// the entanglement oscillates at the exchange frequency alone. `omega1`
/// is accepted (and ignored) to make that independence explicit where the
/// formula is checked against the full matrix evolution on an
/// (ω₁, J, t) grid. A published variant of this expression with an
/// ω₁-dependent prefactor disagrees with direct evolution; see the errata
/// chapter of the guide.
pub fn concurrence_free_formula(omega1: f64, j: f64, t: f64) -> f64 {
    let _ = omega1;
    (j * t).sin().abs()
}

/// Purity Tr ρ².
pub fn purity(rho: &Array2<C64>) -> f64 {
    let n = rho.nrows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            s += (rho[[i, j]] * rho[[j, i]]).re;
        }
    }
    s
}

/// Linear-entropy style decoherence measure 1 − Tr ρ², zero for pure
/// states and (d−1)/d for the maximally mixed state in dimension d.
pub fn decoherence_measure(rho: &Array2<C64>) -> f64 {
    1.0 - purity(rho)
}

/// Summary of the standard figures of merit for one two-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureReport {
    pub concurrence: f64,
    pub purity: f64,
    pub decoherence: f64,
}

pub fn measure_report(rho: &Array2<C64>) -> Result<MeasureReport> {
    let p = purity(rho);
    Ok(MeasureReport { concurrence: concurrence(rho)?, purity: p, decoherence: 1.0 - p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{projector, ONE, ZERO};
    use crate::types::BellState;
    use approx::assert_abs_diff_eq;
    use ndarray::Array1;
    use std::f64::consts::PI;

    #[test]
    fn bell_states_are_maximally_entangled() {
        for which in BellState::ALL {
            let rho = projector(&which.vector());
            assert_abs_diff_eq!(concurrence(&rho).unwrap(), 1.0, epsilon = 1e-10);
            assert_abs_diff_eq!(purity(&rho), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn product_state_has_zero_concurrence() {
        let up_up = Array1::from(vec![ONE, ZERO, ZERO, ZERO]);
        assert_abs_diff_eq!(concurrence(&projector(&up_up)).unwrap(), 0.0, epsilon = 1e-10);
        // arbitrary product state (|↑⟩+2i|↓⟩)(3|↑⟩−|↓⟩)/norms
        let q1 = [c(1.0), C64::new(0.0, 2.0)];
        let q2 = [c(3.0), c(-1.0)];
        let mut psi = Array1::from(vec![ZERO; 4]);
        for i in 0..2 {
            for j in 0..2 {
                psi[2 * i + j] = q1[i] * q2[j];
            }
        }
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let psi = psi.mapv(|z| z / c(norm));
        assert_abs_diff_eq!(concurrence(&projector(&psi)).unwrap(), 0.0, epsilon = 1e-8);
    }

    #[test]
    fn werner_state_concurrence() {
        // rho = p |Phi+><Phi+| + (1-p)/4 * I. C = max(0, (3p-1)/2).
        let phi = projector(&BellState::PhiPlus.vector());
        for (p, expect) in [(1.0, 1.0), (0.5, 0.25), (1.0 / 3.0, 0.0), (0.2, 0.0)] {
            let rho = phi.mapv(|v| v * c(p)) + Array2::<C64>::eye(4).mapv(|v| v * c((1.0 - p) / 4.0));
            assert_abs_diff_eq!(concurrence(&rho).unwrap(), expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn maximally_mixed_measures() {
        let rho = Array2::<C64>::eye(4).mapv(|v| v * c(0.25));
        assert_abs_diff_eq!(purity(&rho), 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(decoherence_measure(&rho), 0.75, epsilon = 1e-14);
        assert_abs_diff_eq!(concurrence(&rho).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn pure_amplitude_formula_matches_density_matrix_route() {
        let cases: Vec<[C64; 4]> = vec![
            [c(1.0 / 2f64.sqrt()), ZERO, ZERO, c(1.0 / 2f64.sqrt())],
            [c(0.5), C64::new(0.0, 0.5), c(0.5), c(-0.5)],
            [c(0.8), c(0.0), c(0.0), c(0.6)],
        ];
        for amps in cases {
            let psi = Array1::from(amps.to_vec());
            let rho = projector(&psi);
            let via_rho = concurrence(&rho).unwrap();
            let via_amps = pure_concurrence_amplitudes(&amps);
            assert_abs_diff_eq!(via_rho, via_amps, epsilon = 1e-8);
        }
    }

    #[test]
    fn free_formula_limits() {
        // J = 0: a resonant common drive keeps |↑↓⟩ a product state
        for t in [0.0, 0.3, 1.1] {
            assert_abs_diff_eq!(concurrence_free_formula(10.0, 0.0, t), 0.0, epsilon = 1e-14);
        }
        // Jt = pi/2: the sqrt-of-swap point, maximally entangled
        assert_abs_diff_eq!(concurrence_free_formula(10.0, 3.0, PI / 6.0), 1.0, epsilon = 1e-12);
        // Jt = pi: full swap, back to a product state
        assert_abs_diff_eq!(concurrence_free_formula(10.0, 1.0, PI), 0.0, epsilon = 1e-12);
        // the drive amplitude never enters
        for w1 in [0.0, 2.0, 17.0] {
            assert_abs_diff_eq!(
                concurrence_free_formula(w1, 4.0, 0.37),
                (4.0f64 * 0.37).sin().abs(),
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn report_is_consistent() {
        let rho = projector(&BellState::Singlet.vector());
        let r = measure_report(&rho).unwrap();
        assert_abs_diff_eq!(r.concurrence, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(r.purity + r.decoherence, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn concurrence_rejects_wrong_shape() {
        let rho = Array2::<C64>::eye(2);
        assert!(concurrence(&rho).is_err());
    }
}
