//! Closed-form single-qubit dynamics under a static longitudinal plus
//! rotating transverse field, conditioned on bath sectors.
//!
//! Per sector with shift b the rotating-frame generator is
//! H = −Δ S^z + ω₁ S^x with Δ = ω − (ω₀ + b), giving the generalized Rabi
//! frequency Ω = √(ω₁² + Δ²). Lab-frame propagators carry the extra frame
//! factor diag(e^{−iωt/2}, e^{+iωt/2}) from U(t) = exp(−iHt).

use ndarray::{array, Array2};
use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::ops::{c, I};
use crate::sector::SectorSpectrum;
use crate::types::{FieldConfig, QubitState};

/// Per-sector propagator with its cached scalars.
#[derive(Debug, Clone)]
pub struct SectorUnitary {
    /// Lab-frame 2×2 unitary U_i(t).
    pub matrix: Array2<C64>,
    /// Detuning Δ_i = ω − (ω₀ + shift).
    pub delta: f64,
    /// Generalized Rabi frequency Ω_i = √(ω₁² + Δ_i²).
    pub rabi: f64,
    /// f_i(t) = (ω₁/Ω_i)·sin(Ω_i t/2); |f_i| is the transition amplitude.
    pub f: f64,
}

#[derive(Clone, Copy)]
struct SectorScalars {
    delta: f64,
    rabi: f64,
    cos_half: f64,
    sin_half: f64,
    f: f64,
}

fn scalars(field: &FieldConfig, shift: f64, t: f64) -> SectorScalars {
    let delta = field.omega - (field.omega0 + shift);
    let rabi = (field.omega1 * field.omega1 + delta * delta).sqrt();
    let (sin_half, cos_half) = (0.5 * rabi * t).sin_cos();
    let f = if rabi == 0.0 { 0.0 } else { field.omega1 / rabi * sin_half };
    SectorScalars { delta, rabi, cos_half, sin_half, f }
}

/// Rotating-frame propagator exp(−iHt) for H = −Δ S^z + ω₁ S^x:
/// cos(Ωt/2)·𝕀 + i·(sin(Ωt/2)/Ω)·(Δσ_z − ω₁σ_x).
fn rotating_unitary(s: &SectorScalars, omega1: f64) -> Array2<C64> {
    if s.rabi == 0.0 {
        return Array2::eye(2);
    }
    let a = c(s.cos_half) + I * c(s.sin_half * s.delta / s.rabi);
    let b = -I * c(s.sin_half * omega1 / s.rabi);
    array![[a, b], [b, a.conj()]]
}

fn frame_phases(omega: f64, t: f64) -> (C64, C64) {
    // W†(t) = exp(−iωt S^z) = diag(e^{−iωt/2}, e^{+iωt/2})
    let half = C64::from_polar(1.0, -0.5 * omega * t);
    (half, half.conj())
}

/// Lab-frame propagator for one bath sector.
pub fn sector_unitary(field: &FieldConfig, shift: f64, t: f64) -> SectorUnitary {
    let s = scalars(field, shift, t);
    let mut u = rotating_unitary(&s, field.omega1);
    let (p_up, p_dn) = frame_phases(field.omega, t);
    u.row_mut(0).mapv_inplace(|v| v * p_up);
    u.row_mut(1).mapv_inplace(|v| v * p_dn);
    SectorUnitary { matrix: u, delta: s.delta, rabi: s.rabi, f: s.f }
}

/// Free (zero bath coupling) lab-frame propagator.
pub fn free_unitary(field: &FieldConfig, t: f64) -> Array2<C64> {
    sector_unitary(field, 0.0, t).matrix
}

/// Transition probability |⟨↓|U(t)|↑⟩|² = (ω₁²/Ω²)·sin²(Ωt/2) for free
/// evolution.
pub fn free_transition_probability(field: &FieldConfig, t: f64) -> f64 {
    let s = scalars(field, 0.0, t);
    s.f * s.f
}

/// Bath-averaged reduced state Σᵢ wᵢ Uᵢ ρ₀ Uᵢ†.
pub fn reduced_state(
    field: &FieldConfig,
    spectrum: &SectorSpectrum,
    rho0: &QubitState,
    t: f64,
) -> Result<QubitState> {
    let r = rho0.matrix();
    let (r00, r01, r11) = (r[[0, 0]], r[[0, 1]], r[[1, 1]]);
    let mut a00 = C64::new(0.0, 0.0);
    let mut a01 = C64::new(0.0, 0.0);
    let mut a11 = C64::new(0.0, 0.0);
    let (p_up, p_dn) = frame_phases(field.omega, t);
    for sec in spectrum.sectors() {
        let s = scalars(field, sec.shift, t);
        // rotating-frame U entries; the diagonal frame factor is applied
        // to the accumulated matrix afterwards (it is sector-independent)
        let (ua, ub) = if s.rabi == 0.0 {
            (c(1.0), c(0.0))
        } else {
            (
                c(s.cos_half) + I * c(s.sin_half * s.delta / s.rabi),
                -I * c(s.sin_half * field.omega1 / s.rabi),
            )
        };
        // U ρ U† with U = [[ua, ub], [ub, ua*]]
        let w = c(sec.weight);
        a00 += w
            * (ua * r00 * ua.conj() + ua * r01 * ub.conj()
                + ub * r01.conj() * ua.conj()
                + ub * r11 * ub.conj());
        a01 += w
            * (ua * r00 * ub.conj() + ua * r01 * ua
                + ub * r01.conj() * ub.conj()
                + ub * r11 * ua);
        a11 += w
            * (ub * r00 * ub.conj() + ub * r01 * ua
                + ua.conj() * r01.conj() * ub.conj()
                + ua.conj() * r11 * ua);
    }
    let m01 = p_up * a01 * p_dn.conj();
    let matrix = array![[a00, m01], [m01.conj(), a11]];
    QubitState::new(matrix)
}

/// Bath-averaged transition probability Σᵢ wᵢ (ω₁²/Ωᵢ²)·sin²(Ωᵢt/2) from
/// the initial state |↑⟩.
pub fn transition_probability(field: &FieldConfig, spectrum: &SectorSpectrum, t: f64) -> f64 {
    spectrum
        .sectors()
        .iter()
        .map(|sec| {
            let s = scalars(field, sec.shift, t);
            sec.weight * s.f * s.f
        })
        .sum()
}

/// Lab-frame Bloch polarization vector (Pˣ, Pʸ, Pᶻ) at time t for the
/// initial state |↑⟩.
///
/// Pᶻ = Σᵢ wᵢ (1 − 2fᵢ²) is frame-invariant. The transverse components are
/// the lab-frame expressions for U(t) = exp(−iHt); relative to the source
/// formulas (which use exp(+iHt)) they are complex-conjugated, which flips
/// the sign of Pʸ and the Δ/Ω cross terms. |P⃗| is unaffected; the
/// brute-force oracle arbitrates the frame (see the errata chapter).
pub fn polarizations(field: &FieldConfig, spectrum: &SectorSpectrum, t: f64) -> [f64; 3] {
    let (sin_wt, cos_wt) = (field.omega * t).sin_cos();
    let mut p = [0.0f64; 3];
    for sec in spectrum.sectors() {
        let s = scalars(field, sec.shift, t);
        let ratio = if s.rabi == 0.0 { 0.0 } else { s.delta / s.rabi };
        p[0] += sec.weight * 2.0 * s.f * (s.cos_half * sin_wt - ratio * s.sin_half * cos_wt);
        p[1] -= sec.weight * 2.0 * s.f * (s.cos_half * cos_wt + ratio * s.sin_half * sin_wt);
        p[2] += sec.weight * (1.0 - 2.0 * s.f * s.f);
    }
    p
}

/// Long-time closed form for Pᶻ(t) at resonance (ω = ω₀) with a large
/// uniform unpolarized bath of N spins and per-spin coupling g:
///
/// Pᶻ(t) ≈ cos(ω₁t + ½·arctan(γ′t))/(1+γ′²t²)^{1/4}
///         + γ·(1 − cos(ω₁t + (3/2)·arctan(γ′t))/(1+γ′²t²)^{3/4})
///
/// with γ = Ng²/(4ω₁²) and γ′ = γω₁ = Ng²/(4ω₁). The γ′ convention is
/// fixed by the stationary-phase reduction of the exact binomial sum (the
/// source text prints the dimensionally ambiguous "tan⁻¹ γωt"); it is
/// verified against the exact collapsed-spectrum sum at N = 2000.
pub fn pz_asymptotic(omega1: f64, n: usize, g: f64, t: f64) -> f64 {
    let gamma = n as f64 * g * g / (4.0 * omega1 * omega1);
    let gamma_p = gamma * omega1;
    let x = gamma_p * t;
    let env = 1.0 + x * x;
    let phase = x.atan();
    (omega1 * t + 0.5 * phase).cos() / env.powf(0.25)
        + gamma * (1.0 - (omega1 * t + 1.5 * phase).cos() / env.powf(0.75))
}

/// Joint qubit–bath amplitudes (a₊, b₊, a₋, b₋) for a single bath spin
/// initially in (|↑⟩+|↓⟩)/√2 with the qubit in |↑⟩:
/// |ψ(t)⟩ = a₊|↑↑⟩ + b₊|↓↑⟩ + a₋|↑↓⟩ + b₋|↓↓⟩.
pub fn one_bath_spin_amplitudes(field: &FieldConfig, g1: f64, t: f64) -> [C64; 4] {
    let norm = c(1.0 / 2f64.sqrt());
    let (p_up, p_dn) = frame_phases(field.omega, t);
    let mut out = [C64::new(0.0, 0.0); 4];
    for (idx, shift) in [(0usize, 0.5 * g1), (1, -0.5 * g1)] {
        let s = scalars(field, shift, t);
        let (ua, ub) = if s.rabi == 0.0 {
            (c(1.0), c(0.0))
        } else {
            (
                c(s.cos_half) + I * c(s.sin_half * s.delta / s.rabi),
                -I * c(s.sin_half * field.omega1 / s.rabi),
            )
        };
        out[2 * idx] = norm * p_up * ua; // qubit stays up
        out[2 * idx + 1] = norm * p_dn * ub; // qubit flipped down
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;
    use crate::sector::{collapse_uniform, enumerate_sectors};
    use crate::types::{make_bath, CouplingModel};
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn field(omega0: f64, omega1: f64, omega: f64) -> FieldConfig {
        FieldConfig::new(omega0, omega1, omega).unwrap()
    }

    fn unitarity_defect(u: &Array2<C64>) -> f64 {
        let p = ops::dagger(u).dot(u);
        let mut d = 0.0f64;
        for i in 0..u.nrows() {
            for j in 0..u.ncols() {
                let e = if i == j { 1.0 } else { 0.0 };
                d = d.max((p[[i, j]] - ops::c(e)).norm());
            }
        }
        d
    }

    #[test]
    fn free_unitary_identity_at_t0() {
        let u = free_unitary(&field(1000.0, 10.0, 995.0), 0.0);
        assert!(unitarity_defect(&u) < 1e-14);
        assert_abs_diff_eq!(u[[0, 0]].re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(u[[0, 1]].norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn resonant_pi_pulse_flips_the_spin() {
        let f = field(1000.0, 10.0, 1000.0);
        let u = free_unitary(&f, PI / 10.0);
        assert_abs_diff_eq!(u[[1, 0]].norm_sqr(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(free_transition_probability(&f, PI / 10.0), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn no_drive_preserves_populations() {
        let f = field(1000.0, 0.0, 990.0);
        for t in [0.1, 0.5, 2.0] {
            let u = free_unitary(&f, t);
            assert_abs_diff_eq!(u[[0, 1]].norm(), 0.0, epsilon = 1e-14);
            assert_abs_diff_eq!(u[[1, 0]].norm(), 0.0, epsilon = 1e-14);
            assert_abs_diff_eq!(free_transition_probability(&f, t), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn detuned_maximum_is_half_at_equal_detuning() {
        let f = field(1000.0, 10.0, 1010.0); // delta0 = 10 = omega1
        let rabi = (200f64).sqrt();
        assert_abs_diff_eq!(free_transition_probability(&f, PI / rabi), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn sector_unitary_reduces_to_free_and_is_unitary() {
        let f = field(1000.0, 10.0, 998.0);
        let su = sector_unitary(&f, 0.0, 0.37);
        let fu = free_unitary(&f, 0.37);
        for (a, b) in su.matrix.iter().zip(fu.iter()) {
            assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-14);
        }
        for shift in [-3.0, 0.0, 7.5] {
            for t in [0.0, 0.01, 1.3, 10.0] {
                let su = sector_unitary(&f, shift, t);
                assert!(unitarity_defect(&su.matrix) < 1e-12);
                assert!(su.f.abs() <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn one_bath_spin_sector_detunings() {
        let f = field(1000.0, 10.0, 995.0);
        let g1 = 8.0;
        let plus = sector_unitary(&f, 0.5 * g1, 0.2);
        let minus = sector_unitary(&f, -0.5 * g1, 0.2);
        assert_abs_diff_eq!(plus.delta, f.omega - (f.omega0 + g1 / 2.0), epsilon = 1e-12);
        assert_abs_diff_eq!(minus.delta, f.omega - (f.omega0 - g1 / 2.0), epsilon = 1e-12);
    }

    #[test]
    fn reduced_state_trivial_cases() {
        let f = field(1000.0, 10.0, 1000.0);
        let spec = SectorSpectrum::trivial();
        let rho0 = QubitState::up();
        let r = reduced_state(&f, &spec, &rho0, 0.0).unwrap();
        assert_abs_diff_eq!(r.matrix()[[0, 0]].re, 1.0, epsilon = 1e-14);
        // single-sector evolution stays pure
        let r = reduced_state(&f, &spec, &rho0, 0.123).unwrap();
        let purity = crate::measures::purity(r.matrix());
        assert_abs_diff_eq!(purity, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn transition_probability_routes_agree() {
        let f = field(1000.0, 10.0, 997.0);
        let bath = make_bath(8, 0.3, CouplingModel::GaussianProfile { g: 12.0, alpha: 0.02 })
            .unwrap();
        let spec = enumerate_sectors(&bath).unwrap();
        for t in [0.0, 0.05, 0.31, 1.7] {
            let p1 = transition_probability(&f, &spec, t);
            let rho = reduced_state(&f, &spec, &QubitState::up(), t).unwrap();
            let p2 = rho.matrix()[[1, 1]].re;
            assert_abs_diff_eq!(p1, p2, epsilon = 1e-12);
            assert!((0.0..=1.0 + 1e-12).contains(&p1));
        }
    }

    #[test]
    fn fast_path_matches_enumeration() {
        let f = field(1000.0, 10.0, 1002.0);
        let n = 12;
        let g = 40.0 / n as f64;
        let bath = make_bath(n, 0.5, CouplingModel::Uniform { g }).unwrap();
        let enumerated = enumerate_sectors(&bath).unwrap();
        let collapsed = collapse_uniform(n, g, 0.5).unwrap();
        for t in [0.07, 0.5, 2.0] {
            let a = reduced_state(&f, &enumerated, &QubitState::up(), t).unwrap();
            let b = reduced_state(&f, &collapsed, &QubitState::up(), t).unwrap();
            assert!(ops::trace_distance(a.matrix(), b.matrix()) < 1e-12);
        }
    }

    #[test]
    fn polarization_trivial_limits() {
        let f = field(1000.0, 10.0, 1000.0);
        let spec = SectorSpectrum::trivial();
        let p = polarizations(&f, &spec, 0.0);
        assert_abs_diff_eq!(p[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(p[1], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(p[2], 1.0, epsilon = 1e-14);
        // resonant Rabi precession: Pz = cos(omega1 t)
        for t in [0.03, 0.21, 0.77] {
            let p = polarizations(&f, &spec, t);
            assert_abs_diff_eq!(p[2], (10.0 * t).cos(), epsilon = 1e-12);
            let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn polarizations_match_reduced_state_bloch_vector() {
        let f = field(1000.0, 10.0, 996.0);
        let bath = make_bath(6, -0.4, CouplingModel::Uniform { g: 3.0 }).unwrap();
        let spec = enumerate_sectors(&bath).unwrap();
        for t in [0.0, 0.11, 0.9, 3.0] {
            let p = polarizations(&f, &spec, t);
            let b = reduced_state(&f, &spec, &QubitState::up(), t).unwrap().bloch_vector();
            for m in 0..3 {
                assert_abs_diff_eq!(p[m], b[m], epsilon = 1e-12);
            }
            assert!((p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn asymptotic_form_basics() {
        assert_abs_diff_eq!(pz_asymptotic(10.0, 2000, 0.2236, 0.0), 1.0, epsilon = 1e-12);
        // envelope bound on the oscillatory part
        let omega1 = 10.0;
        let n = 2000;
        let g = (4.0 * 0.25 * omega1 * omega1 / n as f64).sqrt();
        let gamma = 0.25;
        let gamma_p = gamma * omega1;
        for t in [5.0, 10.0, 20.0] {
            let v = pz_asymptotic(omega1, n, g, t);
            let env = (1.0 + gamma_p * gamma_p * t * t).powf(-0.25);
            assert!((v - gamma).abs() <= env + gamma * (1.0 + gamma_p * gamma_p * t * t).powf(-0.75) + 1e-12);
        }
    }

    #[test]
    fn one_bath_spin_amplitudes_examples() {
        let f = field(1000.0, 10.0, 995.0);
        let a = one_bath_spin_amplitudes(&f, 8.0, 0.0);
        let r = 1.0 / 2f64.sqrt();
        assert_abs_diff_eq!(a[0].re, r, epsilon = 1e-14);
        assert_abs_diff_eq!(a[1].norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(a[2].re, r, epsilon = 1e-14);
        assert_abs_diff_eq!(a[3].norm(), 0.0, epsilon = 1e-14);
        // norm 1 at arbitrary parameters
        for t in [0.01, 0.4, 2.2] {
            let a = one_bath_spin_amplitudes(&f, 8.0, t);
            let n: f64 = a.iter().map(|z| z.norm_sqr()).sum();
            assert_abs_diff_eq!(n, 1.0, epsilon = 1e-12);
        }
        // omega = omega0 - g1/2 with g1 >> omega1: the bath-down branch is
        // resonant (qubit flips to b-) while the bath-up branch is frozen
        // (a+ survives), so a pi pulse leaves ~(|↑↑⟩ + e^{iφ}|↓↓⟩)/√2
        let g1 = 1000.0;
        let f = field(1000.0, 10.0, 1000.0 - g1 / 2.0);
        let a = one_bath_spin_amplitudes(&f, g1, PI / 10.0);
        assert!(a[1].norm() < 0.05, "b+ should nearly vanish, got {}", a[1].norm());
        assert!(a[2].norm() < 0.05, "a- should nearly vanish, got {}", a[2].norm());
        assert!(a[0].norm_sqr() > 0.45 && a[3].norm_sqr() > 0.45);
        // GHZ-like branch structure is maximally entangling
        assert!(crate::measures::pure_concurrence_amplitudes(&a) > 0.95);
    }
}
