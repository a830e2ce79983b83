//! Domain types and validated constructors shared by all engines.
//!
//! # Units
//!
//! ħ = 1. Every frequency-like quantity (`omega0`, `omega1`, `omega`, the
//! couplings `g`, the exchange `J`) is an angular frequency in rad·µs⁻¹ and
//! time is in µs. Figure captions in the source literature label the same
//! numbers "MHz" without 2π factors, so values can be read straight off.
//!
//! Time evolution follows the standard sign convention U(t) = exp(−iHt).

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::ops;

pub(crate) const TRACE_TOL: f64 = 1e-12;
pub(crate) const HERM_TOL: f64 = 1e-12;
/// Eigenvalues in [−PSD_TOL, 0) are treated as floating-point dust and
/// clamped to zero for measure computations; anything below is an error.
pub(crate) const PSD_TOL: f64 = 1e-10;

/// The three field parameters of the drive Hamiltonian: static longitudinal
/// field `omega0`, transverse (rotating) field amplitude `omega1`, and the
/// rotation frequency `omega` of the transverse field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConfig {
    pub omega0: f64,
    pub omega1: f64,
    pub omega: f64,
}

impl FieldConfig {
    pub fn new(omega0: f64, omega1: f64, omega: f64) -> Result<Self> {
        for (name, v) in [("omega0", omega0), ("omega1", omega1), ("omega", omega)] {
            if !v.is_finite() {
                return Err(Error::validation(name, "must be finite"));
            }
        }
        if omega1 < 0.0 {
            return Err(Error::validation("omega1", "must be non-negative"));
        }
        Ok(FieldConfig { omega0, omega1, omega })
    }

    /// Detuning Δ₀ = ω − ω₀ of the drive from the bare qubit splitting.
    pub fn detuning(&self) -> f64 {
        self.omega - self.omega0
    }
}

/// Distribution of qubit–bath coupling strengths.
///
/// `Uniform { g }` is a *per-spin* coupling. `GaussianProfile { g, alpha }`
/// holds the *total* strength: the materialized couplings follow
/// g_k ∝ exp(−α k²) for k = 1..N and are normalized so that Σₖ g_k = g.
#[derive(Debug, Clone, PartialEq)]
pub enum CouplingModel {
    Uniform { g: f64 },
    GaussianProfile { g: f64, alpha: f64 },
    Explicit { g_list: Vec<f64> },
}

impl CouplingModel {
    /// Concrete per-spin coupling strengths for a bath of `n` spins.
    pub fn materialize(&self, n: usize) -> Result<Vec<f64>> {
        match self {
            CouplingModel::Uniform { g } => {
                if *g < 0.0 {
                    return Err(Error::validation("g", "must be non-negative"));
                }
                Ok(vec![*g; n])
            }
            CouplingModel::GaussianProfile { g, alpha } => {
                if *g < 0.0 {
                    return Err(Error::validation("g", "must be non-negative"));
                }
                let raw: Vec<f64> =
                    (1..=n).map(|k| (-alpha * (k * k) as f64).exp()).collect();
                let sum: f64 = raw.iter().sum();
                if sum <= 0.0 {
                    return Err(Error::validation("alpha", "profile mass underflowed to zero"));
                }
                Ok(raw.into_iter().map(|r| r * g / sum).collect())
            }
            CouplingModel::Explicit { g_list } => {
                if g_list.len() != n {
                    return Err(Error::validation(
                        "g_list",
                        format!("length {} does not match n_spins {}", g_list.len(), n),
                    ));
                }
                Ok(g_list.clone())
            }
        }
    }
}

/// A bath of `n_spins` spin-1/2 particles with common polarization
/// `polarization` ∈ [−1, 1] and materialized per-spin couplings.
///
/// The bath state is the product ρ_B = ⊗ₖ [(1+P_B)/2 |↑⟩⟨↑| + (1−P_B)/2 |↓⟩⟨↓|].
#[derive(Debug, Clone, PartialEq)]
pub struct BathConfig {
    n_spins: usize,
    polarization: f64,
    coupling: CouplingModel,
    couplings: Vec<f64>,
}

/// Largest bath for which exhaustive 2^N sector enumeration is allowed.
pub const EXHAUSTIVE_CAP: usize = 24;

/// Build a validated bath. `n` must satisfy 1 ≤ n (exhaustive enumeration
/// paths additionally require n ≤ [`EXHAUSTIVE_CAP`]); |p| ≤ 1.
pub fn make_bath(n: usize, p: f64, coupling: CouplingModel) -> Result<BathConfig> {
    if n == 0 {
        return Err(Error::validation("n_spins", "must be at least 1"));
    }
    if !(-1.0..=1.0).contains(&p) {
        return Err(Error::validation("polarization", "must lie in [-1, 1]"));
    }
    let couplings = coupling.materialize(n)?;
    Ok(BathConfig { n_spins: n, polarization: p, coupling, couplings })
}

impl BathConfig {
    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    pub fn polarization(&self) -> f64 {
        self.polarization
    }

    pub fn coupling(&self) -> &CouplingModel {
        &self.coupling
    }

    /// Materialized per-spin couplings g_k, k = 0..N−1.
    pub fn couplings(&self) -> &[f64] {
        &self.couplings
    }
}

/// Validate Hermiticity, unit trace, and positivity of a dim×dim matrix.
pub fn check_density_matrix(m: &Array2<C64>, dim: usize) -> Result<()> {
    if m.shape() != [dim, dim] {
        return Err(Error::InvalidState(format!(
            "expected {dim}x{dim} matrix, got {:?}",
            m.shape()
        )));
    }
    let herm = ops::hermiticity_defect(m);
    if herm > HERM_TOL {
        return Err(Error::InvalidState(format!("Hermiticity defect {herm:.3e}")));
    }
    let tr = ops::trace(m);
    if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
        return Err(Error::InvalidState(format!("trace {tr} is not 1")));
    }
    let min = ops::hermitian_eigenvalues(m)
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    if min < -PSD_TOL {
        return Err(Error::InvalidState(format!("negative eigenvalue {min:.3e}")));
    }
    Ok(())
}

/// A validated 2×2 density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitState {
    matrix: Array2<C64>,
}

impl QubitState {
    pub fn new(matrix: Array2<C64>) -> Result<Self> {
        check_density_matrix(&matrix, 2)?;
        Ok(QubitState { matrix })
    }

    /// |↑⟩⟨↑|
    pub fn up() -> Self {
        QubitState { matrix: ops::projector(&Array1::from(vec![ops::ONE, ops::ZERO])) }
    }

    /// Pure state from normalized amplitudes (a|↑⟩ + b|↓⟩).
    pub fn pure(a: C64, b: C64) -> Result<Self> {
        let n = a.norm_sqr() + b.norm_sqr();
        if (n - 1.0).abs() > 1e-10 {
            return Err(Error::validation("amplitudes", "not normalized"));
        }
        Ok(QubitState { matrix: ops::projector(&Array1::from(vec![a, b])) })
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.matrix
    }

    /// Bloch polarization vector P^m = 2 Tr[ρ S^m].
    pub fn bloch_vector(&self) -> [f64; 3] {
        let m = &self.matrix;
        [
            2.0 * m[[0, 1]].re,
            -2.0 * m[[0, 1]].im,
            (m[[0, 0]] - m[[1, 1]]).re,
        ]
    }
}

/// A validated 4×4 two-qubit density matrix in the product basis
/// (|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩).
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitState {
    matrix: Array2<C64>,
}

/// Polarization parametrization of a two-qubit state: the two vector
/// polarizations P⃗₁ = 2Tr[ρS⃗₁], P⃗₂ = 2Tr[ρS⃗₂] and the tensor polarization
/// Π^{mn} = 4Tr[ρ S₁^m S₂^n].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polarizations {
    pub p1: [f64; 3],
    pub p2: [f64; 3],
    pub pi: [[f64; 3]; 3],
}

impl TwoQubitState {
    pub fn new(matrix: Array2<C64>) -> Result<Self> {
        check_density_matrix(&matrix, 4)?;
        Ok(TwoQubitState { matrix })
    }

    pub fn from_vector(psi: &Array1<C64>) -> Result<Self> {
        let n: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if (n - 1.0).abs() > 1e-10 {
            return Err(Error::validation("psi", "not normalized"));
        }
        Ok(TwoQubitState { matrix: ops::projector(psi) })
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.matrix
    }

    /// Vector and tensor polarizations of the state. Both are real for any
    /// Hermitian ρ since each spin-operator product is itself Hermitian.
    pub fn polarizations(&self) -> Polarizations {
        let rho = &self.matrix;
        let mut p1 = [0.0; 3];
        let mut p2 = [0.0; 3];
        let mut pi = [[0.0; 3]; 3];
        for m in 0..3 {
            p1[m] = 2.0 * ops::trace(&rho.dot(&ops::spin1(m))).re;
            p2[m] = 2.0 * ops::trace(&rho.dot(&ops::spin2(m))).re;
            for n in 0..3 {
                let op = ops::spin1(m).dot(&ops::spin2(n));
                pi[m][n] = 4.0 * ops::trace(&rho.dot(&op)).re;
            }
        }
        Polarizations { p1, p2, pi }
    }

    /// Reconstruct ρ = 𝕀/4 + ½P⃗₁·S⃗₁ + ½P⃗₂·S⃗₂ + Σ Π^{mn} S₁^m S₂^n.
    ///
    /// Eigenvalues in [−10⁻¹⁰, 0) from floating-point dust are clamped to
    /// zero before validation.
    pub fn from_polarizations(p: &Polarizations) -> Result<Self> {
        let mut rho = ops::eye(4).mapv(|v| v * 0.25);
        for m in 0..3 {
            rho = rho + ops::spin1(m).mapv(|v| v * 0.5 * p.p1[m]);
            rho = rho + ops::spin2(m).mapv(|v| v * 0.5 * p.p2[m]);
            for n in 0..3 {
                let op = ops::spin1(m).dot(&ops::spin2(n));
                rho = rho + op.mapv(|v| v * p.pi[m][n]);
            }
        }
        let rho = clamp_psd(&rho)?;
        TwoQubitState::new(rho)
    }

    pub fn purity(&self) -> f64 {
        ops::trace(&self.matrix.dot(&self.matrix)).re
    }
}

/// Project tiny negative eigenvalues (≥ −10⁻¹⁰) of a Hermitian matrix to
/// zero and renormalize the trace to 1. Larger violations are an error.
pub(crate) fn clamp_psd(rho: &Array2<C64>) -> Result<Array2<C64>> {
    let (vals, vecs) = ops::hermitian_eigensystem(rho);
    let mut clamped = vals;
    for v in clamped.iter_mut() {
        if *v < -PSD_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {v:.3e}")));
        }
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    let total: f64 = clamped.iter().sum();
    if total <= 0.0 {
        return Err(Error::InvalidState("zero-trace state after clamping".into()));
    }
    let n = rho.nrows();
    let mut out = Array2::<C64>::zeros((n, n));
    for (k, lam) in clamped.iter().enumerate() {
        let col = vecs.column(k);
        for i in 0..n {
            for j in 0..n {
                out[[i, j]] += col[i] * col[j].conj() * (lam / total);
            }
        }
    }
    Ok(out)
}

/// The four maximally entangled two-qubit states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    /// (|↑↓⟩ − |↓↑⟩)/√2
    Singlet,
    /// (|↑↓⟩ + |↓↑⟩)/√2
    TripletZero,
    /// (|↑↑⟩ + |↓↓⟩)/√2
    PhiPlus,
    /// (|↑↑⟩ − |↓↓⟩)/√2
    PhiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] =
        [BellState::Singlet, BellState::TripletZero, BellState::PhiPlus, BellState::PhiMinus];

    /// State vector in the product basis.
    pub fn vector(&self) -> Array1<C64> {
        let r = 1.0 / 2f64.sqrt();
        let (a, b, c_, d) = match self {
            BellState::Singlet => (0.0, r, -r, 0.0),
            BellState::TripletZero => (0.0, r, r, 0.0),
            BellState::PhiPlus => (r, 0.0, 0.0, r),
            BellState::PhiMinus => (r, 0.0, 0.0, -r),
        };
        Array1::from(vec![ops::c(a), ops::c(b), ops::c(c_), ops::c(d)])
    }
}

/// Density matrix of a Bell state.
pub fn bell_state(which: BellState) -> TwoQubitState {
    TwoQubitState::from_vector(&which.vector()).expect("Bell states are normalized")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn make_bath_validates_ranges() {
        assert!(make_bath(0, 0.0, CouplingModel::Uniform { g: 1.0 }).is_err());
        assert!(make_bath(4, 1.5, CouplingModel::Uniform { g: 1.0 }).is_err());
        assert!(make_bath(4, 0.0, CouplingModel::Uniform { g: -1.0 }).is_err());
        assert!(make_bath(3, 0.0, CouplingModel::Explicit { g_list: vec![1.0, 2.0] }).is_err());
        // single-spin zero-coupling bath is valid
        let b = make_bath(1, 0.0, CouplingModel::Uniform { g: 0.0 }).unwrap();
        assert_eq!(b.couplings(), &[0.0]);
    }

    #[test]
    fn gaussian_profile_normalizes_to_total() {
        let b = make_bath(20, 0.0, CouplingModel::GaussianProfile { g: 20.0, alpha: 0.01 })
            .unwrap();
        let sum: f64 = b.couplings().iter().sum();
        assert!((sum - 20.0).abs() <= 1e-12 * 20.0);
        // monotone decreasing profile
        for w in b.couplings().windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn bell_states_have_expected_polarizations() {
        let s = bell_state(BellState::Singlet).polarizations();
        for m in 0..3 {
            assert_abs_diff_eq!(s.p1[m], 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(s.p2[m], 0.0, epsilon = 1e-12);
            for n in 0..3 {
                let expect = if m == n { -1.0 } else { 0.0 };
                assert_abs_diff_eq!(s.pi[m][n], expect, epsilon = 1e-12);
            }
        }
        // Values fixed by direct 4x4 trace computation Tr[rho 4 S1^m S2^n].
        let pp = bell_state(BellState::PhiPlus).polarizations();
        assert_abs_diff_eq!(pp.pi[0][0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pp.pi[1][1], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pp.pi[2][2], 1.0, epsilon = 1e-12);
        let tz = bell_state(BellState::TripletZero).polarizations();
        assert_abs_diff_eq!(tz.pi[0][0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(tz.pi[1][1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(tz.pi[2][2], -1.0, epsilon = 1e-12);
    }

    #[test]
    fn bell_state_round_trips_through_polarizations() {
        for which in BellState::ALL {
            let rho = bell_state(which);
            let back = TwoQubitState::from_polarizations(&rho.polarizations()).unwrap();
            let mut defect = 0.0f64;
            for (a, b) in rho.matrix().iter().zip(back.matrix().iter()) {
                defect = defect.max((a - b).norm());
            }
            assert!(defect < 1e-12, "{which:?}: defect {defect:.3e}");
        }
    }

    #[test]
    fn pure_state_polarization_identity() {
        // P1 = P2 and P1^2 + P2^2 + sum(Pi^2) = 3 for pure states.
        for which in BellState::ALL {
            let p = bell_state(which).polarizations();
            let n1: f64 = p.p1.iter().map(|x| x * x).sum();
            let n2: f64 = p.p2.iter().map(|x| x * x).sum();
            let npi: f64 = p.pi.iter().flatten().map(|x| x * x).sum();
            assert_abs_diff_eq!(n1 + n2 + npi, 3.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn density_matrix_checks_reject_bad_input() {
        let mut m = ops::eye(2).mapv(|v| v * 0.5);
        m[[0, 1]] = ops::c(0.9); // breaks PSD and Hermiticity is kept
        m[[1, 0]] = ops::c(0.9);
        assert!(QubitState::new(m).is_err());
        let m = ops::eye(2); // trace 2
        assert!(QubitState::new(m).is_err());
    }
}
