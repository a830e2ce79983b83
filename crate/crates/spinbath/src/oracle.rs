//! Brute-force reference solver on the full qubit⊗bath Hilbert space.
//!
//! Nothing in this module exploits the sector structure that the rest of
//! the crate is built on: the rotating-frame Hamiltonian is materialized as
//! one dense real-symmetric matrix over all 2^(q+N) basis states and
//! diagonalized, so agreement with the closed-form sector results is a
//! genuine cross-check rather than a tautology. A second, independent
//! route integrates the time-dependent lab-frame Schrödinger equation step
//! by step without any diagonalization at all.
//!
//! The exact route extracts reduced density matrices cheaply: with
//! eigensystem H = V Λ Vᵀ, a real system state ψ and a diagonal product
//! bath state with weights w_β, the reduced matrix element is
//!
//!   ρ_S[a,c](t) = Σ_{jk} e^{−iλ_j t} e^{+iλ_k t} (B ∘ K^{ac})_{jk}
//!
//! where B = Cᵀ diag(w) C with C_{βj} = Σ_s ψ_s V[(s,β), j], and
//! K^{ac} = V_aᵀ V_c over the row blocks of V with fixed system index.
//! B and K are a handful of BLAS multiplies; after that every requested
//! time costs only matrix–vector products.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::types::{BathConfig, FieldConfig};
use crate::two::TwoQubitFieldConfig;

/// Largest full-space dimension accepted by [`FullSystemSpec::evolve_exact`].
pub const MAX_EXACT_DIM: usize = 1 << 12;

/// Largest full-space dimension accepted by
/// [`FullSystemSpec::evolve_stepped`].
pub const MAX_STEPPED_DIM: usize = 1 << 10;

extern "C" {
    fn dsyevd_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut f64,
        lda: *const i32,
        w: *mut f64,
        work: *mut f64,
        lwork: *const i32,
        iwork: *mut i32,
        liwork: *const i32,
        info: *mut i32,
    );
    fn cblas_dgemm(
        layout: i32,
        transa: i32,
        transb: i32,
        m: i32,
        n: i32,
        k: i32,
        alpha: f64,
        a: *const f64,
        lda: i32,
        b: *const f64,
        ldb: i32,
        beta: f64,
        c: *mut f64,
        ldc: i32,
    );
    fn cblas_dgemv(
        layout: i32,
        trans: i32,
        m: i32,
        n: i32,
        alpha: f64,
        a: *const f64,
        lda: i32,
        x: *const f64,
        incx: i32,
        beta: f64,
        y: *mut f64,
        incy: i32,
    );
}

const COL_MAJOR: i32 = 102;
const NO_TRANS: i32 = 111;
const TRANS: i32 = 112;

/// Eigendecomposition of a dense real-symmetric matrix in column-major
/// storage. On return `a` holds the orthonormal eigenvectors in its
/// columns and the returned vector the ascending eigenvalues.
pub fn symmetric_eigen(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    let mut w = vec![0.0f64; n];
    let ni = n as i32;
    let mut info = 0i32;
    // workspace query
    let mut work_len = [0.0f64];
    let mut iwork_len = [0i32];
    let query = -1i32;
    unsafe {
        dsyevd_(
            b"V".as_ptr(),
            b"L".as_ptr(),
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work_len.as_mut_ptr(),
            &query,
            iwork_len.as_mut_ptr(),
            &query,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack(info));
    }
    let lwork = work_len[0] as i32;
    let liwork = iwork_len[0];
    let mut work = vec![0.0f64; lwork as usize];
    let mut iwork = vec![0i32; liwork as usize];
    unsafe {
        dsyevd_(
            b"V".as_ptr(),
            b"L".as_ptr(),
            &ni,
            a.as_mut_ptr(),
            &ni,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            iwork.as_mut_ptr(),
            &liwork,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Lapack(info));
    }
    Ok(w)
}

/// One bath spin in the full model: coupling strength, probability of the
/// ↑ state, and a bitmask over system qubits it couples to.
#[derive(Debug, Clone, Copy, PartialEq)]
struct BathSpin {
    g: f64,
    p_up: f64,
    targets: u8,
}

/// Full microscopic model: one or two driven qubits plus every bath spin as
/// an explicit degree of freedom.
#[derive(Debug, Clone, PartialEq)]
pub struct FullSystemSpec {
    n_qubits: usize,
    /// Per-qubit longitudinal splitting ω₀.
    omega0: Vec<f64>,
    /// Per-qubit drive amplitude ω₁.
    omega1: Vec<f64>,
    /// Per-qubit drive frequency ω (equal for the exact route).
    omega: Vec<f64>,
    j: f64,
    bath: Vec<BathSpin>,
}

fn bath_spins(bath: &BathConfig, targets: u8) -> Vec<BathSpin> {
    let p_up = 0.5 * (1.0 + bath.polarization());
    bath.couplings().iter().map(|&g| BathSpin { g, p_up, targets }).collect()
}

impl FullSystemSpec {
    /// One qubit coupled to every spin of `bath`.
    pub fn single_qubit(field: &FieldConfig, bath: &BathConfig) -> Self {
        FullSystemSpec {
            n_qubits: 1,
            omega0: vec![field.omega0],
            omega1: vec![field.omega1],
            omega: vec![field.omega],
            j: 0.0,
            bath: bath_spins(bath, 0b01),
        }
    }

    /// Two qubits, both coupled to every spin of one shared bath.
    pub fn two_qubit_common(cfg: &TwoQubitFieldConfig, bath: &BathConfig) -> Self {
        FullSystemSpec {
            n_qubits: 2,
            omega0: vec![cfg.site1.omega0, cfg.site2.omega0],
            omega1: vec![cfg.site1.omega1, cfg.site2.omega1],
            omega: vec![cfg.site1.omega, cfg.site2.omega],
            j: cfg.j,
            bath: bath_spins(bath, 0b11),
        }
    }

    /// Two qubits with disjoint baths.
    pub fn two_qubit_separate(
        cfg: &TwoQubitFieldConfig,
        bath1: &BathConfig,
        bath2: &BathConfig,
    ) -> Self {
        let mut bath = bath_spins(bath1, 0b01);
        bath.extend(bath_spins(bath2, 0b10));
        FullSystemSpec {
            n_qubits: 2,
            omega0: vec![cfg.site1.omega0, cfg.site2.omega0],
            omega1: vec![cfg.site1.omega1, cfg.site2.omega1],
            omega: vec![cfg.site1.omega, cfg.site2.omega],
            j: cfg.j,
            bath,
        }
    }

    pub fn n_bath(&self) -> usize {
        self.bath.len()
    }

    pub fn sys_dim(&self) -> usize {
        1 << self.n_qubits
    }

    /// Full Hilbert-space dimension 2^(qubits + bath spins).
    pub fn dim(&self) -> usize {
        self.sys_dim() << self.bath.len()
    }

    /// S^z quantum number of system qubit q (0-based, qubit 1 is the slower
    /// index) in system basis state a; basis rows order ↑ before ↓.
    fn mz(&self, a: usize, q: usize) -> f64 {
        0.5 - ((a >> (self.n_qubits - 1 - q)) & 1) as f64
    }

    /// Total system magnetization of basis state a.
    fn mz_total(&self, a: usize) -> f64 {
        (0..self.n_qubits).map(|q| self.mz(a, q)).sum()
    }

    /// S^z of bath spin k in bath configuration β (bit 0 means ↑).
    fn bath_mz(beta: usize, k: usize) -> f64 {
        0.5 - ((beta >> k) & 1) as f64
    }

    /// Probability of bath configuration β in the initial product state.
    fn bath_weight(&self, beta: usize) -> f64 {
        self.bath
            .iter()
            .enumerate()
            .map(|(k, s)| if (beta >> k) & 1 == 0 { s.p_up } else { 1.0 - s.p_up })
            .product()
    }

    /// Overhauser-like shift seen by system qubit q in bath configuration β.
    fn shift(&self, q: usize, beta: usize) -> f64 {
        self.bath
            .iter()
            .enumerate()
            .filter(|(_, s)| s.targets >> q & 1 == 1)
            .map(|(k, s)| s.g * Self::bath_mz(beta, k))
            .sum()
    }

    fn common_drive(&self) -> Result<f64> {
        let w = self.omega[0];
        if self.omega.iter().any(|&x| x != w) {
            return Err(Error::validation(
                "omega",
                "exact diagonalization route needs one shared drive frequency",
            ));
        }
        Ok(w)
    }

    /// Dense rotating-frame Hamiltonian over the full space, column-major.
    /// Real symmetric: diagonal detunings and couplings, ω₁/2 single-flip
    /// terms, and the J/2 ↑↓↔↓↑ exchange swap.
    fn build_rotating_hamiltonian(&self) -> Result<Vec<f64>> {
        let omega = self.common_drive()?;
        let d = self.dim();
        let nb = 1usize << self.bath.len();
        let mut h = vec![0.0f64; d * d];
        for a in 0..self.sys_dim() {
            for beta in 0..nb {
                let idx = a * nb + beta;
                let mut diag = 0.0;
                for q in 0..self.n_qubits {
                    diag += (self.omega0[q] - omega + self.shift(q, beta)) * self.mz(a, q);
                }
                if self.n_qubits == 2 {
                    diag += self.j * self.mz(a, 0) * self.mz(a, 1);
                }
                h[idx * d + idx] = diag;
                // transverse drive: flip one system qubit
                for q in 0..self.n_qubits {
                    let a2 = a ^ (1 << (self.n_qubits - 1 - q));
                    let idx2 = a2 * nb + beta;
                    h[idx * d + idx2] += 0.5 * self.omega1[q];
                }
            }
        }
        if self.n_qubits == 2 && self.j != 0.0 {
            // J(S₁ˣS₂ˣ + S₁ʸS₂ʸ) = (J/2)(S₁⁺S₂⁻ + S₁⁻S₂⁺): swap ↑↓ ↔ ↓↑
            for beta in 0..nb {
                let i = 1 * nb + beta;
                let k = 2 * nb + beta;
                h[i * d + k] += 0.5 * self.j;
                h[k * d + i] += 0.5 * self.j;
            }
        }
        Ok(h)
    }

    /// Lab-frame reduced density matrices of the system at the requested
    /// times, from one full diagonalization.
    ///
    /// `psi` is the (real, normalized) initial pure system state in the
    /// product basis; the bath starts in its thermal product state.
    pub fn evolve_exact(&self, psi: &[f64], times: &[f64]) -> Result<Vec<Array2<C64>>> {
        let d = self.dim();
        if d > MAX_EXACT_DIM {
            return Err(Error::Capacity(format!(
                "full dimension {d} exceeds the exact-route cap {MAX_EXACT_DIM}"
            )));
        }
        let sd = self.sys_dim();
        if psi.len() != sd {
            return Err(Error::Dimension(format!(
                "system state has {} amplitudes, expected {sd}",
                psi.len()
            )));
        }
        let norm: f64 = psi.iter().map(|x| x * x).sum();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::validation("psi", "not normalized"));
        }
        let omega = self.common_drive()?;
        let nb = 1usize << self.bath.len();

        let mut v = self.build_rotating_hamiltonian()?;
        let lambda = symmetric_eigen(&mut v, d)?;

        // C_{βj} = Σ_s ψ_s V[(s,β), j]  (nb × d, column-major)
        let mut cmat = vec![0.0f64; nb * d];
        for j in 0..d {
            let col = &v[j * d..(j + 1) * d];
            let out = &mut cmat[j * nb..(j + 1) * nb];
            for (s, &amp) in psi.iter().enumerate() {
                if amp == 0.0 {
                    continue;
                }
                let block = &col[s * nb..(s + 1) * nb];
                for (o, &x) in out.iter_mut().zip(block) {
                    *o += amp * x;
                }
            }
        }
        // B = Cᵀ diag(w) C
        let weights: Vec<f64> = (0..nb).map(|b| self.bath_weight(b)).collect();
        let mut cw = cmat.clone();
        for j in 0..d {
            let col = &mut cw[j * nb..(j + 1) * nb];
            for (x, w) in col.iter_mut().zip(&weights) {
                *x *= w;
            }
        }
        let mut b = vec![0.0f64; d * d];
        unsafe {
            cblas_dgemm(
                COL_MAJOR,
                TRANS,
                NO_TRANS,
                d as i32,
                d as i32,
                nb as i32,
                1.0,
                cmat.as_ptr(),
                nb as i32,
                cw.as_ptr(),
                nb as i32,
                0.0,
                b.as_mut_ptr(),
                d as i32,
            );
        }
        drop(cw);

        let mut rhos: Vec<Array2<C64>> = times.iter().map(|_| Array2::zeros((sd, sd))).collect();
        let mut g = vec![0.0f64; d * d];
        let mut cos_l = vec![0.0f64; d];
        let mut sin_l = vec![0.0f64; d];
        let mut gc = vec![0.0f64; d];
        let mut gs = vec![0.0f64; d];
        for a in 0..sd {
            for c in a..sd {
                // K^{ac} = V_aᵀ V_c over the fixed-system-index row blocks,
                // then G = B ∘ K in place
                unsafe {
                    cblas_dgemm(
                        COL_MAJOR,
                        TRANS,
                        NO_TRANS,
                        d as i32,
                        d as i32,
                        nb as i32,
                        1.0,
                        v.as_ptr().add(a * nb),
                        d as i32,
                        v.as_ptr().add(c * nb),
                        d as i32,
                        0.0,
                        g.as_mut_ptr(),
                        d as i32,
                    );
                }
                for (gv, bv) in g.iter_mut().zip(&b) {
                    *gv *= bv;
                }
                for (ti, &t) in times.iter().enumerate() {
                    for j in 0..d {
                        let (s, co) = (lambda[j] * t).sin_cos();
                        cos_l[j] = co;
                        sin_l[j] = s;
                    }
                    unsafe {
                        cblas_dgemv(
                            COL_MAJOR,
                            NO_TRANS,
                            d as i32,
                            d as i32,
                            1.0,
                            g.as_ptr(),
                            d as i32,
                            cos_l.as_ptr(),
                            1,
                            0.0,
                            gc.as_mut_ptr(),
                            1,
                        );
                        cblas_dgemv(
                            COL_MAJOR,
                            NO_TRANS,
                            d as i32,
                            d as i32,
                            1.0,
                            g.as_ptr(),
                            d as i32,
                            sin_l.as_ptr(),
                            1,
                            0.0,
                            gs.as_mut_ptr(),
                            1,
                        );
                    }
                    // Σ_j e^{−iλ_j t} [(G cos)_j + i (G sin)_j]
                    let mut val = C64::new(0.0, 0.0);
                    for j in 0..d {
                        let q = C64::new(cos_l[j], -sin_l[j]);
                        val += q * C64::new(gc[j], gs[j]);
                    }
                    // rotating → lab frame phases e^{−iωt(M_a − M_c)}
                    let phase =
                        C64::from_polar(1.0, -omega * t * (self.mz_total(a) - self.mz_total(c)));
                    let val = val * phase;
                    rhos[ti][[a, c]] = val;
                    if c != a {
                        rhos[ti][[c, a]] = val.conj();
                    }
                }
            }
        }
        Ok(rhos)
    }

    /// Lab-frame reduced density matrices via classic fourth-order
    /// Runge–Kutta on the time-dependent lab-frame Schrödinger equation,
    /// one run per bath configuration. Entirely diagonalization-free;
    /// `times` must be non-negative and ascending.
    pub fn evolve_stepped(&self, psi: &[f64], times: &[f64]) -> Result<Vec<Array2<C64>>> {
        let d = self.dim();
        if d > MAX_STEPPED_DIM {
            return Err(Error::Capacity(format!(
                "full dimension {d} exceeds the stepped-route cap {MAX_STEPPED_DIM}"
            )));
        }
        let sd = self.sys_dim();
        if psi.len() != sd {
            return Err(Error::Dimension(format!(
                "system state has {} amplitudes, expected {sd}",
                psi.len()
            )));
        }
        if times.windows(2).any(|w| w[1] < w[0]) || times.first().is_some_and(|&t| t < 0.0) {
            return Err(Error::validation("times", "must be non-negative and ascending"));
        }
        let nb = 1usize << self.bath.len();
        let scale = (0..self.n_qubits)
            .map(|q| {
                self.omega0[q].abs()
                    + self.omega1[q].abs()
                    + self.omega[q].abs()
                    + self.bath.iter().map(|s| 0.5 * s.g.abs()).sum::<f64>()
            })
            .fold(self.j.abs(), f64::max)
            .max(1.0);
        let dt_max = 1.0 / (40.0 * scale);

        // static diagonal of the lab Hamiltonian
        let mut diag = vec![0.0f64; d];
        for a in 0..sd {
            for beta in 0..nb {
                let mut x = 0.0;
                for q in 0..self.n_qubits {
                    x += (self.omega0[q] + self.shift(q, beta)) * self.mz(a, q);
                }
                if self.n_qubits == 2 {
                    x += self.j * self.mz(a, 0) * self.mz(a, 1);
                }
                diag[a * nb + beta] = x;
            }
        }

        let rhs = |t: f64, z: &[C64], out: &mut [C64]| {
            for (o, (zv, dv)) in out.iter_mut().zip(z.iter().zip(&diag)) {
                *o = zv * dv;
            }
            for q in 0..self.n_qubits {
                // ω₁(S^x cos ωt + S^y sin ωt) = (ω₁/2)(e^{−iωt}S⁺ + e^{iωt}S⁻)
                let raise = C64::from_polar(0.5 * self.omega1[q], -self.omega[q] * t);
                let bit = 1usize << (self.n_qubits - 1 - q);
                for a in 0..sd {
                    if a & bit != 0 {
                        continue; // a has qubit q up? bit clear means up
                    }
                    let a_dn = a | bit;
                    for beta in 0..nb {
                        let up = a * nb + beta;
                        let dn = a_dn * nb + beta;
                        out[up] += raise * z[dn];
                        out[dn] += raise.conj() * z[up];
                    }
                }
            }
            if self.n_qubits == 2 && self.j != 0.0 {
                for beta in 0..nb {
                    let i = nb + beta;
                    let k = 2 * nb + beta;
                    out[i] += 0.5 * self.j * z[k];
                    out[k] += 0.5 * self.j * z[i];
                }
            }
            for o in out.iter_mut() {
                *o *= C64::new(0.0, -1.0);
            }
        };

        let mut rhos: Vec<Array2<C64>> = times.iter().map(|_| Array2::zeros((sd, sd))).collect();
        let mut z = vec![C64::new(0.0, 0.0); d];
        let (mut k1, mut k2, mut k3, mut k4, mut tmp) = (
            vec![C64::new(0.0, 0.0); d],
            vec![C64::new(0.0, 0.0); d],
            vec![C64::new(0.0, 0.0); d],
            vec![C64::new(0.0, 0.0); d],
            vec![C64::new(0.0, 0.0); d],
        );
        for beta in 0..nb {
            let w = self.bath_weight(beta);
            if w < 1e-15 {
                continue;
            }
            z.iter_mut().for_each(|x| *x = C64::new(0.0, 0.0));
            for (a, &amp) in psi.iter().enumerate() {
                z[a * nb + beta] = C64::new(amp, 0.0);
            }
            let mut t_now = 0.0f64;
            for (ti, &t_target) in times.iter().enumerate() {
                let seg = t_target - t_now;
                if seg > 0.0 {
                    let steps = (seg / dt_max).ceil() as usize;
                    let h = seg / steps as f64;
                    for s in 0..steps {
                        let t0 = t_now + s as f64 * h;
                        rhs(t0, &z, &mut k1);
                        for i in 0..d {
                            tmp[i] = z[i] + 0.5 * h * k1[i];
                        }
                        rhs(t0 + 0.5 * h, &tmp, &mut k2);
                        for i in 0..d {
                            tmp[i] = z[i] + 0.5 * h * k2[i];
                        }
                        rhs(t0 + 0.5 * h, &tmp, &mut k3);
                        for i in 0..d {
                            tmp[i] = z[i] + h * k3[i];
                        }
                        rhs(t0 + h, &tmp, &mut k4);
                        for i in 0..d {
                            z[i] += h / 6.0
                                * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
                        }
                    }
                    t_now = t_target;
                }
                // accumulate the partial trace over the bath
                for a in 0..sd {
                    for c in 0..sd {
                        let mut s = C64::new(0.0, 0.0);
                        for bv in 0..nb {
                            s += z[a * nb + bv] * z[c * nb + bv].conj();
                        }
                        rhos[ti][[a, c]] += w * s;
                    }
                }
            }
        }
        Ok(rhos)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;
    use crate::sector::enumerate_sectors;
    use crate::single;
    use crate::two;
    use crate::types::{bell_state, make_bath, BellState, CouplingModel, QubitState};
    use approx::assert_abs_diff_eq;

    fn field(omega0: f64, omega1: f64, omega: f64) -> FieldConfig {
        FieldConfig::new(omega0, omega1, omega).unwrap()
    }

    #[test]
    fn decoupled_bath_reproduces_free_rabi() {
        let f = field(50.0, 8.0, 50.0);
        let bath = make_bath(2, 0.0, CouplingModel::Uniform { g: 0.0 }).unwrap();
        let spec = FullSystemSpec::single_qubit(&f, &bath);
        let times = [0.0, 0.1, 0.35];
        let rhos = spec.evolve_exact(&[1.0, 0.0], &times).unwrap();
        for (&t, rho) in times.iter().zip(&rhos) {
            assert_abs_diff_eq!(rho[[1, 1]].re, (4.0 * t).sin().powi(2), epsilon = 1e-10);
            assert_abs_diff_eq!(ops::trace(rho).re, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn exact_route_matches_sector_closed_form_single_qubit() {
        for (n, p, g_total, omega) in
            [(3usize, 0.0, 6.0, 100.0), (4, 0.5, 5.0, 97.0), (5, -0.3, 8.0, 103.5)]
        {
            let f = field(100.0, 10.0, omega);
            let bath = make_bath(n, p, CouplingModel::GaussianProfile { g: g_total, alpha: 0.03 })
                .unwrap();
            let spec = FullSystemSpec::single_qubit(&f, &bath);
            let sectors = enumerate_sectors(&bath).unwrap();
            let times = [0.07, 0.4, 1.9];
            let rhos = spec.evolve_exact(&[1.0, 0.0], &times).unwrap();
            for (&t, rho) in times.iter().zip(&rhos) {
                let expect = single::reduced_state(&f, &sectors, &QubitState::up(), t).unwrap();
                let dist = ops::trace_distance(rho, expect.matrix());
                assert!(dist < 1e-10, "n={n} p={p} t={t}: trace distance {dist:.3e}");
            }
        }
    }

    #[test]
    fn exact_route_matches_common_bath_two_qubit() {
        let cfg = two::TwoQubitFieldConfig::symmetric(field(100.0, 10.0, 98.0), 3.0).unwrap();
        let bath = make_bath(3, 0.4, CouplingModel::Uniform { g: 1.7 }).unwrap();
        let spec = FullSystemSpec::two_qubit_common(&cfg, &bath);
        let sectors = enumerate_sectors(&bath).unwrap();
        let psi = BellState::PhiPlus.vector();
        let psi_re: Vec<f64> = psi.iter().map(|z| z.re).collect();
        let times = [0.11, 0.6, 2.4];
        let rhos = spec.evolve_exact(&psi_re, &times).unwrap();
        let rho0 = bell_state(BellState::PhiPlus);
        for (&t, rho) in times.iter().zip(&rhos) {
            let expect = two::reduced_state_2q_common(&cfg, &sectors, &rho0, t).unwrap();
            let dist = ops::trace_distance(rho, expect.matrix());
            assert!(dist < 1e-10, "t={t}: trace distance {dist:.3e}");
        }
    }

    #[test]
    fn exact_route_matches_separate_baths() {
        let cfg = two::TwoQubitFieldConfig::new(
            field(100.0, 10.0, 99.0),
            field(102.0, 10.0, 99.0),
            2.0,
        )
        .unwrap();
        let bath1 = make_bath(2, 0.0, CouplingModel::Uniform { g: 1.5 }).unwrap();
        let bath2 = make_bath(3, 0.5, CouplingModel::GaussianProfile { g: 4.0, alpha: 0.05 })
            .unwrap();
        let spec = FullSystemSpec::two_qubit_separate(&cfg, &bath1, &bath2);
        let s1 = enumerate_sectors(&bath1).unwrap();
        let s2 = enumerate_sectors(&bath2).unwrap();
        let rho0 = bell_state(BellState::TripletZero);
        let psi: Vec<f64> = BellState::TripletZero.vector().iter().map(|z| z.re).collect();
        let times = [0.2, 1.3];
        let rhos = spec.evolve_exact(&psi, &times).unwrap();
        for (&t, rho) in times.iter().zip(&rhos) {
            let (expect, path) =
                two::evolve_separate_baths_general(&cfg, &s1, &s2, &rho0, t).unwrap();
            assert_eq!(path, two::EvolutionPath::ExactSectorSum);
            let dist = ops::trace_distance(rho, expect.matrix());
            assert!(dist < 1e-10, "t={t}: trace distance {dist:.3e}");
        }
    }

    #[test]
    fn stepped_route_agrees_with_exact() {
        let f = field(30.0, 6.0, 29.0);
        let bath = make_bath(3, 0.2, CouplingModel::Uniform { g: 2.0 }).unwrap();
        let spec = FullSystemSpec::single_qubit(&f, &bath);
        let times = [0.15, 0.5, 1.0];
        let exact = spec.evolve_exact(&[1.0, 0.0], &times).unwrap();
        let stepped = spec.evolve_stepped(&[1.0, 0.0], &times).unwrap();
        for (ti, t) in times.iter().enumerate() {
            let dist = ops::trace_distance(&exact[ti], &stepped[ti]);
            assert!(dist < 1e-7, "t={t}: trace distance {dist:.3e}");
        }
    }

    #[test]
    fn stepped_route_two_qubit_with_exchange() {
        let cfg = two::TwoQubitFieldConfig::symmetric(field(20.0, 5.0, 20.0), 2.0).unwrap();
        let bath = make_bath(2, 0.0, CouplingModel::Uniform { g: 1.0 }).unwrap();
        let spec = FullSystemSpec::two_qubit_common(&cfg, &bath);
        let psi: Vec<f64> = BellState::PhiMinus.vector().iter().map(|z| z.re).collect();
        let times = [0.3, 0.9];
        let exact = spec.evolve_exact(&psi, &times).unwrap();
        let stepped = spec.evolve_stepped(&psi, &times).unwrap();
        for (ti, t) in times.iter().enumerate() {
            let dist = ops::trace_distance(&exact[ti], &stepped[ti]);
            assert!(dist < 1e-7, "t={t}: trace distance {dist:.3e}");
        }
    }

    #[test]
    fn reduced_states_are_physical() {
        let f = field(100.0, 10.0, 101.0);
        let bath = make_bath(4, -0.6, CouplingModel::GaussianProfile { g: 6.0, alpha: 0.02 })
            .unwrap();
        let spec = FullSystemSpec::single_qubit(&f, &bath);
        let rhos = spec.evolve_exact(&[1.0, 0.0], &[0.33, 1.7, 5.0]).unwrap();
        for rho in &rhos {
            assert_abs_diff_eq!(ops::trace(rho).re, 1.0, epsilon = 1e-10);
            assert!(ops::hermiticity_defect(rho) < 1e-10);
            let min = ops::hermitian_eigenvalues(rho).into_iter().fold(f64::INFINITY, f64::min);
            assert!(min > -1e-10, "negative eigenvalue {min:.3e}");
        }
    }

    #[test]
    fn caps_and_validation() {
        let f = field(100.0, 10.0, 100.0);
        let bath = make_bath(12, 0.0, CouplingModel::Uniform { g: 1.0 }).unwrap();
        let spec = FullSystemSpec::single_qubit(&f, &bath);
        // 2^13 over the exact cap
        assert!(matches!(spec.evolve_exact(&[1.0, 0.0], &[0.1]), Err(Error::Capacity(_))));
        let bath = make_bath(3, 0.0, CouplingModel::Uniform { g: 1.0 }).unwrap();
        let spec = FullSystemSpec::single_qubit(&f, &bath);
        assert!(spec.evolve_exact(&[0.6, 0.6], &[0.1]).is_err()); // not normalized
        assert!(spec.evolve_exact(&[1.0, 0.0, 0.0], &[0.1]).is_err()); // wrong dim
        assert!(spec.evolve_stepped(&[1.0, 0.0], &[0.3, 0.1]).is_err()); // unsorted
    }

    #[test]
    fn symmetric_eigen_small_example() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3
        let mut a = vec![2.0, 1.0, 1.0, 2.0];
        let w = symmetric_eigen(&mut a, 2).unwrap();
        assert_abs_diff_eq!(w[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w[1], 3.0, epsilon = 1e-12);
        // eigenvector of eigenvalue 1 is (1, -1)/sqrt(2) up to sign
        assert_abs_diff_eq!((a[0] + a[1]).abs(), 0.0, epsilon = 1e-12);
    }
}
