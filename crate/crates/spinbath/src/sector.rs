//! Bath sector spectra: the weighted distribution of frequency shifts
//! b_i = ⟨i|Σₖ g_k Iₖᶻ|i⟩ induced by the bath state.
//!
//! The Hamiltonian commutes with every bath Iᶻ, so the full dynamics factors
//! into independent blocks labelled by these shifts. A [`SectorSpectrum`] is
//! the collapsed list of (shift, weight) pairs, with equal shifts merged and
//! zero-weight entries dropped.

use crate::error::{Error, Result};
use crate::types::{BathConfig, CouplingModel, EXHAUSTIVE_CAP};

/// One block of the bath-conditioned dynamics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    /// Frequency shift b_i in rad·µs⁻¹.
    pub shift: f64,
    /// Probability of the shift under the product bath state.
    pub weight: f64,
}

/// How a spectrum was constructed, with the number of elementary evaluations
/// (bath basis states visited, binomial terms, or convolution grid points).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Exhaustive { evaluations: usize },
    UniformCollapsed { evaluations: usize },
    Binned { evaluations: usize },
}

impl Provenance {
    pub fn evaluations(&self) -> usize {
        match *self {
            Provenance::Exhaustive { evaluations }
            | Provenance::UniformCollapsed { evaluations }
            | Provenance::Binned { evaluations } => evaluations,
        }
    }
}

/// Weighted spectrum of bath frequency shifts. Shifts are strictly
/// increasing, weights are non-negative and sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SectorSpectrum {
    sectors: Vec<Sector>,
    provenance: Provenance,
}

impl SectorSpectrum {
    /// A single zero-shift sector of weight 1 (decoupled bath).
    pub fn trivial() -> Self {
        SectorSpectrum {
            sectors: vec![Sector { shift: 0.0, weight: 1.0 }],
            provenance: Provenance::UniformCollapsed { evaluations: 1 },
        }
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Mean shift Σ wᵢ bᵢ.
    pub fn mean_shift(&self) -> f64 {
        self.sectors.iter().map(|s| s.shift * s.weight).sum()
    }

    fn from_raw(mut raw: Vec<Sector>, merge_tol: f64, provenance: Provenance) -> Self {
        raw.retain(|s| s.weight > 0.0);
        raw.sort_by(|a, b| a.shift.partial_cmp(&b.shift).expect("finite shifts"));
        // (anchor shift, weight sum, weight·(shift−anchor) sum). Comparing
        // against the fixed anchor rather than a running mean avoids
        // tolerance drift on very large clusters, and accumulating the
        // weighted mean relative to the anchor keeps its rounding error at
        // the cluster-spread scale instead of the absolute-shift scale.
        let mut merged: Vec<(f64, f64, f64)> = Vec::new();
        for s in raw {
            match merged.last_mut() {
                Some((anchor, w, rel)) if (s.shift - *anchor).abs() <= merge_tol => {
                    *w += s.weight;
                    *rel += (s.shift - *anchor) * s.weight;
                }
                _ => merged.push((s.shift, s.weight, 0.0)),
            }
        }
        let total: f64 = merged.iter().map(|(_, w, _)| w).sum();
        let sectors = merged
            .into_iter()
            .map(|(anchor, w, rel)| Sector { shift: anchor + rel / w, weight: w / total })
            .collect();
        SectorSpectrum { sectors, provenance }
    }
}

/// Probability of a bath basis state with `n_up` spins up and `n_down` down
/// under common polarization `p`: ((1+p)/2)^n_up · ((1−p)/2)^n_down.
pub fn sector_weight(p: f64, n_up: u32, n_down: u32) -> f64 {
    let up = 0.5 * (1.0 + p);
    let down = 0.5 * (1.0 - p);
    up.powi(n_up as i32) * down.powi(n_down as i32)
}

/// Exhaustively enumerate all 2^N bath basis states and collapse equal
/// shifts. Requires N ≤ [`EXHAUSTIVE_CAP`].
pub fn enumerate_sectors(bath: &BathConfig) -> Result<SectorSpectrum> {
    let n = bath.n_spins();
    if n > EXHAUSTIVE_CAP {
        return Err(Error::Capacity(format!(
            "exhaustive enumeration needs n_spins <= {EXHAUSTIVE_CAP} (got {n}); \
             use collapse_uniform or binned_spectrum"
        )));
    }
    let g = bath.couplings();
    let p = bath.polarization();
    let gmax = g.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
    let merge_tol = 1e-12 * gmax;
    let states = 1usize << n;
    let mut raw = Vec::with_capacity(states);
    for mask in 0..states {
        let mut shift = 0.0;
        for (k, gk) in g.iter().enumerate() {
            if mask >> k & 1 == 1 {
                shift += 0.5 * gk;
            } else {
                shift -= 0.5 * gk;
            }
        }
        let ups = mask.count_ones();
        raw.push(Sector { shift, weight: sector_weight(p, ups, n as u32 - ups) });
    }
    Ok(SectorSpectrum::from_raw(raw, merge_tol, Provenance::Exhaustive { evaluations: states }))
}

fn ln_choose(n: u64, k: u64) -> f64 {
    use statrs::function::gamma::ln_gamma;
    ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0)
}

/// Closed-form spectrum for uniform per-spin coupling `g`: shifts m·g for
/// m ∈ {−N/2, …, N/2} in integer steps with binomial weights
/// C(N, N/2−m)·((1+p)/2)^{N/2+m}·((1−p)/2)^{N/2−m}.
///
/// Zero-weight sectors (p = ±1) are dropped, so the result has at most N+1
/// entries. Numerically identical to [`enumerate_sectors`] for uniform
/// coupling.
pub fn collapse_uniform(n: usize, g: f64, p: f64) -> Result<SectorSpectrum> {
    if g < 0.0 {
        return Err(Error::validation("g", "must be non-negative"));
    }
    if !(-1.0..=1.0).contains(&p) {
        return Err(Error::validation("polarization", "must lie in [-1, 1]"));
    }
    let up = 0.5 * (1.0 + p);
    let down = 0.5 * (1.0 - p);
    let raw: Vec<Sector> = (0..=n)
        .map(|k| {
            // k spins up: m = k - N/2, shift = m*g
            let shift = (k as f64 - n as f64 / 2.0) * g;
            let weight = if up == 0.0 || down == 0.0 {
                // pure bath: only the extreme sector survives
                if (up == 0.0 && k == 0) || (down == 0.0 && k == n) { 1.0 } else { 0.0 }
            } else {
                (ln_choose(n as u64, k as u64)
                    + k as f64 * up.ln()
                    + (n - k) as f64 * down.ln())
                .exp()
            };
            Sector { shift, weight }
        })
        .collect();
    let merge_tol = 1e-12 * g.abs();
    Ok(SectorSpectrum::from_raw(
        raw,
        merge_tol,
        Provenance::UniformCollapsed { evaluations: n + 1 },
    ))
}

/// Approximate spectrum with at most `n_bins` sectors.
///
/// When the exact spectrum is available (N ≤ cap) and already has ≤ n_bins
/// sectors it is returned unchanged (lossless). Otherwise the exact shift
/// distribution (from enumeration, or for N > cap from an iterative
/// convolution of the per-spin two-point distributions {−g_k/2, +g_k/2} onto
/// a fixed uniform grid) is redistributed mass-preservingly onto `n_bins`
/// centers.
pub fn binned_spectrum(bath: &BathConfig, n_bins: usize) -> Result<SectorSpectrum> {
    if n_bins < 2 {
        return Err(Error::validation("n_bins", "must be at least 2"));
    }
    let n = bath.n_spins();
    if n <= EXHAUSTIVE_CAP {
        let exact = enumerate_sectors(bath)?;
        if exact.len() <= n_bins {
            let evaluations = exact.provenance().evaluations();
            return Ok(SectorSpectrum {
                sectors: exact.sectors,
                provenance: Provenance::Binned { evaluations },
            });
        }
        return Ok(rebin(exact.sectors(), n_bins, exact.provenance().evaluations()));
    }
    // Large N: convolve onto a fixed grid spanning the full shift support.
    if let CouplingModel::Uniform { g } = bath.coupling() {
        // uniform couplings collapse exactly; no grid error
        let exact = collapse_uniform(n, *g, bath.polarization())?;
        let evaluations = exact.provenance().evaluations();
        if exact.len() <= n_bins {
            return Ok(SectorSpectrum {
                sectors: exact.sectors,
                provenance: Provenance::Binned { evaluations },
            });
        }
        return Ok(rebin(exact.sectors(), n_bins, evaluations));
    }
    let g = bath.couplings();
    let half_span: f64 = g.iter().map(|x| x.abs()).sum::<f64>() * 0.5;
    if half_span == 0.0 {
        return Ok(SectorSpectrum::trivial());
    }
    let grid_n = (8 * n_bins).max(1024);
    let pitch = 2.0 * half_span / (grid_n - 1) as f64;
    let pos = |x: f64| (x + half_span) / pitch; // fractional grid index
    let up = 0.5 * (1.0 + bath.polarization());
    let down = 1.0 - up;
    let mut mass = vec![0.0f64; grid_n];
    {
        // place the initial point mass with the same mean-preserving split
        let f = pos(0.0).clamp(0.0, (grid_n - 1) as f64);
        let lo = f.floor() as usize;
        let frac = f - lo as f64;
        mass[lo] = 1.0 - frac;
        if lo + 1 < grid_n {
            mass[lo + 1] = frac;
        }
    }
    let mut next = vec![0.0f64; grid_n];
    let mut evaluations = 0usize;
    for gk in g {
        next.iter_mut().for_each(|v| *v = 0.0);
        for (i, &m) in mass.iter().enumerate() {
            if m == 0.0 {
                continue;
            }
            evaluations += 1;
            let x = -half_span + i as f64 * pitch;
            for (dx, w) in [(0.5 * gk, up), (-0.5 * gk, down)] {
                if w == 0.0 {
                    continue;
                }
                // mass-preserving linear split between neighbouring grid points
                let f = pos(x + dx).clamp(0.0, (grid_n - 1) as f64);
                let lo = f.floor() as usize;
                let frac = f - lo as f64;
                next[lo] += m * w * (1.0 - frac);
                if lo + 1 < grid_n {
                    next[lo + 1] += m * w * frac;
                }
            }
        }
        std::mem::swap(&mut mass, &mut next);
    }
    let sectors: Vec<Sector> = mass
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > 0.0)
        .map(|(i, &w)| Sector { shift: -half_span + i as f64 * pitch, weight: w })
        .collect();
    Ok(rebin(&sectors, n_bins, evaluations))
}

/// Redistribute sector mass onto `n_bins` uniformly spaced centers with
/// linear (mean-preserving) splitting.
fn rebin(sectors: &[Sector], n_bins: usize, evaluations: usize) -> SectorSpectrum {
    let lo = sectors.first().map(|s| s.shift).unwrap_or(0.0);
    let hi = sectors.last().map(|s| s.shift).unwrap_or(0.0);
    if hi <= lo {
        return SectorSpectrum {
            sectors: sectors.to_vec(),
            provenance: Provenance::Binned { evaluations },
        };
    }
    let pitch = (hi - lo) / (n_bins - 1) as f64;
    let mut mass = vec![0.0f64; n_bins];
    for s in sectors {
        let f = ((s.shift - lo) / pitch).clamp(0.0, (n_bins - 1) as f64);
        let i = f.floor() as usize;
        let frac = f - i as f64;
        mass[i] += s.weight * (1.0 - frac);
        if i + 1 < n_bins {
            mass[i + 1] += s.weight * frac;
        }
    }
    let raw: Vec<Sector> = mass
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > 0.0)
        .map(|(i, &w)| Sector { shift: lo + i as f64 * pitch, weight: w })
        .collect();
    SectorSpectrum::from_raw(raw, 0.0, Provenance::Binned { evaluations })
}

/// Large-N Gaussian density of the bath magnetization quantum number m:
/// P(m) = √(2/(πN(1−p²))) · exp(−2(m−Np/2)²/(N(1−p²))).
pub fn gaussian_m_distribution(n: usize, p: f64, m: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::validation("n", "must be at least 1"));
    }
    if p.abs() >= 1.0 {
        return Err(Error::Degenerate(
            "m-distribution is a point mass for |p| = 1".into(),
        ));
    }
    let nf = n as f64;
    let var = nf * (1.0 - p * p);
    let mean = nf * p / 2.0;
    Ok((2.0 / (std::f64::consts::PI * var)).sqrt() * (-2.0 * (m - mean).powi(2) / var).exp())
}

/// Probability-weighted histogram of the resonant detunings
/// Δ_i = (ω − ω₀) − shift for plotting. `delta0` is ω − ω₀. Out-of-range
/// sectors are clamped into the edge bins so the masses always sum to 1.
pub fn shift_histogram(
    spectrum: &SectorSpectrum,
    delta0: f64,
    bins: usize,
    range: (f64, f64),
) -> Result<Vec<(f64, f64)>> {
    if bins < 1 {
        return Err(Error::validation("bins", "must be at least 1"));
    }
    let (lo, hi) = range;
    if !(hi > lo) {
        return Err(Error::validation("range", "must be non-empty (hi > lo)"));
    }
    let width = (hi - lo) / bins as f64;
    let mut mass = vec![0.0f64; bins];
    for s in spectrum.sectors() {
        let d = delta0 - s.shift;
        let i = (((d - lo) / width).floor() as i64).clamp(0, bins as i64 - 1) as usize;
        mass[i] += s.weight;
    }
    Ok(mass
        .into_iter()
        .enumerate()
        .map(|(i, w)| (lo + (i as f64 + 0.5) * width, w))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::make_bath;
    use approx::assert_abs_diff_eq;

    fn uniform_bath(n: usize, g: f64, p: f64) -> BathConfig {
        make_bath(n, p, CouplingModel::Uniform { g }).unwrap()
    }

    #[test]
    fn sector_weight_examples() {
        let n = 8u32;
        for k in 0..=n {
            assert_abs_diff_eq!(
                sector_weight(0.0, k, n - k),
                1.0 / 2f64.powi(n as i32),
                epsilon = 1e-15
            );
        }
        assert_abs_diff_eq!(sector_weight(1.0, 5, 0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sector_weight(1.0, 4, 1), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sector_weight(0.5, 1, 1), 0.1875, epsilon = 1e-15);
    }

    #[test]
    fn enumerate_single_spin() {
        for p in [0.0, 0.4, -0.7] {
            let s = enumerate_sectors(&uniform_bath(1, 2.0, p)).unwrap();
            assert_eq!(s.len(), 2);
            assert_abs_diff_eq!(s.sectors()[0].shift, -1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(s.sectors()[1].shift, 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(s.sectors()[0].weight, 0.5 * (1.0 - p), epsilon = 1e-15);
            assert_abs_diff_eq!(s.sectors()[1].weight, 0.5 * (1.0 + p), epsilon = 1e-15);
        }
    }

    #[test]
    fn enumerate_two_spins_binomial() {
        let s = enumerate_sectors(&uniform_bath(2, 1.0, 0.0)).unwrap();
        let shifts: Vec<f64> = s.sectors().iter().map(|x| x.shift).collect();
        let weights: Vec<f64> = s.sectors().iter().map(|x| x.weight).collect();
        assert_eq!(shifts, vec![-1.0, 0.0, 1.0]);
        for (w, e) in weights.iter().zip([0.25, 0.5, 0.25]) {
            assert_abs_diff_eq!(*w, e, epsilon = 1e-15);
        }
    }

    #[test]
    fn enumerate_explicit_couplings() {
        let bath =
            make_bath(3, 0.0, CouplingModel::Explicit { g_list: vec![1.0, 2.0, 4.0] }).unwrap();
        let s = enumerate_sectors(&bath).unwrap();
        assert_eq!(s.len(), 8);
        // brute enumeration of the 8 sign patterns +-0.5 +-1 +-2
        let mut expect: Vec<f64> = Vec::new();
        for a in [-0.5, 0.5] {
            for b in [-1.0, 1.0] {
                for c in [-2.0, 2.0] {
                    expect.push(a + b + c);
                }
            }
        }
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (s, e) in s.sectors().iter().zip(expect) {
            assert_abs_diff_eq!(s.shift, e, epsilon = 1e-15);
            assert_abs_diff_eq!(s.weight, 0.125, epsilon = 1e-15);
        }
    }

    #[test]
    fn enumeration_cap_enforced() {
        let bath = uniform_bath(25, 1.0, 0.0);
        assert!(matches!(enumerate_sectors(&bath), Err(crate::error::Error::Capacity(_))));
    }

    #[test]
    fn collapse_matches_enumeration() {
        for n in [1usize, 2, 5, 12, 20] {
            for p in [0.0, 0.5, -0.5, 1.0, -1.0] {
                let a = collapse_uniform(n, 1.3, p).unwrap();
                let b = enumerate_sectors(&uniform_bath(n, 1.3, p)).unwrap();
                assert_eq!(a.len(), b.len(), "n={n} p={p}");
                for (x, y) in a.sectors().iter().zip(b.sectors()) {
                    assert_abs_diff_eq!(x.shift, y.shift, epsilon = 1e-12);
                    assert_abs_diff_eq!(x.weight, y.weight, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn collapse_uniform_examples() {
        let s = collapse_uniform(2, 1.0, 0.0).unwrap();
        let got: Vec<(f64, f64)> = s.sectors().iter().map(|x| (x.shift, x.weight)).collect();
        for ((sh, w), (esh, ew)) in got.iter().zip([(-1.0, 0.25), (0.0, 0.5), (1.0, 0.25)]) {
            assert_abs_diff_eq!(*sh, esh, epsilon = 1e-15);
            assert_abs_diff_eq!(*w, ew, epsilon = 1e-15);
        }
        // exact binomial arithmetic: C(20,10)/2^20
        let s = collapse_uniform(20, 1.0, 0.0).unwrap();
        let w0 = s.sectors()[10].weight;
        assert_abs_diff_eq!(w0, 184756.0 / 1048576.0, epsilon = 1e-12);
        // pure bath collapses to a single sector
        let s = collapse_uniform(4, 1.5, 1.0).unwrap();
        assert_eq!(s.len(), 1);
        assert_abs_diff_eq!(s.sectors()[0].shift, 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.sectors()[0].weight, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn binned_lossless_when_bins_suffice() {
        let bath = uniform_bath(10, 0.7, 0.25);
        let b = binned_spectrum(&bath, 11).unwrap();
        let c = collapse_uniform(10, 0.7, 0.25).unwrap();
        assert_eq!(b.len(), c.len());
        for (x, y) in b.sectors().iter().zip(c.sectors()) {
            assert_abs_diff_eq!(x.shift, y.shift, epsilon = 1e-12);
            assert_abs_diff_eq!(x.weight, y.weight, epsilon = 1e-12);
        }
    }

    #[test]
    fn binned_equals_enumeration_for_small_explicit() {
        let bath =
            make_bath(3, 0.0, CouplingModel::Explicit { g_list: vec![1.0, 2.0, 4.0] }).unwrap();
        let b = binned_spectrum(&bath, 8).unwrap();
        let e = enumerate_sectors(&bath).unwrap();
        assert_eq!(b.len(), e.len());
        for (x, y) in b.sectors().iter().zip(e.sectors()) {
            assert_abs_diff_eq!(x.shift, y.shift, epsilon = 1e-12);
            assert_abs_diff_eq!(x.weight, y.weight, epsilon = 1e-12);
        }
    }

    #[test]
    fn binned_large_n_preserves_mass_and_mean() {
        // N = 40 Gaussian-profile couplings forces the convolution path.
        let bath = make_bath(40, 0.3, CouplingModel::GaussianProfile { g: 10.0, alpha: 0.002 })
            .unwrap();
        let b = binned_spectrum(&bath, 101).unwrap();
        let total: f64 = b.sectors().iter().map(|s| s.weight).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        let expect_mean = bath.polarization() * bath.couplings().iter().sum::<f64>() / 2.0;
        assert_abs_diff_eq!(b.mean_shift(), expect_mean, epsilon = 1e-6);
    }

    #[test]
    fn weights_normalized_and_mean_matches_product_state() {
        for (n, p) in [(6usize, 0.0), (10, 0.5), (13, -0.8)] {
            let bath = make_bath(n, p, CouplingModel::GaussianProfile { g: 5.0, alpha: 0.01 })
                .unwrap();
            let s = enumerate_sectors(&bath).unwrap();
            let total: f64 = s.sectors().iter().map(|x| x.weight).sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
            let expect = p * bath.couplings().iter().sum::<f64>() / 2.0;
            assert_abs_diff_eq!(s.mean_shift(), expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn unpolarized_spectrum_is_symmetric() {
        let bath = make_bath(8, 0.0, CouplingModel::GaussianProfile { g: 3.0, alpha: 0.05 })
            .unwrap();
        let s = enumerate_sectors(&bath).unwrap();
        let k = s.len();
        for i in 0..k {
            let a = s.sectors()[i];
            let b = s.sectors()[k - 1 - i];
            assert_abs_diff_eq!(a.shift, -b.shift, epsilon = 1e-12);
            assert_abs_diff_eq!(a.weight, b.weight, epsilon = 1e-12);
        }
    }

    #[test]
    fn gaussian_m_distribution_values() {
        use std::f64::consts::PI;
        let n = 50;
        assert_abs_diff_eq!(
            gaussian_m_distribution(n, 0.0, 0.0).unwrap(),
            (2.0 / (PI * n as f64)).sqrt(),
            epsilon = 1e-15
        );
        // peak at the mean m = N p / 2
        assert_abs_diff_eq!(
            gaussian_m_distribution(20, 0.5, 5.0).unwrap(),
            (2.0 / (PI * 15.0)).sqrt(),
            epsilon = 1e-15
        );
        assert!(gaussian_m_distribution(20, 1.0, 0.0).is_err());
        // total mass over integer m is ~1
        let total: f64 =
            (-200..=200).map(|m| gaussian_m_distribution(100, 0.0, m as f64).unwrap()).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-3);
    }

    #[test]
    fn shift_histogram_mass_and_symmetry() {
        let s = collapse_uniform(20, 1.0, 0.0).unwrap();
        let h = shift_histogram(&s, 0.0, 41, (-10.25, 10.25)).unwrap();
        let total: f64 = h.iter().map(|(_, w)| w).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        for i in 0..h.len() {
            assert_abs_diff_eq!(h[i].1, h[h.len() - 1 - i].1, epsilon = 1e-12);
        }
        // single sector: all mass in one bin
        let h = shift_histogram(&SectorSpectrum::trivial(), 1.0, 5, (0.0, 2.0)).unwrap();
        let nonzero: Vec<&(f64, f64)> = h.iter().filter(|(_, w)| *w > 0.0).collect();
        assert_eq!(nonzero.len(), 1);
        assert_abs_diff_eq!(nonzero[0].1, 1.0, epsilon = 1e-15);
        assert!(shift_histogram(&s, 0.0, 5, (1.0, 1.0)).is_err());
    }
}
