//! Property-based checks of the structural invariants: physicality of
//! evolved states, spectrum bookkeeping, rotation-matrix algebra and
//! measure bounds, over randomly drawn parameters.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;
use proptest::prelude::*;

use spinbath::measures;
use spinbath::ops;
use spinbath::sector;
use spinbath::single;
use spinbath::two::{self, TwoQubitFieldConfig};
use spinbath::types::{
    bell_state, make_bath, BellState, CouplingModel, FieldConfig, QubitState, TwoQubitState,
};

fn field_strategy() -> impl Strategy<Value = FieldConfig> {
    (80.0..120.0f64, 0.1..15.0f64, 80.0..120.0f64)
        .prop_map(|(w0, w1, w)| FieldConfig::new(w0, w1, w).unwrap())
}

fn bath_strategy() -> impl Strategy<Value = (usize, f64, f64)> {
    (1usize..8, -0.95..0.95f64, 0.05..2.0f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Bath-averaged single-qubit states stay physical: unit trace,
    /// Hermitian, positive semidefinite.
    #[test]
    fn reduced_state_is_physical(
        field in field_strategy(),
        (n, p, g) in bath_strategy(),
        t in 0.0..3.0f64,
    ) {
        let spectrum = sector::collapse_uniform(n, g, p).unwrap();
        let rho = single::reduced_state(&field, &spectrum, &QubitState::up(), t).unwrap();
        let m = rho.matrix();
        prop_assert!((ops::trace(m).re - 1.0).abs() < 1e-12);
        prop_assert!(ops::hermiticity_defect(m) < 1e-12);
        let evs = ops::hermitian_eigenvalues(m);
        prop_assert!(evs.iter().all(|&l| l > -1e-10));
    }

    /// The closed-form polarization vector equals the Bloch vector of the
    /// reduced state and never leaves the unit ball.
    #[test]
    fn polarizations_match_bloch_vector(
        field in field_strategy(),
        (n, p, g) in bath_strategy(),
        t in 0.0..3.0f64,
    ) {
        let spectrum = sector::collapse_uniform(n, g, p).unwrap();
        let direct = single::polarizations(&field, &spectrum, t);
        let rho = single::reduced_state(&field, &spectrum, &QubitState::up(), t).unwrap();
        let bloch = rho.bloch_vector();
        for i in 0..3 {
            prop_assert!((direct[i] - bloch[i]).abs() < 1e-12);
        }
        let norm2: f64 = direct.iter().map(|x| x * x).sum();
        prop_assert!(norm2 <= 1.0 + 1e-12);
    }

    /// Collapsing a uniform bath to its binomial shift distribution is
    /// lossless relative to full sector enumeration.
    #[test]
    fn collapsed_equals_enumerated(
        field in field_strategy(),
        (n, p, g) in bath_strategy(),
        t in 0.0..3.0f64,
    ) {
        let bath = make_bath(n, p, CouplingModel::Uniform { g }).unwrap();
        let enumerated = sector::enumerate_sectors(&bath).unwrap();
        let collapsed = sector::collapse_uniform(n, g, p).unwrap();
        let a = single::reduced_state(&field, &enumerated, &QubitState::up(), t).unwrap();
        let b = single::reduced_state(&field, &collapsed, &QubitState::up(), t).unwrap();
        prop_assert!(ops::trace_distance(a.matrix(), b.matrix()) < 1e-12);
    }

    /// Every spectrum is a probability distribution over strictly
    /// ascending shifts.
    #[test]
    fn spectrum_is_a_distribution((n, p, g) in bath_strategy()) {
        let g_list: Vec<f64> = (0..n).map(|k| g * (1.0 + 0.3 * k as f64)).collect();
        let bath = make_bath(n, p, CouplingModel::Explicit { g_list }).unwrap();
        let spectrum = sector::enumerate_sectors(&bath).unwrap();
        let total: f64 = spectrum.sectors().iter().map(|s| s.weight).sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
        prop_assert!(spectrum.sectors().iter().all(|s| s.weight >= 0.0));
        prop_assert!(spectrum
            .sectors()
            .windows(2)
            .all(|w| w[0].shift < w[1].shift));
    }

    /// Per-sector evolution is unitary; the 2×2 propagator satisfies
    /// U U† = 1.
    #[test]
    fn sector_unitary_is_unitary(
        field in field_strategy(),
        shift in -5.0..5.0f64,
        t in 0.0..3.0f64,
    ) {
        let u = single::sector_unitary(&field, shift, t).matrix;
        let prod = u.dot(&ops::dagger(&u));
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { 1.0 } else { 0.0 };
                prop_assert!((prod[[i, j]] - ops::c(expect)).norm() < 1e-12);
            }
        }
    }

    /// The single-sector Heisenberg map is a proper rotation; the
    /// bath-averaged map never expands any Bloch vector.
    #[test]
    fn eta_rotation_and_contraction(
        field in field_strategy(),
        (n, p, g) in bath_strategy(),
        shift in -5.0..5.0f64,
        t in 0.0..3.0f64,
        v in prop::array::uniform3(-1.0..1.0f64),
    ) {
        let e = two::eta_matrix(&field, shift, t);
        // orthogonality: rows are orthonormal
        for a in 0..3 {
            for b in 0..3 {
                let dot: f64 = (0..3).map(|k| e[a][k] * e[b][k]).sum();
                let expect = if a == b { 1.0 } else { 0.0 };
                prop_assert!((dot - expect).abs() < 1e-10);
            }
        }
        let det = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
        prop_assert!((det - 1.0).abs() < 1e-10);

        let spectrum = sector::collapse_uniform(n, g, p).unwrap();
        let avg = two::averaged_eta(&field, &spectrum, t);
        let vn: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let mut wn = 0.0;
        for a in 0..3 {
            let c: f64 = (0..3).map(|k| avg[a][k] * v[k]).sum();
            wn += c * c;
        }
        prop_assert!(wn.sqrt() <= vn + 1e-10);
    }

    /// Concurrence stays in [0, 1] for arbitrary mixtures of random pure
    /// states, and vanishes for product states.
    #[test]
    fn concurrence_is_bounded(
        re in prop::array::uniform8(-1.0..1.0f64),
        im in prop::array::uniform8(-1.0..1.0f64),
        mix in 0.0..1.0f64,
    ) {
        let psi = |k: usize| {
            let raw: Vec<C64> = (0..4).map(|i| C64::new(re[4 * k + i], im[4 * k + i])).collect();
            let norm: f64 = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            prop_assume!(norm > 1e-3);
            Ok(Array1::from(raw.into_iter().map(|z| z / norm).collect::<Vec<_>>()))
        };
        let (p0, p1) = (psi(0)?, psi(1)?);
        let rho: Array2<C64> = ops::projector(&p0).mapv(|z| z * ops::c(mix))
            + ops::projector(&p1).mapv(|z| z * ops::c(1.0 - mix));
        let c = measures::concurrence(&rho).unwrap();
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&c));
    }

    /// Common-bath evolution preserves the singlet exactly, for any
    /// spectrum, detuning and exchange coupling.
    #[test]
    fn singlet_is_stationary(
        field in field_strategy(),
        (n, p, g) in bath_strategy(),
        j in -10.0..10.0f64,
        t in 0.0..3.0f64,
    ) {
        let cfg = TwoQubitFieldConfig::symmetric(field, j).unwrap();
        let spectrum = sector::collapse_uniform(n, g, p).unwrap();
        let rho =
            two::reduced_state_2q_common(&cfg, &spectrum, &bell_state(BellState::Singlet), t)
                .unwrap();
        let c = measures::concurrence(rho.matrix()).unwrap();
        prop_assert!((c - 1.0).abs() < 1e-9);
    }

    /// Two-qubit evolution under separate baths stays physical and trace
    /// preserving for every Bell state.
    #[test]
    fn separate_bath_states_are_physical(
        field in field_strategy(),
        (n, p, g) in bath_strategy(),
        t in 0.0..2.0f64,
    ) {
        let cfg = TwoQubitFieldConfig::symmetric(field, 0.0).unwrap();
        let spectrum = sector::collapse_uniform(n, g, p).unwrap();
        for which in BellState::ALL {
            let (state, _) =
                two::evolve_separate_baths_bell(&cfg, &spectrum, &spectrum, &bell_state(which), t)
                    .unwrap();
            // TwoQubitState validated on construction; purity is bounded
            let pur = state.purity();
            prop_assert!((0.25 - 1e-10..=1.0 + 1e-10).contains(&pur));
        }
    }
}

/// Mixed TwoQubitState constructor sanity outside proptest: polarizations
/// round-trip through the Pauli expansion.
#[test]
fn polarization_round_trip() {
    let psi = Array1::from(vec![
        C64::new(0.6, 0.0),
        C64::new(0.0, 0.48),
        C64::new(-0.36, 0.0),
        C64::new(0.0, -0.532),
    ]);
    let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let psi = psi.mapv(|z| z / norm);
    let state = TwoQubitState::from_vector(&psi).unwrap();
    let round = TwoQubitState::from_polarizations(&state.polarizations()).unwrap();
    assert!(ops::trace_distance(state.matrix(), round.matrix()) < 1e-12);
}
