//! Acceptance gate: one test per shipped guarantee, each printing a
//! single pass/fail line (run with `cargo test --test acceptance --
//! --nocapture` to see them even on success).

use ndarray::Array1;
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

use spinbath::measures;
use spinbath::ops;
use spinbath::oracle::FullSystemSpec;
use spinbath::sector::{self, SectorSpectrum};
use spinbath::single;
use spinbath::two::{self, TwoQubitFieldConfig};
use spinbath::types::{
    bell_state, make_bath, BellState, CouplingModel, FieldConfig, QubitState, TwoQubitState,
};

fn report(id: u32, pass: bool, elapsed: f64, detail: &str) {
    println!(
        "criterion {id:2} {}: {detail} ({elapsed:.1} s)",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {id} failed: {detail}");
}

fn uniform_field(omega: f64) -> FieldConfig {
    FieldConfig::new(100.0, 10.0, omega).unwrap()
}

/// Criterion 1: the closed-form sector engine reproduces brute-force
/// full-Hilbert-space evolution for a single qubit. Twenty random
/// (drive frequency, time) points are spread across the configuration
/// grid N × {uniform, explicit} × P_B.
#[test]
fn criterion_01_single_qubit_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut max_dev = 0.0f64;
    let mut points = 0usize;
    for n in [2usize, 6, 10] {
        for explicit in [false, true] {
            let coupling = if explicit {
                let g_list: Vec<f64> = (0..n).map(|_| rng.gen_range(0.2..1.5)).collect();
                CouplingModel::Explicit { g_list }
            } else {
                CouplingModel::Uniform { g: 0.8 }
            };
            for p_b in [0.0, 0.5, 1.0] {
                let bath = make_bath(n, p_b, coupling.clone()).unwrap();
                let spectrum = sector::enumerate_sectors(&bath).unwrap();
                // one random (omega, t) point per configuration, plus two
                // extras on the cheapest grid cells to reach 20 points
                let extra = if n == 2 && !explicit && p_b == 0.0 { 2 } else { 0 };
                for _ in 0..(1 + extra) {
                    let omega = 100.0 + rng.gen_range(-8.0..8.0);
                    let t = rng.gen_range(0.1..2.0);
                    let field = FieldConfig::new(100.0, 10.0, omega).unwrap();
                    let engine =
                        single::reduced_state(&field, &spectrum, &QubitState::up(), t).unwrap();
                    let oracle = FullSystemSpec::single_qubit(&field, &bath)
                        .evolve_exact(&[1.0, 0.0], &[t])
                        .unwrap();
                    max_dev = max_dev.max(ops::trace_distance(engine.matrix(), &oracle[0]));
                    points += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = max_dev <= 1e-9 && points == 20 && elapsed < 60.0;
    report(
        1,
        pass,
        elapsed,
        &format!("single-qubit engine vs brute force, {points} points, max trace distance {max_dev:.2e}"),
    );
}

/// Criterion 2: same cross-check for two qubits, both topologies
/// (shared bath and one bath per qubit) and J ∈ {0, 10}.
#[test]
fn criterion_02_two_qubit_oracle_equivalence() {
    let start = Instant::now();
    let mut max_dev = 0.0f64;
    let rho0 = bell_state(BellState::PhiPlus);
    let psi0 = [1.0 / 2f64.sqrt(), 0.0, 0.0, 1.0 / 2f64.sqrt()];

    // common bath
    for n in [2usize, 6] {
        for j in [0.0, 10.0] {
            let cfg = TwoQubitFieldConfig::symmetric(uniform_field(102.0), j).unwrap();
            let bath = make_bath(n, 0.25, CouplingModel::Uniform { g: 0.7 }).unwrap();
            let spectrum = sector::enumerate_sectors(&bath).unwrap();
            let times = [0.3, 0.9, 1.7];
            let oracle = FullSystemSpec::two_qubit_common(&cfg, &bath)
                .evolve_exact(&psi0, &times)
                .unwrap();
            for (&t, reference) in times.iter().zip(&oracle) {
                let engine = two::reduced_state_2q_common(&cfg, &spectrum, &rho0, t).unwrap();
                max_dev = max_dev.max(ops::trace_distance(engine.matrix(), reference));
            }
        }
    }

    // separate baths, shared drive frequency
    for n in [2usize, 5] {
        for j in [0.0, 10.0] {
            let f1 = FieldConfig::new(100.0, 10.0, 101.0).unwrap();
            let f2 = FieldConfig::new(103.0, 10.0, 101.0).unwrap();
            let cfg = TwoQubitFieldConfig::new(f1, f2, j).unwrap();
            let bath1 = make_bath(n, 0.0, CouplingModel::Uniform { g: 0.6 }).unwrap();
            let g_list: Vec<f64> = (0..n).map(|k| 0.4 + 0.3 * k as f64).collect();
            let bath2 = make_bath(n, 0.5, CouplingModel::Explicit { g_list }).unwrap();
            let s1 = sector::enumerate_sectors(&bath1).unwrap();
            let s2 = sector::enumerate_sectors(&bath2).unwrap();
            let times: &[f64] = if n == 5 { &[0.4, 1.1] } else { &[0.3, 0.8, 1.5] };
            let oracle = FullSystemSpec::two_qubit_separate(&cfg, &bath1, &bath2)
                .evolve_exact(&psi0, times)
                .unwrap();
            for (&t, reference) in times.iter().zip(&oracle) {
                let (engine, _) =
                    two::evolve_separate_baths_general(&cfg, &s1, &s2, &rho0, t).unwrap();
                max_dev = max_dev.max(ops::trace_distance(engine.matrix(), reference));
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = max_dev <= 1e-9 && elapsed < 120.0;
    report(
        2,
        pass,
        elapsed,
        &format!("two-qubit engine vs brute force, max trace distance {max_dev:.2e}"),
    );
}

/// Criterion 3: for uniform couplings the binomially collapsed spectrum
/// matches full sector enumeration while touching ~2^N / (N+1) fewer
/// sectors.
#[test]
fn criterion_03_collapsed_spectrum_equivalence() {
    let start = Instant::now();
    let n = 20;
    let bath = make_bath(n, 0.3, CouplingModel::Uniform { g: 1.0 }).unwrap();
    let enumerated = sector::enumerate_sectors(&bath).unwrap();
    let collapsed = sector::collapse_uniform(n, 1.0, 0.3).unwrap();
    let field = uniform_field(101.5);
    let mut max_dev = 0.0f64;
    for k in 0..50 {
        let t = 0.04 * (k + 1) as f64;
        let a = single::reduced_state(&field, &enumerated, &QubitState::up(), t).unwrap();
        let b = single::reduced_state(&field, &collapsed, &QubitState::up(), t).unwrap();
        max_dev = max_dev.max(ops::trace_distance(a.matrix(), b.matrix()));
    }
    let evals_enum = enumerated.provenance().evaluations();
    let evals_coll = collapsed.provenance().evaluations();
    let ratio = evals_enum as f64 / evals_coll as f64;
    let pass = max_dev <= 1e-12 && evals_enum == 1 << n && evals_coll == n + 1 && ratio >= 1e3;
    report(
        3,
        pass,
        start.elapsed().as_secs_f64(),
        &format!(
            "collapsed vs enumerated: max distance {max_dev:.2e}, {evals_coll} vs {evals_enum} sector evaluations"
        ),
    );
}

/// Criterion 4: the transition-probability peak moves with bath
/// polarization as ω₀ + g·N·P_B/2.
#[test]
fn criterion_04_resonance_shift_law() {
    let start = Instant::now();
    let t = std::f64::consts::PI / 10.0;
    let pitch = 0.25;
    let mut pass = true;
    let mut detail = String::new();
    for p_b in [0.0, 0.25, 0.5] {
        let spectrum = sector::collapse_uniform(20, 1.0, p_b).unwrap();
        let mut best = (f64::MIN, 0.0);
        for k in 0..=80 {
            let omega = 90.0 + pitch * k as f64;
            let field = uniform_field(omega);
            let p = single::transition_probability(&field, &spectrum, t);
            if p > best.0 {
                best = (p, omega);
            }
        }
        let expected = 100.0 + 1.0 * 20.0 * p_b / 2.0;
        pass &= (best.1 - expected).abs() <= pitch + 1e-9;
        detail.push_str(&format!("P_B={p_b}: peak {} (expect {expected}); ", best.1));
    }
    report(4, pass, start.elapsed().as_secs_f64(), detail.trim_end_matches("; "));
}

/// Criterion 5: bath-free driving gives an exact π-pulse on resonance
/// and the textbook detuned maximum ω₁²/(ω₁²+Δ₀²).
#[test]
fn criterion_05_free_rabi_pulse() {
    let start = Instant::now();
    let resonant = uniform_field(100.0);
    let p_pi = single::free_transition_probability(&resonant, std::f64::consts::PI / 10.0);
    let detuned = uniform_field(105.0);
    let rabi = (10.0f64 * 10.0 + 5.0 * 5.0).sqrt();
    let p_max = single::free_transition_probability(&detuned, std::f64::consts::PI / rabi);
    let expected = 100.0 / 125.0;
    let pass = (p_pi - 1.0).abs() <= 1e-12 && (p_max - expected).abs() <= 1e-12;
    report(
        5,
        pass,
        start.elapsed().as_secs_f64(),
        &format!("pi-pulse P = {p_pi:.15}, detuned max {p_max} (expect {expected})"),
    );
}

/// Local extrema of a sampled curve as (t, value) pairs.
fn extrema(ts: &[f64], ys: &[f64]) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    for i in 1..ys.len() - 1 {
        if (ys[i] - ys[i - 1]) * (ys[i + 1] - ys[i]) < 0.0 {
            out.push((ts[i], ys[i]));
        }
    }
    out
}

/// Half peak-to-peak oscillation amplitudes between adjacent extrema,
/// tagged with the midpoint time. Differencing removes the slowly
/// drifting baseline so only the decaying envelope remains.
fn envelope(ext: &[(f64, f64)]) -> Vec<(f64, f64)> {
    ext.windows(2)
        .map(|w| (0.5 * (w[0].0 + w[1].0), 0.5 * (w[0].1 - w[1].1).abs()))
        .collect()
}

/// Criterion 6: the exact resonant polarization of a 2000-spin bath
/// decays with a t^(-1/2) envelope, and the closed-form long-time
/// expression tracks that envelope to 5%.
#[test]
fn criterion_06_power_law_envelope() {
    let start = Instant::now();
    let (n, omega1, gamma) = (2000usize, 10.0, 0.25);
    let g = 2.0 * omega1 * (gamma / n as f64).sqrt();
    let spectrum = sector::collapse_uniform(n, g, 0.0).unwrap();
    let field = uniform_field(100.0);
    // omega1*t in [20, 200] -> t in [2, 20]; fine sampling to pin extrema
    let ts: Vec<f64> = (0..7201).map(|k| 2.0 + 0.0025 * k as f64).collect();
    let exact: Vec<f64> =
        ts.iter().map(|&t| single::polarizations(&field, &spectrum, t)[2]).collect();
    let asym: Vec<f64> = ts.iter().map(|&t| single::pz_asymptotic(omega1, n, g, t)).collect();

    let env_exact = envelope(&extrema(&ts, &exact));
    let env_asym = envelope(&extrema(&ts, &asym));

    // least-squares slope of log amplitude vs log t
    let logs: Vec<(f64, f64)> = env_exact.iter().map(|&(t, a)| (t.ln(), a.ln())).collect();
    let n_pts = logs.len() as f64;
    let (sx, sy): (f64, f64) = logs.iter().fold((0.0, 0.0), |s, p| (s.0 + p.0, s.1 + p.1));
    let (sxx, sxy): (f64, f64) =
        logs.iter().fold((0.0, 0.0), |s, p| (s.0 + p.0 * p.0, s.1 + p.0 * p.1));
    let slope = (n_pts * sxy - sx * sy) / (n_pts * sxx - sx * sx);

    // closed form vs exact: compare envelopes at matched times
    let mut rel_dev = 0.0f64;
    for &(t, a) in &env_exact {
        let (_, b) = env_asym
            .iter()
            .min_by(|x, y| (x.0 - t).abs().partial_cmp(&(y.0 - t).abs()).unwrap())
            .unwrap();
        rel_dev = rel_dev.max((a - b).abs() / a);
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = (slope + 0.5).abs() <= 0.1 && rel_dev <= 0.05 && elapsed < 30.0;
    report(
        6,
        pass,
        elapsed,
        &format!(
            "envelope exponent {slope:.3} (expect -0.5 +/- 0.1), closed form within {:.1}%",
            100.0 * rel_dev
        ),
    );
}

fn concurrence_series_separate(
    cfg: &TwoQubitFieldConfig,
    spectrum: &SectorSpectrum,
    state: BellState,
    ts: &[f64],
) -> Vec<f64> {
    ts.iter()
        .map(|&t| {
            let (rho, _) =
                two::evolve_separate_baths_bell(cfg, spectrum, spectrum, &bell_state(state), t)
                    .unwrap();
            measures::concurrence(rho.matrix()).unwrap()
        })
        .collect()
}

/// Criterion 7: with one bath per qubit, J = 0 and identical local
/// parameters, all four Bell states lose entanglement identically. The
/// degeneracy is exact for pure dephasing (no transverse drive); a
/// drive breaks it down to pairs at the 1e-4 level, which the guide's
/// errata chapter records against the blanket published claim.
#[test]
fn criterion_07_bell_degeneracy_separate_baths() {
    let start = Instant::now();
    let field = FieldConfig::new(100.0, 0.0, 100.0).unwrap();
    let cfg = TwoQubitFieldConfig::symmetric(field, 0.0).unwrap();
    let spectrum = sector::collapse_uniform(10, 1.0, 0.0).unwrap();
    let ts: Vec<f64> = (1..=200).map(|k| 0.01 * k as f64).collect();
    let curves: Vec<Vec<f64>> = BellState::ALL
        .iter()
        .map(|&s| concurrence_series_separate(&cfg, &spectrum, s, &ts))
        .collect();
    let mut max_dev = 0.0f64;
    for a in 0..curves.len() {
        for b in a + 1..curves.len() {
            for k in 0..ts.len() {
                max_dev = max_dev.max((curves[a][k] - curves[b][k]).abs());
            }
        }
    }
    // the shared curve must actually decay, or the coincidence is vacuous
    let final_c = curves[0][ts.len() - 1];
    let pass = max_dev <= 1e-10 && final_c < 0.5;
    report(
        7,
        pass,
        start.elapsed().as_secs_f64(),
        &format!("four Bell curves coincide, max pointwise gap {max_dev:.2e}, final C {final_c:.3}"),
    );
}

/// Time at which a concurrence curve first crosses one half, linearly
/// interpolated between samples.
fn time_to_half(ts: &[f64], cs: &[f64]) -> Option<f64> {
    for k in 1..cs.len() {
        if cs[k] < 0.5 && cs[k - 1] >= 0.5 {
            let f = (cs[k - 1] - 0.5) / (cs[k - 1] - cs[k]);
            return Some(ts[k - 1] + f * (ts[k] - ts[k - 1]));
        }
    }
    None
}

/// Criterion 8: a shared bath tells the triplet Bell states apart, and
/// every state survives longest when the drive sits on resonance. A
/// curve that never dips below one half inside the scan window counts
/// as an infinite time-to-half.
#[test]
fn criterion_08_bell_discrimination_common_bath() {
    let start = Instant::now();
    let spectrum = sector::collapse_uniform(20, 1.0, 0.0).unwrap();
    let ts: Vec<f64> = (0..=800).map(|k| 0.005 * k as f64).collect();
    let states = [BellState::TripletZero, BellState::PhiPlus, BellState::PhiMinus];
    let mut curves = Vec::new();
    let mut pass = true;
    let mut detail = String::new();
    for &state in &states {
        let mut halves = Vec::new();
        for dw in [0.0, 5.0] {
            let field = FieldConfig::new(100.0 - dw, 10.0, 100.0).unwrap();
            let cfg = TwoQubitFieldConfig::symmetric(field, 0.0).unwrap();
            let cs: Vec<f64> = ts
                .iter()
                .map(|&t| {
                    let rho =
                        two::reduced_state_2q_common(&cfg, &spectrum, &bell_state(state), t)
                            .unwrap();
                    measures::concurrence(rho.matrix()).unwrap()
                })
                .collect();
            halves.push(time_to_half(&ts, &cs));
            if dw == 0.0 {
                curves.push(cs);
            }
        }
        match (halves[0], halves[1]) {
            (Some(on), Some(off)) => {
                pass &= on > off;
                detail.push_str(&format!("t_half {on:.3} vs {off:.3}; "));
            }
            (None, Some(off)) => {
                detail.push_str(&format!("t_half >{:.0} vs {off:.3}; ", ts[ts.len() - 1]));
            }
            _ => pass = false,
        }
    }
    let mut max_gap = 0.0f64;
    for a in 0..curves.len() {
        for b in a + 1..curves.len() {
            for k in 0..ts.len() {
                max_gap = max_gap.max((curves[a][k] - curves[b][k]).abs());
            }
        }
    }
    pass &= max_gap > 1e-3;
    report(
        8,
        pass,
        start.elapsed().as_secs_f64(),
        &format!("triplet-state curve separation {max_gap:.2e}; resonant curves decay slowest: {detail}"),
    );
}

/// Criterion 9: the singlet is exactly stationary under any common bath
/// and any exchange coupling.
#[test]
fn criterion_09_singlet_protection() {
    let start = Instant::now();
    let g_list = vec![0.3, 1.1, 0.7, 1.9, 0.2, 0.8, 1.4, 0.6];
    let bath = make_bath(8, 0.3, CouplingModel::Explicit { g_list }).unwrap();
    let spectrum = sector::enumerate_sectors(&bath).unwrap();
    let mut worst = 0.0f64;
    for j in [0.0, 5.0] {
        let cfg = TwoQubitFieldConfig::symmetric(uniform_field(103.0), j).unwrap();
        for k in 1..=50 {
            let t = 0.04 * k as f64;
            let rho = two::reduced_state_2q_common(
                &cfg,
                &spectrum,
                &bell_state(BellState::Singlet),
                t,
            )
            .unwrap();
            worst = worst.max((measures::concurrence(rho.matrix()).unwrap() - 1.0).abs());
        }
    }
    let pass = worst <= 1e-10;
    report(
        9,
        pass,
        start.elapsed().as_secs_f64(),
        &format!("singlet concurrence pinned to 1 within {worst:.2e} over 100 samples"),
    );
}

/// Criterion 10: the closed-form concurrence of a driven interacting
/// pair matches the matrix route everywhere, and the corrected 1/4
/// prefactors of the double-flip probabilities are confirmed by
/// brute-force evolution (see the errata chapter of the guide).
#[test]
fn criterion_10_formula_arbitration() {
    let start = Instant::now();
    let trivial = SectorSpectrum::trivial();
    // the formula describes the entanglement generated from |↑↓⟩
    let up_dn = TwoQubitState::from_vector(&Array1::from(vec![
        C64::new(0.0, 0.0),
        C64::new(1.0, 0.0),
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
    ]))
    .unwrap();
    let mut max_dev = 0.0f64;
    for ji in 0..10 {
        let j = ji as f64;
        for wi in 1..=10 {
            let omega1 = wi as f64;
            let field = FieldConfig::new(50.0, omega1, 50.0).unwrap();
            let cfg = TwoQubitFieldConfig::symmetric(field, j).unwrap();
            for k in 1..=50 {
                let t = 0.04 * k as f64;
                let rho = two::reduced_state_2q_common(&cfg, &trivial, &up_dn, t).unwrap();
                let via_matrix = measures::concurrence(rho.matrix()).unwrap();
                let via_formula = measures::concurrence_free_formula(omega1, j, t);
                max_dev = max_dev.max((via_matrix - via_formula).abs());
            }
        }
    }

    // brute-force confirmation of the corrected prefactors: a bath of one
    // uncoupled spin makes the full solver evolve the free pair
    let free_bath = make_bath(1, 0.0, CouplingModel::Uniform { g: 0.0 }).unwrap();
    let field = uniform_field(100.0);
    let cfg = TwoQubitFieldConfig::symmetric(field, 3.0).unwrap();
    let t_pi = std::f64::consts::PI / 10.0;
    let spec = FullSystemSpec::two_qubit_common(&cfg, &free_bath);
    let rho = &spec.evolve_exact(&[1.0, 0.0, 0.0, 0.0], &[t_pi]).unwrap()[0];
    let aligned_dev = (rho[[3, 3]].re - 1.0).abs();

    let cfg0 = TwoQubitFieldConfig::symmetric(field, 0.0).unwrap();
    let spec0 = FullSystemSpec::two_qubit_common(&cfg0, &free_bath);
    let mut anti_dev = 0.0f64;
    for t in [0.05, 0.13, 0.29] {
        let rho = &spec0.evolve_exact(&[0.0, 1.0, 0.0, 0.0], &[t]).unwrap()[0];
        let expected = (10.0 * t / 2.0).sin().powi(4);
        anti_dev = anti_dev.max((rho[[2, 2]].re - expected).abs());
        // and the closed form agrees with itself at J = 0
        let p = two::transition_probabilities_free(10.0, 0.0, t);
        anti_dev = anti_dev.max((p.antialigned - expected).abs());
        anti_dev = anti_dev.max((p.aligned - expected).abs());
    }
    let pass = max_dev <= 1e-8 && aligned_dev <= 1e-8 && anti_dev <= 1e-8;
    report(
        10,
        pass,
        start.elapsed().as_secs_f64(),
        &format!(
            "formula vs matrix concurrence {max_dev:.2e}; prefactor checks {aligned_dev:.2e} / {anti_dev:.2e}"
        ),
    );
}

/// Criterion 11: every CLI subcommand produces byte-identical output
/// across repeated runs and across thread counts {1, max}.
#[test]
fn criterion_11_cli_determinism() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_spinbath");
    let max_threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .to_string();
    let runs: &[(&str, &[&str])] = &[
        ("shift-dist", &["--n", "8", "--bins", "21"]),
        ("rabi-sweep", &["--n", "8", "--omega_steps", "21"]),
        ("polarization", &["--n", "6", "--t_steps", "21"]),
        ("asymptote", &["--n", "100", "--t_steps", "21"]),
        ("bell-common", &["--n", "4", "--g_total", "4", "--t_steps", "9", "--delta_omega_list", "0,5"]),
        ("bell-separate", &["--n", "3", "--g_total", "3", "--t_steps", "9"]),
        ("oracle-check", &[]),
    ];
    let mut pass = true;
    let mut detail = String::new();
    for (sub, extra) in runs {
        let mut outputs = Vec::new();
        for threads in ["1", "1", max_threads.as_str()] {
            let out = std::process::Command::new(bin)
                .arg(sub)
                .args(*extra)
                .args(["--threads", threads])
                .output()
                .expect("CLI binary runs");
            if !out.status.success() {
                pass = false;
                detail.push_str(&format!("{sub}: exit {:?}; ", out.status.code()));
            }
            outputs.push(out.stdout);
        }
        if !(outputs[0] == outputs[1] && outputs[1] == outputs[2]) {
            pass = false;
            detail.push_str(&format!("{sub}: outputs differ; "));
        }
    }
    if detail.is_empty() {
        detail = "all 7 subcommands byte-identical across reruns and thread counts".into();
    }
    report(11, pass, start.elapsed().as_secs_f64(), &detail);
}
