//! Exact decoherence dynamics of driven qubits coupled to a spin bath.
//!
//! `spinbath` models one or two spin-½ qubits in a static longitudinal
//! field with a circularly rotating transverse drive, coupled to a bath of
//! `N` spin-½ nuclei through diagonal (Ising-type) hyperfine couplings
//! `g_k`. Because every bath spin's `I^z` commutes with the Hamiltonian,
//! the problem is block diagonal in the bath configuration: each of the
//! `2^N` configurations merely shifts the qubit's Larmor frequency by
//! `±g_k/2` per spin. The crate exploits this to average over the bath
//! *exactly* — no master equation, no weak-coupling approximation — by
//! enumerating or collapsing the shift spectrum and summing closed-form
//! 2×2 (or 4×4) propagators.
//!
//! Units: all frequencies and couplings are angular, in rad·µs⁻¹
//! (ħ = 1); times are in µs.
//!
//! # Module map
//!
//! - [`types`] — field, bath and state configuration types
//!   ([`types::FieldConfig`], [`types::make_bath`], [`types::QubitState`],
//!   [`types::TwoQubitState`], [`types::BellState`]).
//! - [`sector`] — the bath shift spectrum: exact enumeration
//!   ([`sector::enumerate_sectors`]), the lossless binomial collapse for
//!   uniform couplings ([`sector::collapse_uniform`]), and binned
//!   approximations for large non-uniform baths.
//! - [`single`] — one driven qubit: bath-averaged reduced states,
//!   transition probabilities, lab-frame polarizations, and the
//!   large-bath asymptotic envelope [`single::pz_asymptotic`].
//! - [`two`] — two qubits with exchange coupling `J`, sharing one bath or
//!   coupled to separate baths; Bell-state evolution and the
//!   Heisenberg-picture rotation maps ([`two::eta_matrix`]).
//! - [`measures`] — Wootters concurrence, purity and the linear-entropy
//!   decoherence measure.
//! - [`oracle`] — an independent cross-check: brute-force dense
//!   diagonalization of the full qubit ⊗ bath Hamiltonian, used by the
//!   test suite and the `oracle-check` CLI subcommand to validate the
//!   fast sector engine to ~1e-9.
//! - [`cli`] — the `spinbath` command-line tool (seven subcommands,
//!   deterministic CSV output).
//!
//! # Example: decoherence of Rabi oscillations
//!
//! A qubit driven on resonance would Rabi-flop forever; averaging over the
//! bath's frequency shifts damps the oscillation:
//!
//! ```
//! use spinbath::sector::collapse_uniform;
//! use spinbath::single::{polarizations, transition_probability};
//! use spinbath::types::FieldConfig;
//! use std::f64::consts::PI;
//!
//! // omega0 = 100, drive amplitude omega1 = 10, drive frequency on
//! // resonance; 20 unpolarized bath spins, coupling 2 rad/us each.
//! let field = FieldConfig::new(100.0, 10.0, 100.0)?;
//! let spectrum = collapse_uniform(20, 2.0, 0.0)?;
//!
//! // A free qubit flips with certainty after a pi pulse; the bath's
//! // random frequency shifts spoil the inversion …
//! let p = transition_probability(&field, &spectrum, PI / field.omega1);
//! assert!(p < 0.9);
//!
//! // … and after many Rabi periods the Bloch vector has shrunk well
//! // inside the unit ball: the state is strongly mixed.
//! let pol = polarizations(&field, &spectrum, 20.0);
//! let norm = pol.iter().map(|x| x * x).sum::<f64>().sqrt();
//! assert!(norm < 0.3);
//! # Ok::<(), spinbath::Error>(())
//! ```
//!
//! # Example: exchange-generated entanglement
//!
//! Two resonantly driven qubits starting in |↑↓⟩ entangle through their
//! exchange coupling; without a bath the concurrence is exactly
//! |sin Jt|:
//!
//! ```
//! use spinbath::measures::{concurrence, concurrence_free_formula};
//! use spinbath::sector::SectorSpectrum;
//! use spinbath::two::{reduced_state_2q_common, TwoQubitFieldConfig};
//! use spinbath::types::{FieldConfig, TwoQubitState};
//! use ndarray::Array1;
//! use num_complex::Complex64;
//!
//! let field = FieldConfig::new(100.0, 10.0, 100.0)?;
//! let cfg = TwoQubitFieldConfig::symmetric(field, 3.0)?;
//! let no_bath = SectorSpectrum::trivial();
//!
//! let up_dn = TwoQubitState::from_vector(&Array1::from(vec![
//!     Complex64::new(0.0, 0.0),
//!     Complex64::new(1.0, 0.0),
//!     Complex64::new(0.0, 0.0),
//!     Complex64::new(0.0, 0.0),
//! ]))?;
//!
//! let t = 0.4;
//! let rho = reduced_state_2q_common(&cfg, &no_bath, &up_dn, t)?;
//! let c = concurrence(rho.matrix())?;
//! assert!((c - concurrence_free_formula(10.0, 3.0, t)).abs() < 1e-12);
//! # Ok::<(), spinbath::Error>(())
//! ```
//!
//! # Cross-validation
//!
//! Every closed-form result in [`single`] and [`two`] is checked against
//! [`oracle`], which builds the full `2^(q+N)`-dimensional Hamiltonian and
//! diagonalizes it with LAPACK:
//!
//! ```
//! use spinbath::oracle::FullSystemSpec;
//! use spinbath::sector::enumerate_sectors;
//! use spinbath::single::reduced_state;
//! use spinbath::types::{make_bath, CouplingModel, FieldConfig, QubitState};
//! use spinbath::ops::trace_distance;
//!
//! let field = FieldConfig::new(100.0, 10.0, 103.0)?;
//! let bath = make_bath(4, 0.3, CouplingModel::Uniform { g: 0.8 })?;
//!
//! let fast = reduced_state(&field, &enumerate_sectors(&bath)?, &QubitState::up(), 1.3)?;
//! let slow = &FullSystemSpec::single_qubit(&field, &bath)
//!     .evolve_exact(&[1.0, 0.0], &[1.3])?[0];
//! assert!(trace_distance(fast.matrix(), slow) < 1e-12);
//! # Ok::<(), spinbath::Error>(())
//! ```
//!
//! The `acceptance` integration test (`cargo test --test acceptance --
//! --nocapture`) runs this comparison over a grid of bath sizes,
//! polarizations and coupling models, plus end-to-end checks of every
//! physical claim the crate makes.

pub mod cli;
pub mod error;
pub mod measures;
pub mod ops;
pub mod oracle;
pub mod sector;
pub mod single;
pub mod two;
pub mod types;

pub use error::{Error, Result};
pub use measures::{concurrence, purity};
pub use sector::{collapse_uniform, enumerate_sectors, SectorSpectrum};
pub use single::{polarizations, reduced_state, transition_probability};
pub use types::{make_bath, BellState, CouplingModel, FieldConfig, QubitState, TwoQubitState};
