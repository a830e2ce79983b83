window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","model.html#model-and-conventions","model.html#hamiltonian","model.html#the-rotating-frame","model.html#bath-state-and-averaging","model.html#library-types","sectors.html#bath-sectors-and-shift-spectra","sectors.html#exact-enumeration","sectors.html#the-binomial-collapse","sectors.html#binned-spectra-for-large-non-uniform-baths","sectors.html#shift-histograms","sectors.html#provenance","single-qubit.html#one-qubit-driven-dynamics-and-decoherence","single-qubit.html#bath-averaged-evolution","single-qubit.html#transition-probability-and-the-shifted-resonance","single-qubit.html#pulse-fidelity","single-qubit.html#lab-frame-polarizations","single-qubit.html#asymptotic-decay-envelope","two-qubits.html#two-qubits-exchange-baths-and-entanglement","two-qubits.html#configuration","two-qubits.html#free-pair-flip-probabilities-and-entanglement","two-qubits.html#common-bath","two-qubits.html#separate-baths-and-the-heisenberg-rotation-maps","oracle.html#the-brute-force-oracle","oracle.html#cost-and-limits","oracle.html#what-the-acceptance-gate-checks","cli.html#command-line-tool-and-figures","cli.html#figure-configs","errata.html#errata-on-published-closed-forms","errata.html#1-free-pair-concurrence-is-sin-jt-with-no-drive-dependence","errata.html#2-double-flip-probabilities-need-a-¼-prefactor","errata.html#3-four-bell-degeneracy-under-separate-baths-requires-ω₁--0","errata.html#4-transverse-polarization-sign-convention","errata.html#5-signtypo-in-the-33-element-of-the-rotation-map","errata.html#6-the-asymptotic-decay-parameter-γ","errata.html#7-units-typo-in-the-decoherence-figure"],"index":{"documentStore":{"docInfo":{"0":{"body":216,"breadcrumbs":2,"title":1},"1":{"body":0,"breadcrumbs":4,"title":2},"10":{"body":41,"breadcrumbs":6,"title":2},"11":{"body":35,"breadcrumbs":5,"title":1},"12":{"body":0,"breadcrumbs":10,"title":5},"13":{"body":46,"breadcrumbs":8,"title":3},"14":{"body":70,"breadcrumbs":9,"title":4},"15":{"body":48,"breadcrumbs":7,"title":2},"16":{"body":59,"breadcrumbs":8,"title":3},"17":{"body":79,"breadcrumbs":8,"title":3},"18":{"body":0,"breadcrumbs":10,"title":5},"19":{"body":51,"breadcrumbs":6,"title":1},"2":{"body":87,"breadcrumbs":3,"title":1},"20":{"body":103,"breadcrumbs":10,"title":5},"21":{"body":88,"breadcrumbs":7,"title":2},"22":{"body":110,"breadcrumbs":10,"title":5},"23":{"body":119,"breadcrumbs":6,"title":3},"24":{"body":43,"breadcrumbs":5,"title":2},"25":{"body":109,"breadcrumbs":6,"title":3},"26":{"body":146,"breadcrumbs":8,"title":4},"27":{"body":145,"breadcrumbs":6,"title":2},"28":{"body":35,"breadcrumbs":8,"title":4},"29":{"body":77,"breadcrumbs":12,"title":8},"3":{"body":82,"breadcrumbs":4,"title":2},"30":{"body":36,"breadcrumbs":10,"title":6},"31":{"body":58,"breadcrumbs":13,"title":9},"32":{"body":41,"breadcrumbs":9,"title":5},"33":{"body":36,"breadcrumbs":10,"title":6},"34":{"body":39,"breadcrumbs":8,"title":4},"35":{"body":27,"breadcrumbs":9,"title":5},"4":{"body":41,"breadcrumbs":5,"title":3},"5":{"body":79,"breadcrumbs":4,"title":2},"6":{"body":33,"breadcrumbs":8,"title":4},"7":{"body":45,"breadcrumbs":6,"title":2},"8":{"body":60,"breadcrumbs":6,"title":2},"9":{"body":30,"breadcrumbs":10,"title":6}},"docs":{"0":{"body":"spinbath computes the exact quantum dynamics of one or two driven\\nspin-½ qubits coupled to a bath of N nuclear spins — no master\\nequation, no Markov or weak-coupling approximation, no stochastic\\nsampling. The trick that makes this possible is a symmetry of the model: the qubit\\ncouples to each bath spin only through S^z I^z_k, so every bath spin’s I^z_k is a constant of motion. The full Hilbert space splits into 2^N\\ndynamically disconnected sectors, one per classical bath configuration,\\nand inside each sector the qubit simply sees a shifted Larmor frequency.\\nThe reduced qubit state is a weighted average of closed-form single-qubit\\n(or two-qubit) evolutions over the distribution of those shifts. For a\\nuniform bath, the 2^N configurations collapse losslessly to N + 1\\nbinomially weighted shifts, so baths with thousands of spins cost\\nessentially nothing. Decoherence in this model is inhomogeneous dephasing made exact: each\\nsector evolves unitarily forever, but the sectors drift out of phase and\\ntheir average loses purity. The crate exposes this at three levels: Closed forms for transition probabilities, lab-frame\\npolarizations, flip probabilities of coupled qubit pairs, and the\\nlarge-bath asymptotic decay envelope. A sector engine that evolves arbitrary initial states under common\\nor separate baths with arbitrary coupling distributions. A brute-force oracle that diagonalizes the full qubit ⊗ bath\\nHamiltonian (up to dimension 4096) and certifies the engine to about\\nnine decimal places. The chapters that follow define the model and its conventions, walk\\nthrough the sector machinery, develop the one- and two-qubit physics,\\ndescribe the oracle and the command-line tool, and close with an errata\\nchapter: while validating the engine against its oracle we found several\\npublished closed-form expressions for this model that are wrong, and the\\ncorrections are documented there. Every code snippet in this guide is mirrored as a tested doc-test or\\nunit test in the crate, so the guide cannot silently drift out of sync\\nwith the library.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"","breadcrumbs":"Model and Conventions » Model and Conventions","id":"1","title":"Model and Conventions"},"10":{"body":"shift_histogram(&spectrum, delta0, bins, (lo, hi)) converts a spectrum\\ninto a plottable histogram of detunings around delta0 = ω − ω₀; the shift-dist CLI subcommand exposes it. For an unpolarized uniform bath\\nthe distribution is the binomial envelope approaching a gaussian of\\nstandard deviation g√N/2; a gaussian coupling profile produces a\\ndistinctly non-gaussian, sharply peaked distribution because most spins\\ncouple weakly.","breadcrumbs":"Bath Sectors and Shift Spectra » Shift histograms","id":"10","title":"Shift histograms"},"11":{"body":"Every spectrum records how it was built; spectrum.provenance() reports\\nthe construction route and the number of sector evaluations, which the\\nacceptance suite uses to prove the collapse actually avoided the\\nexponential work. SectorSpectrum::trivial() is the bath-free spectrum\\n(a single sector at zero shift) — handy for recovering free-qubit\\nphysics from the same code paths.","breadcrumbs":"Bath Sectors and Shift Spectra » Provenance","id":"11","title":"Provenance"},"12":{"body":"","breadcrumbs":"One Qubit: Driven Dynamics and Decoherence » One Qubit: Driven Dynamics and Decoherence","id":"12","title":"One Qubit: Driven Dynamics and Decoherence"},"13":{"body":"single::reduced_state averages the lab-frame sector propagators over a\\nspectrum: use spinbath::sector::collapse_uniform;\\nuse spinbath::single::reduced_state;\\nuse spinbath::types::{FieldConfig, QubitState}; let field = FieldConfig::new(100.0, 10.0, 100.0)?; // resonant drive\\nlet spectrum = collapse_uniform(20, 2.0, 0.0)?;\\nlet rho = reduced_state(&field, &spectrum, &QubitState::up(), 1.0)?; The result is always a valid density matrix (the property-test suite\\nchecks positivity for random parameters), and its purity decays as the\\nsectors dephase.","breadcrumbs":"One Qubit: Driven Dynamics and Decoherence » Bath-averaged evolution","id":"13","title":"Bath-averaged evolution"},"14":{"body":"The flip probability from |↑⟩ is the weighted two-level result P_↓(t) = Σ w(s) · (ω₁/Ω_s)² sin²(Ω_s t/2) Sweeping the drive frequency ω at fixed pulse length t = π/ω₁ maps\\nout the resonance. A polarized bath does not just broaden the line — it moves it: the mean bath shift g N p / 2 acts as an effective static\\nfield, so the peak sits at ω_peak = ω₀ + g N p / 2 The acceptance suite locates the argmax numerically for p ∈ {0, 0.25, 0.5} and finds exactly this displacement. This is the\\nbasis for using the qubit as a bath-polarization meter, and conversely\\nfor why an unknown bath polarization detunes a nominally resonant gate.","breadcrumbs":"One Qubit: Driven Dynamics and Decoherence » Transition probability and the shifted resonance","id":"14","title":"Transition probability and the shifted resonance"},"15":{"body":"For a free qubit ( SectorSpectrum::trivial()) a resonant pulse of\\nduration π/ω₁ inverts the qubit with probability exactly 1; detuned by Δ₀, the maximum of P_↓(t) is ω₁²/(ω₁² + Δ₀²). With a bath, the\\nπ-pulse fidelity is the binomially weighted average of that Lorentzian\\nfactor — the stronger the total coupling relative to ω₁, the worse the\\ninversion: use std::f64::consts::PI;\\nuse spinbath::single::free_transition_probability; let resonant = FieldConfig::new(100.0, 10.0, 100.0)?;\\nlet p = free_transition_probability(&resonant, PI / resonant.omega1);\\nassert!((p - 1.0).abs() < 1e-12); // perfect pi pulse, no bath","breadcrumbs":"One Qubit: Driven Dynamics and Decoherence » Pulse fidelity","id":"15","title":"Pulse fidelity"},"16":{"body":"single::polarizations returns the Bloch vector (P^x, P^y, P^z) of the\\nbath-averaged state starting from |↑⟩. In closed form P^z(t) = Σ w(s) (1 − 2 f_s(t)²), f_s(t) = (ω₁/Ω_s) sin(Ω_s t/2) and the transverse components carry the lab-frame precession at the\\ndrive frequency. Note a sign convention worth pinning down: with the\\nframe transformation W(t) = e^{iωt S^z} used here, the lab transverse\\ncomponents rotate as (P^x + iP^y)_lab = e^{−iωt}(P^x + iP^y)_rot — a\\npublished version of these formulas uses the opposite convention; see\\nthe errata.","breadcrumbs":"One Qubit: Driven Dynamics and Decoherence » Lab-frame polarizations","id":"16","title":"Lab-frame polarizations"},"17":{"body":"For a large unpolarized uniform bath, define the dimensionless strength γ = N g² / 4ω₁² and γ′ = γ ω₁ Then for times past the first few Rabi periods P^z(t) ≈ cos(ω₁t + ½ arctan γ′t) / (1 + γ′²t²)^{1/4} + γ [1 − cos(ω₁t + (3/2) arctan γ′t) / (1 + γ′²t²)^{3/4}] The oscillation decays only as a power law t^{−1/2} (not\\nexponentially — there is no Markovian bath here), with a\\nstrength-dependent phase creep ½ arctan γ′t → π/4. The function single::pz_asymptotic(omega1, n, g, t) evaluates this closed form; the\\nacceptance suite fits the envelope of the exact N = 2000 evolution and\\nfinds the exponent −0.497 and agreement with the closed form to 0.3%. The asymptote CLI subcommand prints both the exact and asymptotic\\ncurves side by side for plotting.","breadcrumbs":"One Qubit: Driven Dynamics and Decoherence » Asymptotic decay envelope","id":"17","title":"Asymptotic decay envelope"},"18":{"body":"","breadcrumbs":"Two Qubits: Exchange, Baths and Entanglement » Two Qubits: Exchange, Baths and Entanglement","id":"18","title":"Two Qubits: Exchange, Baths and Entanglement"},"19":{"body":"use spinbath::two::TwoQubitFieldConfig;\\nuse spinbath::types::FieldConfig; let site = FieldConfig::new(100.0, 10.0, 100.0)?;\\nlet cfg = TwoQubitFieldConfig::symmetric(site, 3.0)?; // J = 3\\n// or different site frequencies / drives per qubit:\\nlet cfg2 = TwoQubitFieldConfig::new( FieldConfig::new(100.0, 10.0, 101.0)?, FieldConfig::new(103.0, 10.0, 101.0)?, 0.0,\\n)?; Both qubits see the same circularly rotating drive frequency per site\\nconfig; the exchange term J S₁·S₂ is frame invariant when both sites\\nshare one drive frequency.","breadcrumbs":"Two Qubits: Exchange, Baths and Entanglement » Configuration","id":"19","title":"Configuration"},"2":{"body":"One qubit (spin-½ operators S, with S^z = σ^z/2 etc.) sits in a\\nstatic longitudinal field and a circularly rotating transverse drive, and\\ncouples diagonally to N bath spins I_k: H(t) = ω₀ S^z + ω₁ [S^x cos ωt − S^y sin ωt] + Σ_k g_k S^z I^z_k For two qubits an exchange term J S₁·S₂ is added, each qubit gets its\\nown site frequency ω₀ᵢ, and the pair either shares one bath (both\\nqubits couple to the same I^z_k) or each qubit has its own bath. Units. ħ = 1 throughout. All frequencies ( ω₀, ω₁, ω, g_k, J) are angular frequencies in rad·µs⁻¹; times are in µs. A drive of\\namplitude ω₁ therefore completes a full Rabi cycle in 2π/ω₁ µs. Basis order. Two-qubit states are written in the product basis\\nordered |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩.","breadcrumbs":"Model and Conventions » Hamiltonian","id":"2","title":"Hamiltonian"},"20":{"body":"With no bath and a resonant drive, the closed forms for the double-flip\\nprobabilities are ( two::transition_probabilities_free): P_{↑↑→↓↓}(t) = ¼ (1 − cos ω₁t)² (aligned)\\nP_{↑↓→↓↑}(t) = ¼ |1 − e^{iJt} cos ω₁t|² (antialigned) Both reduce to sin⁴(ω₁t/2) at J = 0 — two independent π-pulses. The\\naligned channel is J-independent: the triplet {|↑↑⟩, (|↑↓⟩+|↓↑⟩)/√2, |↓↓⟩} is an eigenspace of S₁·S₂, so exchange contributes only a\\nglobal phase. The antialigned channel interferes the singlet and triplet\\npaths, and J shows up as the beat e^{iJt}. Starting from |↑↓⟩, the same interference generates entanglement:\\nthe concurrence is C(t) = |sin Jt| independent of the drive amplitude ω₁. The resonant drive rotates the\\ntriplet component rigidly (a global SU(2) rotation of the spin-1 block)\\nwhile the singlet only accumulates the exchange phase; the Wootters\\nconcurrence is invariant under local — and here effectively collective —\\nrotations, so only the exchange phase survives. Jt = π/2 is the\\nmaximally entangling √SWAP point. A published formula for this quantity\\ndisagrees; see the errata.","breadcrumbs":"Two Qubits: Exchange, Baths and Entanglement » Free pair: flip probabilities and entanglement","id":"20","title":"Free pair: flip probabilities and entanglement"},"21":{"body":"When both qubits couple to the same bath spins, each sector shifts\\nboth site frequencies together. two::reduced_state_2q_common averages\\nthe 4×4 sector propagators: use spinbath::measures::concurrence;\\nuse spinbath::sector::collapse_uniform;\\nuse spinbath::two::reduced_state_2q_common;\\nuse spinbath::types::{bell_state, BellState}; let spectrum = collapse_uniform(20, 1.0, 0.0)?;\\nlet rho = reduced_state_2q_common(&cfg, &spectrum, &bell_state(BellState::PhiPlus), 0.8)?;\\nlet c = concurrence(rho.matrix())?; The singlet is decoherence free under a common bath: it is\\nannihilated by the collective S^z and is an exchange eigenstate, so\\nevery sector acts on it identically and the average stays pure. The\\nacceptance suite holds its concurrence at 1 to 2·10⁻¹⁵ for all times,\\nbaths and J. The three triplet-sector Bell states decohere at visibly\\ndifferent rates, and detuning the drive reorders how fast — resonant\\ndriving can protect entanglement (longer time above C = ½) compared\\nto detuned driving.","breadcrumbs":"Two Qubits: Exchange, Baths and Entanglement » Common bath","id":"21","title":"Common bath"},"22":{"body":"With independent baths the two qubits dephase independently. In the\\nHeisenberg picture each sector acts on a qubit’s Bloch vector as a\\nproper rotation η(s, t) = R_z(ωt) · R_{n̂}(Ω_s t), n̂ = (ω₁, 0, −Δ_s)/Ω_s ( two::eta_matrix, built from the Rodrigues formula). Averaging over a\\nspectrum gives a contraction η̄ ( two::averaged_eta), and the full\\ntwo-qubit polarization data evolves as P⁽ⁱ⁾(t) = η̄⁽ⁱ⁾ P⁽ⁱ⁾(0), Π(t) = η̄⁽¹⁾ Π(0) (η̄⁽²⁾)ᵀ where Π is the 3×3 two-point correlation block. This is what two::evolve_separate_baths_bell (and the general-state variant) uses\\nat J = 0; with J ≠ 0 it automatically routes through an exact\\nproduct-of-sector-pairs evolution instead. A neat exact degeneracy: with ω₁ = 0 (pure dephasing) and identical\\nlocal parameters, all four Bell states decohere along identical\\nconcurrence curves C(t) = κ(t)², where κ is the single-qubit\\ncoherence factor — the acceptance suite confirms the four curves\\ncoincide to 1.3·10⁻¹³ while decaying all the way to zero. With a\\ntransverse drive on, the degeneracy splits into two exact pairs; see the errata for the distinction.","breadcrumbs":"Two Qubits: Exchange, Baths and Entanglement » Separate baths and the Heisenberg rotation maps","id":"22","title":"Separate baths and the Heisenberg rotation maps"},"23":{"body":"Closed forms are only as trustworthy as their derivation. The [ oracle]\\nmodule provides an independent implementation that shares no dynamics\\ncode with the sector engine: it builds the complete qubit ⊗ bath\\nHamiltonian in the rotating frame as one dense real-symmetric matrix of\\ndimension 2^(q+N) (q = 1 or 2 qubits), diagonalizes it with LAPACK\\n( dsyevd), and evolves the exact global state |Ψ(t)⟩ = Σ_n e^{−iE_n t} |n⟩⟨n|Ψ(0)⟩ before tracing out the bath and undoing the frame transformation. The\\ninitial bath state is the thermal product state; the system part is\\nsupplied by the caller: use spinbath::oracle::FullSystemSpec;\\nuse spinbath::sector::enumerate_sectors;\\nuse spinbath::single::reduced_state;\\nuse spinbath::ops::trace_distance;\\nuse spinbath::types::{make_bath, CouplingModel, FieldConfig, QubitState}; let field = FieldConfig::new(100.0, 10.0, 103.0)?;\\nlet bath = make_bath(8, 0.3, CouplingModel::Uniform { g: 0.8 })?; let fast = reduced_state(&field, &enumerate_sectors(&bath)?, &QubitState::up(), 1.3)?;\\nlet slow = &FullSystemSpec::single_qubit(&field, &bath) .evolve_exact(&[1.0, 0.0], &[1.3])?[0];\\nassert!(trace_distance(fast.matrix(), slow) < 1e-9); FullSystemSpec::two_qubit_common and ::two_qubit_separate cover the\\npair configurations; evolve_stepped provides a second, eigensolver-free\\nroute (repeated short-time propagator squaring) that cross-checks the\\neigendecomposition itself.","breadcrumbs":"The Brute-Force Oracle » The Brute-Force Oracle","id":"23","title":"The Brute-Force Oracle"},"24":{"body":"Dense diagonalization scales as the cube of the dimension: MAX_EXACT_DIM = 4096 (two qubits + 10 shared bath spins ≈ 43 s per\\ncall) and MAX_STEPPED_DIM = 1024 keep runtimes sane. That is exactly\\nwhy the sector engine exists — the oracle certifies it on small baths,\\nand the sector structure guarantees the certification extrapolates:\\nnothing about the engine changes between N = 10 and N = 2000.","breadcrumbs":"The Brute-Force Oracle » Cost and limits","id":"24","title":"Cost and limits"},"25":{"body":"cargo test --test acceptance -- --nocapture prints one line per\\ncriterion. The oracle-facing ones: single-qubit evolution vs oracle over N ∈ {2, 6, 10}, uniform and\\nexplicit couplings, bath polarizations {0, 0.5, 1}, twenty random (ω, t) points — agreement ~9·10⁻¹⁵ against a 1e-9 gate; two-qubit common- and separate-bath Bell evolution vs oracle with and\\nwithout exchange — agreement ~7·10⁻¹⁵; the CLI oracle-check subcommand re-runs a condensed version of these\\ncomparisons at runtime and exits with code 2 if any tolerance fails,\\nso an installed binary can self-certify on new hardware or a different\\nBLAS. One implementation pitfall worth recording: complex Hermitian\\neigensolvers over row-major storage silently operate on the conjugate\\nmatrix with some LAPACK bindings. All eigendecompositions in the crate\\ngo through a single column-major entry point\\n( ops::hermitian_eigensystem) to make that mistake impossible to\\nreintroduce.","breadcrumbs":"The Brute-Force Oracle » What the acceptance gate checks","id":"25","title":"What the acceptance gate checks"},"26":{"body":"spinbath <subcommand> [--config FILE] [--out FILE] [--threads K] [--key VALUE …] Parameters come from an optional flat config file ( key = value, #\\ncomments) overridden by command-line flags. Unknown keys are rejected\\nwith the full list of valid keys. Output is CSV on stdout or --out: a\\nheader row, then rows of shortest-round-trip formatted floats — reruns are byte identical, and identical across --threads settings\\n(the SPINBATH_THREADS environment variable is the flag’s fallback).\\nExit codes: 0 success, 1 invalid input, 2 oracle-check tolerance\\nfailure. Subcommand Output shift-dist histogram of bath-induced detunings, uniform vs gaussian coupling columns rabi-sweep flip probability vs drive frequency, one column per bath polarization in p_list polarization lab-frame P^x, P^y, P^z, Bloch norm and decoherence vs time asymptote exact vs closed-form asymptotic P^z for a large bath bell-common concurrence and purity of Bell states under one common bath, per drive detuning in delta_omega_list bell-separate concurrence of Bell states under independent baths, per detuning pair in detuning_pairs oracle-check engine-vs-oracle deviations and pass/fail per check","breadcrumbs":"Command-Line Tool and Figures » Command-Line Tool and Figures","id":"26","title":"Command-Line Tool and Figures"},"27":{"body":"crates/spinbath/examples/ ships one config per guide figure: fig1_shift_distribution — detuning histogram, uniform vs gaussian\\nprofile ( shift-dist). The gaussian profile concentrates weight near\\nzero shift because most spins couple weakly. fig2_rabi_sweep_uniform / _gaussian — resonance line P_↓(π/ω₁)\\nvs ω around ω₀ = 1000 ( rabi-sweep); linewidth tracks the shift\\ndistribution of the coupling model. fig3_polarization_uniform / _gaussian — decay of Rabi oscillations\\nin P^z(t) ( polarization). fig4_decoherence — growth of the linear-entropy decoherence\\nmeasure for the same parameters. (The source material for this figure\\nlists its frequency units as “mHz”, an obvious typo for MHz; the\\nconfig notes it.) fig5_rabi_sweep_polarized — line displacement gNp/2 for p ∈ {0, 0.25, 0.5} ( rabi-sweep). fig6_bell_common — Bell-state concurrence under a common bath at\\nresonant vs detuned drive ( bell-common); the singlet is omitted as\\nexactly stationary. fig7_bell_separate — singlet decay under separate baths as both\\ndrives are detuned by (0, 0), (3, 3) and (10, 10) rad·µs⁻¹\\n( bell-separate). Run any of them as: spinbath polarization --config crates/spinbath/examples/fig3_polarization_uniform.conf In all configs g_total is the sum of the couplings Σ g_k; the\\nper-spin coupling of a uniform bath is g_total / n. The gamma key is\\nan alternative way to set the coupling from the dimensionless decay\\nstrength: g = 2ω₁√(γ/n), used by the asymptote figure.","breadcrumbs":"Command-Line Tool and Figures » Figure configs","id":"27","title":"Figure configs"},"28":{"body":"The closed-form results for this model circulating in the literature\\ncontain several errors and ambiguities. Each item below was adjudicated\\nthe same way: evolve the full system with the brute-force oracle (and,\\nindependently, with the sector engine), and compare against the printed\\nexpression. The crate implements the corrected forms; the tests pin\\nthem.","breadcrumbs":"Errata on Published Closed Forms » Errata on Published Closed Forms","id":"28","title":"Errata on Published Closed Forms"},"29":{"body":"For two resonantly driven, exchange-coupled qubits starting in |↑↓⟩, a\\npublished expression for the concurrence is C(t) = ½ |1 − e^{iJt} cos² ω₁t − sin² ω₁t| = cos² ω₁t · |sin(Jt/2)| Direct evolution of the 4×4 problem gives instead, to machine precision\\n(1e-15 across a 10×10×50 grid in ω₁ × J × t): C(t) = |sin Jt| independent of ω₁. Physically: the resonant drive rotates the triplet\\nblock rigidly and concurrence is invariant under such collective\\nrotations, so only the singlet–triplet exchange phase e^{iJt} can\\nmatter. The printed form would have entanglement vanish at drive zeros ω₁t = π/2 and peak at Jt = π — both contradicted by the exact\\ndynamics ( Jt = π is a full SWAP, a product state).\\nImplementation: measures::concurrence_free_formula.","breadcrumbs":"Errata on Published Closed Forms » 1. Free-pair concurrence is |sin Jt|, with no drive dependence","id":"29","title":"1. Free-pair concurrence is |sin Jt|, with no drive dependence"},"3":{"body":"The drive is removed by the frame transformation W(t) = e^{iωt S^z}\\n(one factor per qubit for a pair). In a bath configuration whose\\naccumulated shift is s = Σ_k (±g_k/2), the rotating-frame Hamiltonian\\nis time independent: H_rot = −Δ S^z + ω₁ S^x, Δ = ω − (ω₀ + s) Δ is the detuning of the drive from the shifted Larmor frequency. The\\nqubit precesses about the tilted axis n̂ = (ω₁, 0, −Δ)/Ω at the\\ngeneralized Rabi frequency Ω = √(ω₁² + Δ²) The 2×2 sector propagator in the rotating frame is U_rot(t) = [ a b ] a = cos(Ωt/2) + i (Δ/Ω) sin(Ωt/2) [ b a*] b = −i (ω₁/Ω) sin(Ωt/2) and the lab-frame propagator is diag(e^{−iωt/2}, e^{+iωt/2}) · U_rot(t).\\nThe flip amplitude gives the sector transition probability f(t) = (ω₁/Ω) sin(Ωt/2), P_{↑→↓}(t) = f(t)² which is the standard driven-two-level result: unit amplitude on\\nresonance ( Δ = 0), suppressed by ω₁²/Ω² off resonance.","breadcrumbs":"Model and Conventions » The rotating frame","id":"3","title":"The rotating frame"},"30":{"body":"The resonant pair flip probabilities must satisfy the J = 0 limit of\\ntwo independent π-pulses, sin⁴(ω₁t/2), and unitarity bounds. The\\ncorrect forms are P_{↑↑→↓↓} = ¼ (1 − cos ω₁t)²\\nP_{↑↓→↓↑} = ¼ |1 − e^{iJt} cos ω₁t|² Printed versions omitting the ¼ exceed 1. Verified against the oracle at\\n~1e-15 ( two::transition_probabilities_free).","breadcrumbs":"Errata on Published Closed Forms » 2. Double-flip probabilities need a ¼ prefactor","id":"30","title":"2. Double-flip probabilities need a ¼ prefactor"},"31":{"body":"It is claimed that with separate but identical baths and identical local\\nparameters, all four Bell states follow one common concurrence curve.\\nExactly true only for pure dephasing ( ω₁ = 0), where the local\\nchannel is a rotation times diag(κ, κ, 1) on the Bloch sphere and\\nevery Bell state gives C = κ² (verified to 1.3·10⁻¹³). With a\\ntransverse drive the degeneracy splits into two exact pairs —\\n{Singlet, Φ⁻} and {T₀, Φ⁺} — separated by a small but genuinely nonzero\\ngap (~10⁻⁴ for typical figure parameters). The gap is physical, not\\nnumerical: it persists under the oracle.","breadcrumbs":"Errata on Published Closed Forms » 3. Four-Bell degeneracy under separate baths requires ω₁ = 0","id":"31","title":"3. Four-Bell degeneracy under separate baths requires ω₁ = 0"},"32":{"body":"With the rotating-frame transformation written W(t) = e^{iωt S^z}\\n(the convention of this crate), the lab transverse polarizations rotate\\nas (P^x + iP^y)_lab = e^{−iωt} (P^x + iP^y)_rot. Published formulas\\nuse the conjugate convention; copying them verbatim flips the sign of P^y and breaks agreement with the oracle. The crate’s single::polarizations matches the oracle’s lab-frame Bloch vector to\\nmachine precision.","breadcrumbs":"Errata on Published Closed Forms » 4. Transverse polarization sign convention","id":"32","title":"4. Transverse polarization sign convention"},"33":{"body":"The per-sector Heisenberg rotation η = R_z(ωt) R_{n̂}(Ωt) has η₃₃ = (Δ² + ω₁² cos Ωt)/Ω². A printed component table shows ω²\\nwhere ω₁² belongs — dimensionally inconsistent and in conflict with η₃₃(t=0) = 1. The crate derives the whole matrix from the Rodrigues\\nformula instead of transcribing components ( two::eta_matrix), and the\\nproperty suite checks orthogonality and unit determinant for random\\nparameters.","breadcrumbs":"Errata on Published Closed Forms » 5. Sign/typo in the (3,3) element of the rotation map","id":"33","title":"5. Sign/typo in the (3,3) element of the rotation map"},"34":{"body":"The long-time envelope formula is written in terms of both a\\ndimensionless strength γ = Ng²/4ω₁² and a rate γ′ whose definition\\nis ambiguous in the source. Matching the exact N = 2000 evolution\\nfixes γ′ = γ ω₁ (units rad·µs⁻¹): with this choice the closed form\\ntracks the exact envelope to 0.3% and the fitted power-law exponent is\\n−0.497 ≈ −½. The other candidate readings disagree grossly.","breadcrumbs":"Errata on Published Closed Forms » 6. The asymptotic decay parameter γ′","id":"34","title":"6. The asymptotic decay parameter γ′"},"35":{"body":"The reference figure corresponding to fig4_decoherence.conf labels its\\nfrequency scale in “mHz”; every number in context (fields of order\\n100 rad·µs⁻¹) makes clear this is a typo for MHz. The shipped config\\nnotes this and uses the rad·µs⁻¹ values consistent with the rest of the\\nfigures.","breadcrumbs":"Errata on Published Closed Forms » 7. Units typo in the decoherence figure","id":"35","title":"7. Units typo in the decoherence figure"},"4":{"body":"The bath starts in a product thermal state with polarization p ∈ [−1, 1]: each spin is up with probability (1 + p)/2. Because each\\nsector evolves independently, the reduced qubit state is the\\nprobability-weighted average of the per-sector evolutions: ρ(t) = Σ_sectors w(s) · U_s(t) ρ(0) U_s(t)† This average is where decoherence comes from — every term is unitary, but\\ntheir phases disperse.","breadcrumbs":"Model and Conventions » Bath state and averaging","id":"4","title":"Bath state and averaging"},"5":{"body":"use spinbath::types::{make_bath, CouplingModel, FieldConfig}; // omega0 = 100, omega1 = 10, drive at omega = 103 (all rad/us)\\nlet field = FieldConfig::new(100.0, 10.0, 103.0)?; // 20 bath spins, polarization 0.3, three coupling models:\\nlet uniform = make_bath(20, 0.3, CouplingModel::Uniform { g: 1.0 })?;\\nlet gaussian = make_bath(20, 0.3, CouplingModel::GaussianProfile { g: 20.0, // total coupling, sum of all g_k alpha: 0.01, // g_k ∝ exp(-alpha k^2)\\n})?;\\nlet explicit = make_bath(3, 0.3, CouplingModel::Explicit { g_list: vec![0.4, 0.7, 1.0],\\n})?; CouplingModel::Uniform takes the per-spin coupling g; GaussianProfile takes the total coupling (the profile is normalized\\nso Σ g_k = g). States are QubitState / TwoQubitState — density\\nmatrices validated for Hermiticity, unit trace and positivity on\\nconstruction.","breadcrumbs":"Model and Conventions » Library types","id":"5","title":"Library types"},"6":{"body":"Everything the bath does to the qubit is summarized by a shift\\nspectrum: a list of (shift, weight) pairs, where shift is the\\nLarmor-frequency offset Σ_k (±g_k/2) of one bath configuration class\\nand weight is its probability under the thermal product state. The\\n[ sector] module builds these spectra; the dynamics modules consume\\nthem.","breadcrumbs":"Bath Sectors and Shift Spectra » Bath Sectors and Shift Spectra","id":"6","title":"Bath Sectors and Shift Spectra"},"7":{"body":"enumerate_sectors walks all 2^N configurations, merging\\nconfigurations whose shifts coincide (exact for uniform couplings,\\ntolerance-free anchor matching otherwise): use spinbath::sector::enumerate_sectors;\\nuse spinbath::types::{make_bath, CouplingModel}; let bath = make_bath(10, 0.0, CouplingModel::Explicit { g_list: (0..10).map(|k| 0.5 + 0.1 * k as f64).collect(),\\n})?;\\nlet spectrum = enumerate_sectors(&bath)?;\\nassert!(spectrum.sectors().iter().map(|s| s.weight).sum::<f64>() - 1.0 < 1e-12); This is viable up to N ≈ 20 (about a million configurations).","breadcrumbs":"Bath Sectors and Shift Spectra » Exact enumeration","id":"7","title":"Exact enumeration"},"8":{"body":"For a uniform bath every configuration with n↑ up-spins has the\\nsame shift g(2n↑ − N)/2, so the spectrum collapses from 2^N terms to N + 1 binomial weights: w(n↑) = C(N, n↑) · ((1+p)/2)^{n↑} · ((1−p)/2)^{N−n↑} collapse_uniform(n, g, p) builds this directly and is exactly equal\\nto full enumeration — the acceptance suite verifies agreement to 1e-12\\nwhile evaluating 21 sectors instead of 1,048,576 for N = 20. This is\\nwhat makes N = 2000 baths (used for the asymptotic-decay physics)\\naffordable. Zero-weight sectors at p = ±1 are dropped.","breadcrumbs":"Bath Sectors and Shift Spectra » The binomial collapse","id":"8","title":"The binomial collapse"},"9":{"body":"When couplings differ and N is too large to enumerate, binned_spectrum(&bath, n_bins) treats the shift as a sum of independent\\ntwo-valued random variables and accumulates its distribution on a fixed\\ngrid. This is the only approximation in the crate, and it is controlled:\\nthe CLI uses 4096 bins, far finer than any structure in the figures.","breadcrumbs":"Bath Sectors and Shift Spectra » Binned spectra for large non-uniform baths","id":"9","title":"Binned spectra for large non-uniform baths"}},"length":36,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{".":{".":{"1":{"0":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"|":{"df":0,"docs":{},"k":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"1":{"df":1,"docs":{"5":{"tf":1.0}}},"df":5,"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}},"1":{"df":1,"docs":{"7":{"tf":1.0}}},"2":{"5":{"df":2,"docs":{"14":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}},"3":{"df":4,"docs":{"17":{"tf":1.0},"23":{"tf":1.0},"34":{"tf":1.0},"5":{"tf":2.0}}},"4":{"9":{"7":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"df":4,"docs":{"14":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"7":{"tf":1.0}}},"7":{"df":1,"docs":{"5":{"tf":1.0}}},"8":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}},"df":10,"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":2.23606797749979},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0}}},"1":{"+":{"df":0,"docs":{},"p":{")":{"/":{"2":{")":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},",":{"0":{"4":{"8":{",":{"5":{"7":{"6":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":4,"docs":{"13":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}}},"3":{"]":{")":{"?":{"[":{"0":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"23":{"tf":1.0}},"·":{"1":{"0":{"df":2,"docs":{"22":{"tf":1.0},"31":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"0":{".":{"0":{"df":5,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.7320508075688772},"23":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"0":{".":{"0":{"df":3,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}},"0":{"df":1,"docs":{"27":{"tf":1.0}}},"df":2,"docs":{"35":{"tf":1.0},"5":{"tf":1.0}}},"1":{".":{"0":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"4":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"3":{".":{"0":{"df":2,"docs":{"23":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"5":{"tf":1.0}}},"df":5,"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"27":{"tf":1.4142135623730951},"31":{"tf":1.0},"5":{"tf":1.0}},"×":{"1":{"0":{"df":0,"docs":{},"×":{"5":{"0":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"2":{"df":3,"docs":{"15":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"5":{"df":2,"docs":{"29":{"tf":1.0},"30":{"tf":1.0}}},"df":16,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.7320508075688772},"31":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"e":{"df":7,"docs":{"15":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"−":{"df":0,"docs":{},"p":{")":{"/":{"2":{")":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"n":{"df":0,"docs":{},"−":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"2":{".":{"0":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}},"0":{".":{"0":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{"df":4,"docs":{"17":{"tf":1.0},"24":{"tf":1.0},"34":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"df":3,"docs":{"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"1":{"df":1,"docs":{"8":{"tf":1.0}}},"^":{"(":{"df":0,"docs":{},"q":{"+":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":8,"docs":{"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"29":{"tf":1.0}},"·":{"1":{"0":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"×":{"2":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"ω":{"df":0,"docs":{},"₁":{"df":0,"docs":{},"√":{"(":{"df":0,"docs":{},"γ":{"/":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"3":{".":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"/":{"2":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"19":{"tf":1.0},"27":{"tf":1.4142135623730951}},"×":{"3":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}},"4":{"0":{"9":{"6":{"df":3,"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"df":1,"docs":{"24":{"tf":1.0}}},"df":1,"docs":{"17":{"tf":1.4142135623730951}},"×":{"4":{"df":2,"docs":{"21":{"tf":1.0},"29":{"tf":1.0}}},"df":0,"docs":{}}},"6":{"df":1,"docs":{"25":{"tf":1.0}}},"7":{"df":0,"docs":{},"·":{"1":{"0":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"9":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}},"·":{"1":{"0":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"k":{"df":3,"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}}},"n":{"df":1,"docs":{"23":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{")":{"/":{"df":0,"docs":{},"ω":{"_":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":2,"docs":{"14":{"tf":1.0},"16":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"a":{"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"21":{"tf":1.0}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":7,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"8":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":3,"docs":{"20":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}}},"d":{"df":1,"docs":{"2":{"tf":1.0}},"j":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}}},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"17":{"tf":1.0},"25":{"tf":1.4142135623730951},"32":{"tf":1.0},"8":{"tf":1.0}}}}}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"22":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"h":{"a":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":2,"docs":{"28":{"tf":1.0},"34":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":3,"docs":{"2":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}}},"n":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"0":{"tf":1.0},"9":{"tf":1.0}}}}}}}}},"r":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"10":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"!":{"(":{"(":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"(":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"|":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"e":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"(":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"17":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"8":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"4":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}},"b":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.4142135623730951}}}},"t":{"df":0,"docs":{},"h":{"df":23,"docs":{"0":{"tf":3.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":2.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"23":{"tf":2.23606797749979},"24":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"26":{"tf":2.23606797749979},"27":{"tf":1.7320508075688772},"3":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}}}},"df":1,"docs":{"3":{"tf":1.7320508075688772}},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":6,"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":2.0},"27":{"tf":1.7320508075688772},"31":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"33":{"tf":1.0}}}},"w":{"df":1,"docs":{"28":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"25":{"tf":1.0}}}}},"d":{"df":1,"docs":{"25":{"tf":1.0}}},"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"n":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"(":{"&":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.0}}}}}}},"l":{"a":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"h":{"df":5,"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0}}},"k":{"df":3,"docs":{"20":{"tf":1.0},"22":{"tf":1.0},"29":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":8,"docs":{"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"27":{"tf":1.0},"29":{"tf":1.0},"34":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"32":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"a":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"23":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"22":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"c":{"(":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}},"t":{"df":3,"docs":{"20":{"tf":1.0},"22":{"tf":1.0},"29":{"tf":1.4142135623730951}}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"n":{"d":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":1,"docs":{"25":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":2,"docs":{"21":{"tf":1.4142135623730951},"31":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"24":{"tf":1.0}},"i":{"df":3,"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}}}}}},"f":{"df":0,"docs":{},"g":{"2":{"df":1,"docs":{"19":{"tf":1.0}}},"df":1,"docs":{"19":{"tf":1.0}}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"24":{"tf":1.0}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"31":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":5,"docs":{"13":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"33":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"19":{"tf":1.0},"2":{"tf":1.0}}}}}},"df":1,"docs":{"28":{"tf":1.0}}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"31":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"6":{"tf":1.0}},"i":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"35":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":4,"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0},"9":{"tf":1.0}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":8,"docs":{"0":{"tf":2.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"34":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}},"df":5,"docs":{"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951},"33":{"tf":1.0}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"22":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"(":{"2":{"0":{"df":2,"docs":{"13":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"29":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":2,"docs":{"25":{"tf":1.0},"26":{"tf":1.4142135623730951}}}}}},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"26":{"tf":1.0},"4":{"tf":1.0}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":6,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"31":{"tf":1.0}}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"21":{"tf":1.0},"28":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"23":{"tf":1.0}}},"x":{"df":1,"docs":{"25":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"16":{"tf":1.4142135623730951},"20":{"tf":1.0},"33":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":7,"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"29":{"tf":1.4142135623730951},"31":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"(":{"df":0,"docs":{},"r":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":4,"docs":{"19":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":2.0},"35":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"23":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"22":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{}}}},"j":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":2,"docs":{"25":{"tf":1.0},"32":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"35":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"6":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"28":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"35":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"14":{"tf":1.0}}},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"32":{"tf":1.0}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":1,"docs":{"22":{"tf":1.0}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"35":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"s":{"(":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"t":{"/":{"2":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"₁":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":12,"docs":{"0":{"tf":2.23606797749979},"10":{"tf":1.4142135623730951},"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":2.23606797749979},"29":{"tf":1.0},"5":{"tf":2.0},"7":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"g":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"23":{"tf":1.0},"5":{"tf":1.4142135623730951}}}}}}}}}},"df":0,"docs":{}},"df":3,"docs":{"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"25":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"9":{"tf":1.0}},"s":{"/":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"/":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"3":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"’":{"df":1,"docs":{"32":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"17":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"26":{"tf":1.0}}}},"u":{"b":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":3,"docs":{"17":{"tf":1.0},"22":{"tf":1.4142135623730951},"31":{"tf":1.0}}}}},"y":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"a":{"df":0,"docs":{},"y":{"df":6,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.7320508075688772},"8":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}},"o":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"i":{"df":2,"docs":{"22":{"tf":1.4142135623730951},"31":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"t":{"a":{"0":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}},"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"a":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"s":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"13":{"tf":1.0},"5":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}},"h":{"a":{"df":0,"docs":{},"s":{"df":4,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":1.4142135623730951},"31":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":2,"docs":{"23":{"tf":1.0},"33":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"n":{"df":7,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.4142135623730951},"26":{"tf":1.7320508075688772},"27":{"tf":1.7320508075688772},"3":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"i":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"26":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"a":{"df":0,"docs":{},"g":{"(":{"df":0,"docs":{},"e":{"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"df":0,"docs":{},"i":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"t":{"/":{"2":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":1,"docs":{"31":{"tf":1.0}},"o":{"df":0,"docs":{},"n":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"9":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":3,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":3,"docs":{"17":{"tf":1.0},"27":{"tf":1.0},"34":{"tf":1.0}}}}}}}}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}},"s":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"20":{"tf":1.0},"34":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"4":{"tf":1.0}}}}},"l":{"a":{"c":{"df":2,"docs":{"14":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":3,"docs":{"10":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"27":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"o":{"c":{"df":1,"docs":{"0":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"v":{"df":0,"docs":{},"e":{"df":14,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"31":{"tf":1.0},"5":{"tf":1.0}},"n":{"df":3,"docs":{"0":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"y":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"m":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"23":{"tf":1.0},"29":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"^":{"df":0,"docs":{},"{":{"+":{"df":0,"docs":{},"i":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"t":{"/":{"2":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"j":{"df":0,"docs":{},"t":{"df":3,"docs":{"20":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"30":{"tf":1.0}}}},"ω":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.0}}}}},"−":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"ω":{"df":0,"docs":{},"t":{"df":1,"docs":{"32":{"tf":1.0}},"}":{"(":{"df":0,"docs":{},"p":{"^":{"df":0,"docs":{},"x":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"a":{"c":{"df":0,"docs":{},"h":{"df":6,"docs":{"0":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}}}}},"p":{"a":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":5,"docs":{"0":{"tf":1.7320508075688772},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"26":{"tf":1.0},"28":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":3,"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"29":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"25":{"tf":1.0}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}},"s":{"(":{"&":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"23":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":2,"docs":{"8":{"tf":1.0},"9":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"34":{"tf":1.4142135623730951}}}}}},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"a":{"df":4,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"t":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":3,"docs":{"11":{"tf":1.0},"17":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"34":{"tf":1.0},"4":{"tf":1.0}}}},"v":{"df":5,"docs":{"0":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"4":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"a":{"c":{"df":0,"docs":{},"t":{"(":{"&":{"[":{"1":{".":{"0":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772},"23":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.4142135623730951},"7":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":6,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"31":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"30":{"tf":1.0}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":6,"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}},"t":{"df":2,"docs":{"25":{"tf":1.0},"26":{"tf":1.0}}}},"p":{"df":1,"docs":{"5":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"25":{"tf":1.0},"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"11":{"tf":1.0},"17":{"tf":1.0}}}}}}},"s":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":3,"docs":{"0":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"f":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}},"6":{"4":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"s":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"15":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"b":{"a":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":1,"docs":{"9":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"17":{"tf":1.0}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"1":{"0":{"0":{".":{"0":{"df":5,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"23":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{".":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":2,"docs":{"23":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"df":6,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"35":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}}},"g":{"1":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"2":{"_":{"df":0,"docs":{},"r":{"a":{"b":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"27":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"3":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"27":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"4":{"_":{"d":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":1,"docs":{"35":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"_":{"df":0,"docs":{},"r":{"a":{"b":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"6":{"_":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"27":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"7":{"_":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":4,"docs":{"27":{"tf":1.7320508075688772},"31":{"tf":1.0},"35":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.7320508075688772}}}},"n":{"d":{"df":2,"docs":{"14":{"tf":1.0},"17":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}},"t":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}}},"x":{"df":3,"docs":{"14":{"tf":1.0},"34":{"tf":1.0},"9":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"26":{"tf":1.0}},"’":{"df":1,"docs":{"26":{"tf":1.0}}}},"t":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":7,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0}}}},"o":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"0":{"tf":1.0},"31":{"tf":1.0}}}}}},"r":{"c":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":10,"docs":{"0":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"34":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"a":{"df":6,"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":2,"docs":{"22":{"tf":1.4142135623730951},"31":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":8,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.0},"23":{"tf":1.4142135623730951},"26":{"tf":1.0},"3":{"tf":2.0},"32":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"a":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"(":{"&":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}},"df":5,"docs":{"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":11,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.7320508075688772},"21":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.4142135623730951},"35":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"8":{"tf":1.0}},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"(":{"2":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"k":{"/":{"2":{"df":2,"docs":{"3":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":3,"docs":{"2":{"tf":1.4142135623730951},"27":{"tf":1.0},"5":{"tf":1.7320508075688772}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"27":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}},"p":{"df":1,"docs":{"31":{"tf":1.4142135623730951}}},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"14":{"tf":1.0},"25":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":4,"docs":{"10":{"tf":1.7320508075688772},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"5":{"tf":1.0}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}},"df":6,"docs":{"14":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"23":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":2.0},"8":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":4,"docs":{"22":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0},"31":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"b":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"p":{"/":{"2":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"df":1,"docs":{"25":{"tf":1.0}}},"r":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"29":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"u":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"27":{"tf":1.0}}},"df":0,"docs":{}}},"√":{"df":0,"docs":{},"n":{"/":{"2":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"h":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"n":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"d":{"df":0,"docs":{},"w":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":2,"docs":{"22":{"tf":1.0},"33":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"i":{"df":1,"docs":{"10":{"tf":1.0}},"l":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":3,"docs":{"10":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}}},"i":{"^":{"df":0,"docs":{},"z":{"_":{"df":0,"docs":{},"k":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"k":{"df":1,"docs":{"2":{"tf":1.0}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"23":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"n":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":10,"docs":{"20":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}}},"u":{"c":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"23":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":4,"docs":{"22":{"tf":1.0},"29":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"p":{"^":{"df":0,"docs":{},"y":{")":{"_":{"df":0,"docs":{},"l":{"a":{"b":{"df":2,"docs":{"16":{"tf":1.0},"32":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"32":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"j":{"df":7,"docs":{"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0}},"t":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"29":{"tf":1.7320508075688772}}}},"k":{"^":{"2":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"26":{"tf":1.0},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"24":{"tf":1.0}}}},"y":{"df":2,"docs":{"26":{"tf":2.0},"27":{"tf":1.0}}}}},"l":{"a":{"b":{"df":6,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"26":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"35":{"tf":1.0}}}}},"df":0,"docs":{},"p":{"a":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"g":{"df":4,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.0}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}}}}}},"w":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0}}}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"30":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}},"df":5,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951}},"w":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"26":{"tf":1.0},"27":{"tf":1.0},"6":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"o":{"c":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"20":{"tf":1.0},"22":{"tf":1.0},"31":{"tf":1.4142135623730951}}},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.0}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"34":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"z":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}}}},"m":{"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"29":{"tf":1.0},"32":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{},"j":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.4142135623730951}}}}},"k":{"df":0,"docs":{},"e":{"_":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"(":{"1":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"2":{"0":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"3":{"df":1,"docs":{"5":{"tf":1.0}}},"8":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":4,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"35":{"tf":1.0},"8":{"tf":1.0}}}},"p":{"df":1,"docs":{"14":{"tf":1.0}}},"r":{"df":0,"docs":{},"k":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":3,"docs":{"32":{"tf":1.0},"34":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{},"x":{"df":4,"docs":{"13":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"33":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"x":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"a":{"c":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"d":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"20":{"tf":1.0}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"7":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"h":{"df":0,"docs":{},"z":{"df":2,"docs":{"27":{"tf":1.4142135623730951},"35":{"tf":1.4142135623730951}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":4,"docs":{"0":{"tf":2.0},"27":{"tf":1.0},"28":{"tf":1.0},"5":{"tf":1.0}}}},"u":{"df":0,"docs":{},"l":{"df":2,"docs":{"23":{"tf":1.0},"6":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"n":{")":{"/":{"2":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}},"df":13,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772},"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"34":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":2.23606797749979},"9":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{},"w":{"df":1,"docs":{"25":{"tf":1.0}}}},"g":{"df":0,"docs":{},"²":{"/":{"4":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}},"o":{"c":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}},"n":{"df":1,"docs":{"10":{"tf":1.0}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"31":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":1,"docs":{"26":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"16":{"tf":1.0},"27":{"tf":1.0},"35":{"tf":1.0}}},"h":{"df":2,"docs":{"0":{"tf":1.0},"24":{"tf":1.0}}}}},"u":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"35":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"31":{"tf":1.0}}}}}},"⟩":{"df":0,"docs":{},"⟨":{"df":0,"docs":{},"n":{"df":0,"docs":{},"|":{"df":0,"docs":{},"ψ":{"(":{"0":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"o":{"b":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":1,"docs":{"27":{"tf":1.0}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"a":{"0":{"df":1,"docs":{"5":{"tf":1.0}}},"1":{"df":1,"docs":{"5":{"tf":1.0}}},"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"27":{"tf":1.0},"30":{"tf":1.0}}}}},"n":{"df":10,"docs":{"0":{"tf":1.7320508075688772},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"2":{"tf":1.0},"25":{"tf":1.0}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"s":{":":{":":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":9,"docs":{"0":{"tf":1.7320508075688772},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":2.0},"26":{"tf":1.7320508075688772},"28":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0}},"e":{"df":0,"docs":{},"’":{"df":1,"docs":{"32":{"tf":1.0}}}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"2":{"tf":1.4142135623730951},"35":{"tf":1.0}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"33":{"tf":1.0}}}}}}}}},"s":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"17":{"tf":1.0},"27":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.4142135623730951}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.4142135623730951}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951}},"r":{"df":0,"docs":{},"i":{"d":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"p":{")":{"/":{"2":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"^":{"df":0,"docs":{},"i":{"df":3,"docs":{"16":{"tf":1.0},"26":{"tf":1.0},"32":{"tf":1.0}}},"x":{"df":3,"docs":{"16":{"tf":1.4142135623730951},"26":{"tf":1.0},"32":{"tf":1.4142135623730951}}},"z":{"(":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"27":{"tf":1.0}}}},"df":2,"docs":{"16":{"tf":1.0},"26":{"tf":1.4142135623730951}}}},"_":{"df":2,"docs":{"27":{"tf":1.0},"30":{"tf":1.4142135623730951}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"{":{"df":0,"docs":{},"↑":{"df":0,"docs":{},"↑":{"df":0,"docs":{},"→":{"df":0,"docs":{},"↓":{"df":0,"docs":{},"↓":{"df":0,"docs":{},"}":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"→":{"df":0,"docs":{},"↓":{"df":0,"docs":{},"}":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}},"↓":{"df":0,"docs":{},"→":{"df":0,"docs":{},"↓":{"df":0,"docs":{},"↑":{"df":0,"docs":{},"}":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"↓":{"(":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":9,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":6,"docs":{"13":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"31":{"tf":1.4142135623730951},"33":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"t":{"df":1,"docs":{"17":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"11":{"tf":1.0},"20":{"tf":1.0}}}}},"df":5,"docs":{"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"k":{"df":3,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"29":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":10,"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":2.0},"27":{"tf":1.4142135623730951},"3":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"31":{"tf":1.0}}}}}}}},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":5,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.7320508075688772},"29":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"c":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":1,"docs":{"15":{"tf":1.4142135623730951}},"n":{"df":2,"docs":{"16":{"tf":1.0},"28":{"tf":1.0}}},"t":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}},"l":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951}}}}},"l":{"a":{"df":0,"docs":{},"r":{"df":9,"docs":{"0":{"tf":1.0},"14":{"tf":1.7320508075688772},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"32":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"16":{"tf":1.0},"3":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"s":{"df":2,"docs":{"29":{"tf":1.0},"32":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":6,"docs":{"17":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0}}}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":9,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"10":{"tf":1.0}},"t":{"df":6,"docs":{"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":3,"docs":{"10":{"tf":1.0},"27":{"tf":1.4142135623730951},"5":{"tf":1.0}}}}},"p":{"a":{"df":0,"docs":{},"g":{"df":4,"docs":{"13":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"13":{"tf":1.0},"33":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"11":{"tf":1.0}}},"i":{"d":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":5,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0},"32":{"tf":1.0}}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"df":4,"docs":{"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"20":{"tf":1.0},"30":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"31":{"tf":1.0}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"26":{"tf":1.0}}}}}}},"⁽":{"df":0,"docs":{},"ⁱ":{"df":0,"docs":{},"⁾":{"(":{"0":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}}},"q":{"df":1,"docs":{"23":{"tf":1.0}},"u":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":15,"docs":{"0":{"tf":3.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"2":{"tf":2.449489742783178},"21":{"tf":1.0},"22":{"tf":1.7320508075688772},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"29":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":2,"docs":{"13":{"tf":1.0},"23":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":3,"docs":{"13":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0}}}},"’":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":0,"docs":{}}},"r":{"_":{"df":0,"docs":{},"z":{"(":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"t":{"df":2,"docs":{"22":{"tf":1.0},"33":{"tf":1.0}}}}},"df":0,"docs":{}},"{":{"df":0,"docs":{},"n":{"df":0,"docs":{},"̂":{"df":0,"docs":{},"}":{"(":{"df":0,"docs":{},"ω":{"_":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"a":{"b":{"df":0,"docs":{},"i":{"df":5,"docs":{"17":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.7320508075688772},"3":{"tf":1.0}}}},"d":{"/":{"df":0,"docs":{},"u":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{},"·":{"df":0,"docs":{},"µ":{"df":4,"docs":{"2":{"tf":1.0},"27":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":4,"docs":{"13":{"tf":1.0},"25":{"tf":1.0},"33":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"21":{"tf":1.0},"34":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"34":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"11":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}},"v":{"df":1,"docs":{"11":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0}},"e":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"13":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"_":{"2":{"df":0,"docs":{},"q":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"&":{"c":{"df":0,"docs":{},"f":{"df":0,"docs":{},"g":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":1,"docs":{"25":{"tf":1.0}},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"35":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":1,"docs":{"15":{"tf":1.0}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"3":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"a":{"1":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"29":{"tf":1.0}}}}}}},"df":9,"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"27":{"tf":1.4142135623730951},"29":{"tf":1.0},"3":{"tf":1.4142135623730951},"30":{"tf":1.0}}}},"t":{"df":1,"docs":{"35":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":4,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"h":{"df":0,"docs":{},"o":{"df":2,"docs":{"13":{"tf":1.0},"21":{"tf":1.0}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"20":{"tf":1.0},"29":{"tf":1.0}}}}},"df":0,"docs":{}}}},"o":{"d":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":2,"docs":{"22":{"tf":1.0},"33":{"tf":1.0}}}}}}},"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":11,"docs":{"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"22":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":3,"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}}}},"w":{"df":2,"docs":{"25":{"tf":1.0},"26":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"n":{"df":2,"docs":{"25":{"tf":1.0},"27":{"tf":1.0}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"24":{"tf":1.0},"25":{"tf":1.0}}}}}}}},"s":{".":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{":":{":":{"<":{"df":0,"docs":{},"f":{"6":{"4":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"^":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}},"x":{"df":2,"docs":{"2":{"tf":1.0},"3":{"tf":1.0}}},"z":{"df":6,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.7320508075688772},"21":{"tf":1.0},"3":{"tf":1.4142135623730951},"32":{"tf":1.0}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":8,"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"8":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"24":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"30":{"tf":1.0}}}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"24":{"tf":1.0},"35":{"tf":1.0}}}}},"df":0,"docs":{}},"df":4,"docs":{"2":{"tf":1.7320508075688772},"22":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.4142135623730951}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":13,"docs":{"0":{"tf":2.449489742783178},"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"21":{"tf":2.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"28":{"tf":1.0},"3":{"tf":1.4142135623730951},"33":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{":":{":":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"e":{"df":5,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}}},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"25":{"tf":1.0}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"t":{"df":2,"docs":{"26":{"tf":1.0},"27":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"28":{"tf":1.0}}}}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":4,"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"(":{"&":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}},"df":12,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"p":{"df":2,"docs":{"27":{"tf":1.0},"35":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"w":{"df":2,"docs":{"20":{"tf":1.0},"33":{"tf":1.0}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"17":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"32":{"tf":1.0}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"25":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"n":{"(":{"df":0,"docs":{},"j":{"df":0,"docs":{},"t":{"/":{"2":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"ω":{"_":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{},"t":{"/":{"2":{"df":1,"docs":{"3":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":3,"docs":{"2":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.4142135623730951}},"g":{"df":0,"docs":{},"l":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951}},"e":{":":{":":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"16":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}}},"z":{"_":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"(":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"a":{"1":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"df":4,"docs":{"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"27":{"tf":1.4142135623730951},"31":{"tf":1.0}},"–":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}}}}}}}}}}}},"²":{"(":{"df":0,"docs":{},"ω":{"_":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"⁴":{"(":{"df":0,"docs":{},"ω":{"df":0,"docs":{},"₁":{"df":0,"docs":{},"t":{"/":{"2":{"df":2,"docs":{"20":{"tf":1.0},"30":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"t":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"e":{"df":3,"docs":{"19":{"tf":2.0},"2":{"tf":1.0},"21":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"24":{"tf":1.0},"31":{"tf":1.0}}}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"c":{"df":2,"docs":{"27":{"tf":1.0},"34":{"tf":1.0}}},"df":0,"docs":{}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}}},"df":8,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{":":{":":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"e":{"_":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"13":{"tf":1.0},"21":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"23":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"23":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{":":{":":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"2":{"df":0,"docs":{},"q":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"{":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"m":{"a":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"_":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":3,"docs":{"0":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}}}}},"df":0,"docs":{}},"df":10,"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"’":{"df":1,"docs":{"0":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"31":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"10":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"df":4,"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":13,"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}}},"i":{"c":{"df":2,"docs":{"14":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"27":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"y":{"df":1,"docs":{"21":{"tf":1.0}}}},"d":{":":{":":{"df":0,"docs":{},"f":{"6":{"4":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"17":{"tf":1.4142135623730951},"27":{"tf":1.0},"34":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"24":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"(":{"2":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"10":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"df":1,"docs":{"29":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":8,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.0}}}},"m":{"df":3,"docs":{"27":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"m":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"w":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"20":{"tf":1.0},"29":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":3,"docs":{"14":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951}}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"n":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":2,"docs":{"23":{"tf":1.0},"28":{"tf":1.0}}}}}}},"₁":{"df":0,"docs":{},"·":{"df":3,"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0}}}}},"t":{"/":{"2":{"df":2,"docs":{"14":{"tf":1.0},"16":{"tf":1.0}}},"df":0,"docs":{}},"=":{"0":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"^":{"df":0,"docs":{},"{":{"df":0,"docs":{},"−":{"1":{"/":{"2":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"33":{"tf":1.0}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}}}},"df":12,"docs":{"14":{"tf":1.0},"17":{"tf":2.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":2.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"29":{"tf":2.23606797749979},"30":{"tf":1.4142135623730951},"31":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":5,"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"34":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.7320508075688772},"13":{"tf":1.0},"25":{"tf":1.4142135623730951},"28":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"23":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"26":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"22":{"tf":1.0},"25":{"tf":1.0}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}},"m":{"df":0,"docs":{},"e":{"df":8,"docs":{"17":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0},"31":{"tf":1.0},"34":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"25":{"tf":1.0},"26":{"tf":1.0},"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"15":{"tf":1.0},"5":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"23":{"tf":1.0},"5":{"tf":1.0}}},"k":{"df":2,"docs":{"27":{"tf":1.0},"34":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":4,"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"3":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":5,"docs":{"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{},"p":{"df":1,"docs":{"26":{"tf":1.0}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":3,"docs":{"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"29":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"e":{"df":1,"docs":{"31":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"o":{":":{":":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":2,"docs":{"22":{"tf":1.0},"33":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"s":{"_":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"2":{"df":0,"docs":{},"q":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"a":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"20":{"tf":1.0},"30":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":12,"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":2.0},"24":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"9":{"tf":1.0}},"q":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"19":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"(":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"31":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":2,"docs":{"27":{"tf":1.0},"35":{"tf":1.0}}}}},"²":{")":{"^":{"df":0,"docs":{},"{":{"1":{"/":{"4":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"/":{"4":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"u":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}},"s":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":8,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"29":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0}}}},"o":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":9,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}},"i":{"df":1,"docs":{"4":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":7,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"5":{"tf":1.0}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":2,"docs":{"14":{"tf":1.0},"26":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.0},"17":{"tf":1.0}}}},"df":0,"docs":{}}}}},"p":{"df":5,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"s":{"df":16,"docs":{"11":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"21":{"tf":2.0},"22":{"tf":1.0},"23":{"tf":2.23606797749979},"27":{"tf":1.0},"32":{"tf":1.0},"35":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":4,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"26":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"u":{"df":3,"docs":{"26":{"tf":1.4142135623730951},"35":{"tf":1.0},"9":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"26":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"!":{"[":{"0":{".":{"4":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"32":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"32":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":3,"docs":{"30":{"tf":1.0},"31":{"tf":1.0},"8":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"16":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0}}}}}}}},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":3,"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":2.23606797749979},"27":{"tf":1.7320508075688772}}}},"w":{"(":{"df":3,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0}},"n":{"df":1,"docs":{"8":{"tf":1.0}}},"t":{"df":3,"docs":{"16":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.0}}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}},"y":{"df":3,"docs":{"22":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"10":{"tf":1.0},"27":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}}}}}}},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"33":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"3":{"tf":1.0},"34":{"tf":1.0},"7":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"11":{"tf":1.0}}},"s":{"df":1,"docs":{"15":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"16":{"tf":1.0},"25":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"2":{"tf":1.0},"32":{"tf":1.0},"34":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"z":{"/":{"2":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":5,"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"breadcrumbs":{"root":{"0":{"df":1,"docs":{"31":{"tf":1.0}}},"1":{"df":1,"docs":{"29":{"tf":1.0}}},"2":{"df":1,"docs":{"30":{"tf":1.0}}},"3":{",":{"3":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"31":{"tf":1.0}}},"4":{"df":1,"docs":{"32":{"tf":1.0}}},"5":{"df":1,"docs":{"33":{"tf":1.0}}},"6":{"df":1,"docs":{"34":{"tf":1.0}}},"7":{"df":1,"docs":{"35":{"tf":1.0}}},"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"13":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}}}},"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":14,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"31":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"31":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":8,"docs":{"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"27":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":6,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"e":{"c":{"a":{"df":0,"docs":{},"y":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":7,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"35":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"29":{"tf":1.0}},"n":{"df":6,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"m":{"df":6,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}}}}},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":5,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0}}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"a":{"df":8,"docs":{"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":5,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"35":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":2,"docs":{"20":{"tf":1.0},"30":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"c":{"df":3,"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{},"m":{"df":8,"docs":{"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"16":{"tf":1.0},"3":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":2,"docs":{"20":{"tf":1.0},"29":{"tf":1.0}}}}}},"g":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}},"h":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"j":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}},"l":{"a":{"b":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":2,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"22":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":5,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":6,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":3,"docs":{"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"20":{"tf":1.0},"29":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"16":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":8,"docs":{"28":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0},"35":{"tf":1.0}}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":11,"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"22":{"tf":1.0},"3":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":6,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"22":{"tf":1.0},"31":{"tf":1.0}}}},"df":0,"docs":{}}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":7,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"/":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"df":1,"docs":{"32":{"tf":1.0}}}},"n":{"df":1,"docs":{"29":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":6,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":2,"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"32":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":5,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}},"o":{"df":1,"docs":{"35":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"t":{"df":1,"docs":{"35":{"tf":1.0}}}}}}}},"title":{"root":{"0":{"df":1,"docs":{"31":{"tf":1.0}}},"1":{"df":1,"docs":{"29":{"tf":1.0}}},"2":{"df":1,"docs":{"30":{"tf":1.0}}},"3":{",":{"3":{"df":1,"docs":{"33":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"31":{"tf":1.0}}},"4":{"df":1,"docs":{"32":{"tf":1.0}}},"5":{"df":1,"docs":{"33":{"tf":1.0}}},"6":{"df":1,"docs":{"34":{"tf":1.0}}},"7":{"df":1,"docs":{"35":{"tf":1.0}}},"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"13":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}}}}},"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":8,"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"31":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"28":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"29":{"tf":1.0}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"27":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"32":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"e":{"c":{"a":{"df":0,"docs":{},"y":{"df":2,"docs":{"17":{"tf":1.0},"34":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"12":{"tf":1.0},"35":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"31":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"29":{"tf":1.0}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"30":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"29":{"tf":1.0}},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"33":{"tf":1.0}}}}}}}},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":2,"docs":{"18":{"tf":1.0},"20":{"tf":1.0}}}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"17":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"28":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"26":{"tf":1.0},"27":{"tf":1.0},"35":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":2,"docs":{"20":{"tf":1.0},"30":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{},"m":{"df":1,"docs":{"28":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"16":{"tf":1.0},"3":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":2,"docs":{"20":{"tf":1.0},"29":{"tf":1.0}}}}}},"g":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}},"h":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"j":{"df":0,"docs":{},"t":{"df":1,"docs":{"29":{"tf":1.0}}}},"l":{"a":{"b":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"22":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"30":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":2,"docs":{"20":{"tf":1.0},"29":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"34":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"16":{"tf":1.0},"32":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"30":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"30":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"28":{"tf":1.0}}}}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"18":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":3,"docs":{"22":{"tf":1.0},"3":{"tf":1.0},"33":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"22":{"tf":1.0},"31":{"tf":1.0}}}},"df":0,"docs":{}}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"/":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":1,"docs":{"33":{"tf":1.0}}}}}}},"df":1,"docs":{"32":{"tf":1.0}}}},"n":{"df":1,"docs":{"29":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":2,"docs":{"6":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"32":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":1,"docs":{"18":{"tf":1.0}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}},"o":{"df":1,"docs":{"35":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"31":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"t":{"df":1,"docs":{"35":{"tf":1.0}}}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));