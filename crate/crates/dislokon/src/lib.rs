//! Bound states of a charged scalar particle around a screw dislocation that
//! carries magnetic flux.
//!
//! The background couples three things into a single effective angular
//! momentum `l_eff = l - χk - qΦ_B/(2π)`: the torsion `χ` of the dislocation
//! (which drags the axial momentum `k` into the angular sector), the
//! Aharonov–Bohm flux `Φ_B` threading the defect line, and the ordinary
//! integer angular momentum `l`.  Everything downstream — Landau-type levels
//! in a uniform field, levels in a hard cylindrical box, and the
//! polynomially-terminated levels of a linearly rising scalar potential —
//! depends on flux and torsion only through `l_eff`, which is why every
//! spectrum here is periodic in the flux with period `2π/q` and why torsion
//! visibly splits degeneracies whenever `k ≠ 0`.
//!
//! The crate is organized as matched pairs: closed-form spectra
//! ([`spectra`]) and independent numerical oracles ([`oracle`]) that
//! re-derive the same levels from the radial differential equation, so every
//! formula ships with the machinery to check it.
//!
//! * [`model`] — parameters, quantum numbers, derived frequency scales.
//! * [`specfun`] — confluent hypergeometric series (stable down to deeply
//!   negative first parameter), its cosine asymptotic, and the biconfluent
//!   Heun series with termination detection.
//! * [`spectra`] — the three closed-form level formulas, oscillator coupling
//!   included as an ordinary parameter.
//! * [`sturm`] — symmetric tridiagonal eigensolver (bisection + inverse
//!   iteration), dependency-free.
//! * [`oracle`] — finite-difference radial eigensolver with an automatic
//!   domain rule, the exact hard-wall root-finder, Richardson refinement,
//!   and the closed-form-vs-numeric verification driver.
//! * [`par`] — order-preserving data-parallel map/join with sequential
//!   twins; rayon-backed under the `parallel` feature (default), plain loops
//!   without it, bit-identical results either way.

pub mod model;
pub mod oracle;
pub mod par;
pub mod specfun;
pub mod spectra;
pub mod sturm;

pub use model::{
    derived_scales, effective_angular_momentum, DerivedScales, ParamError, PhysicalParams,
    QuantumNumbers, Scenario, FLUX_ANGLE,
};
pub use oracle::{
    hardwall_exact, radial_eigenfunction, radial_node_count, solve_radial, solve_radial_refined,
    verify_scenario, OracleError, OracleReport, RadialEigenproblem, RefinedSolve, DEFAULT_GRID_N,
    MIN_GRID_N,
};
pub use specfun::{
    heun_coefficients, heun_eval, kummer_1f1, kummer_1f1_stable, kummer_asymptotic_cos,
    KummerParams, SeriesSolution, SpecFunError, HEUN_TERMINATION_TOL,
};
pub use spectra::{
    energy_ground_n1, energy_hardwall_approx, energy_landau, energy_linear, frequency_n1,
    EnergyLevel, HardwallLevel, SpectrumError, HARDWALL_REGIME_MIN,
};
pub use sturm::SymTridiagonal;
