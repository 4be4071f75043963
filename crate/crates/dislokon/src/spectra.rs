//! Closed-form relativistic energy levels for a charged scalar bound near a
//! flux-carrying dislocation, in three confinement scenarios:
//!
//! * **landau** — uniform axial field, optionally with the oscillator
//!   coupling; discrete Landau-type levels.
//! * **hardwall** — impenetrable cylinder of radius `r0`; levels from the
//!   large-argument cosine asymptotic of the confluent series (approximate,
//!   with an explicit validity ratio).
//! * **linear** — linearly rising scalar potential; levels from polynomial
//!   termination of the biconfluent Heun series, including the special
//!   degree-1 state that exists only at one constrained cyclotron frequency.
//!
//! Each scenario has exactly one implementation with the oscillator frequency
//! `omega0` as an ordinary parameter; the `omega0 = 0` specializations are
//! *tests* (independent transcriptions), not separate code paths, so the
//! reduction can never drift.
//!
//! All spectra depend on flux and torsion only through the effective angular
//! momentum, so every formula here is periodic in `phi_b` with period
//! `2π/q` — shifting the flux by one period is identical to relabelling
//! `l -> l - 1`.

use crate::model::{
    derived_scales, effective_angular_momentum, PhysicalParams, QuantumNumbers, Scenario,
};
use thiserror::Error;

/// Minimum value of the hard-wall regime ratio for the asymptotic level
/// formula to be trusted ("well separated": spectral parameter at least ten
/// times the Landau spacing).
pub const HARDWALL_REGIME_MIN: f64 = 10.0;

/// One relativistic level: `E² ` and its two square-root branches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    /// The squared energy; always `>= 0` for values that are returned.
    pub e_squared: f64,
    /// Particle branch `+sqrt(e_squared)`.
    pub e_plus: f64,
    /// Antiparticle branch `-sqrt(e_squared)`; always exactly `-e_plus`.
    pub e_minus: f64,
    /// The effective angular momentum the level was computed with.
    pub l_eff: f64,
    /// Which closed form produced it.
    pub scenario: Scenario,
}

impl EnergyLevel {
    fn from_e_squared(
        e_squared: f64,
        l_eff: f64,
        scenario: Scenario,
    ) -> Result<Self, SpectrumError> {
        if e_squared < 0.0 {
            return Err(SpectrumError::NegativeESquared { e_squared });
        }
        let e_plus = e_squared.sqrt();
        Ok(Self {
            e_squared,
            e_plus,
            e_minus: -e_plus,
            l_eff,
            scenario,
        })
    }
}

/// A hard-wall level together with the validity diagnostics of the
/// asymptotic formula that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardwallLevel {
    pub level: EnergyLevel,
    /// Spectral parameter of the confined radial problem divided by `2mϖ`
    /// (the Landau spacing).  The level formula is an asymptotic one, valid
    /// when this is large; `+∞` when `ϖ = 0` (no competing magnetic length —
    /// the wall alone sets the scale).
    pub regime_ratio: f64,
}

impl HardwallLevel {
    /// Whether the asymptotic regime condition is comfortably met
    /// (`regime_ratio >= 10`).
    pub fn well_separated(&self) -> bool {
        self.regime_ratio >= HARDWALL_REGIME_MIN
    }
}

/// Failure modes of the closed-form spectra.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SpectrumError {
    /// No magnetic field and no oscillator: the spectrum is continuous and
    /// there are no Landau-type levels to return.
    #[error("omega = omega0 = 0: free radial motion has no discrete levels")]
    FreeParticle,
    /// The formula produced `E² < 0`; the theory these levels come from does
    /// not assign a meaning to that regime.
    #[error("formula yields E^2 = {e_squared} < 0 (outside the bound-state regime)")]
    NegativeESquared { e_squared: f64 },
    /// The hard-wall scenario needs a wall radius.
    #[error("hard-wall scenario requires a wall radius r0")]
    MissingWall,
    /// No real constrained cyclotron frequency exists for the degree-1
    /// polynomial state at these parameters.
    #[error("no real constrained frequency: radicand {radicand} <= 0")]
    NoRealFrequency { radicand: f64 },
}

/// Landau-type levels in the dislocation background, oscillator coupling
/// included:
///
/// ```text
/// E² = m² + 2mϖ(n̄ + |l_eff|/2 + 1/2) + mω·l_eff + 2mω₀ + k²,
/// ϖ = √(4ω₀² + ω²),  ω = qB₀/m
/// ```
///
/// At `ω₀ = 0` this is the plain dislocation Landau spectrum
/// `m² + 2mω(n̄ + |l_eff|/2 + l_eff/2 + 1/2) + k²`.
pub fn energy_landau(
    p: &PhysicalParams,
    qn: &QuantumNumbers,
) -> Result<EnergyLevel, SpectrumError> {
    let s = derived_scales(p);
    if s.omega == 0.0 && p.omega0 == 0.0 {
        return Err(SpectrumError::FreeParticle);
    }
    let l_eff = effective_angular_momentum(p, qn);
    let n = f64::from(qn.n_radial);
    let e_squared = p.mass * p.mass
        + 2.0 * p.mass * s.varpi * (n + 0.5 * l_eff.abs() + 0.5)
        + p.mass * s.omega * l_eff
        + 2.0 * p.mass * p.omega0
        + qn.k * qn.k;
    EnergyLevel::from_e_squared(e_squared, l_eff, Scenario::Landau)
}

/// Hard-wall levels from the cosine asymptotic of the confluent series:
///
/// ```text
/// E² ≈ m² + (1/r₀²)·(n̄π + (π/2)|l_eff| + 3π/4)² + mω·l_eff + 2mω₀ + k²
/// ```
///
/// This is the quantization of the asymptotic phase, valid when the wall
/// term dominates the Landau spacing; the returned
/// [`HardwallLevel::regime_ratio`] quantifies that, and callers should treat
/// ratios below [`HARDWALL_REGIME_MIN`] as a warning that the exact
/// confluent-series zeros (see the oracle's exact solver) will disagree.
pub fn energy_hardwall_approx(
    p: &PhysicalParams,
    qn: &QuantumNumbers,
) -> Result<HardwallLevel, SpectrumError> {
    let r0 = p.r0.ok_or(SpectrumError::MissingWall)?;
    let s = derived_scales(p);
    let l_eff = effective_angular_momentum(p, qn);
    let n = f64::from(qn.n_radial);
    let phase = n * std::f64::consts::PI
        + 0.5 * std::f64::consts::PI * l_eff.abs()
        + 0.75 * std::f64::consts::PI;
    let wall_term = (phase / r0) * (phase / r0);
    let e_squared = p.mass * p.mass
        + wall_term
        + p.mass * s.omega * l_eff
        + 2.0 * p.mass * p.omega0
        + qn.k * qn.k;
    let regime_ratio = if s.varpi == 0.0 {
        f64::INFINITY
    } else {
        wall_term / (2.0 * p.mass * s.varpi)
    };
    Ok(HardwallLevel {
        level: EnergyLevel::from_e_squared(e_squared, l_eff, Scenario::HardWall)?,
        regime_ratio,
    })
}

/// Linear-potential levels from polynomial termination of the Heun series at
/// degree `n`:
///
/// ```text
/// E² = m² + 2λ(n + 1 + |l_eff|) + mω·l_eff + k² - m²ν²/λ² + 2mω₀,
/// λ = √(m²ω₀² + m²ω²/4 + ν²)
/// ```
///
/// Termination additionally requires the next series coefficient to vanish,
/// which for generic parameters only happens at special frequencies (see
/// [`frequency_n1`]); this function returns the energy the termination
/// condition *assigns* to degree `n` whether or not the second condition
/// holds, which is what a frequency-tuning analysis needs.
///
/// Panics if `nu <= 0` or `n_radial < 1` (caller contract — the linear
/// scenario is meaningless without a slope, and degree 0 would force
/// `μ = 0`).
pub fn energy_linear(
    p: &PhysicalParams,
    qn: &QuantumNumbers,
) -> Result<EnergyLevel, SpectrumError> {
    assert!(p.nu > 0.0, "linear scenario requires a positive slope nu (got {})", p.nu);
    assert!(
        qn.n_radial >= 1,
        "polynomial degree n must be >= 1 (got {})",
        qn.n_radial
    );
    let s = derived_scales(p);
    let l_eff = effective_angular_momentum(p, qn);
    let n = f64::from(qn.n_radial);
    let m = p.mass;
    let e_squared = m * m
        + 2.0 * s.lambda * (n + 1.0 + l_eff.abs())
        + m * s.omega * l_eff
        + qn.k * qn.k
        - m * m * p.nu * p.nu / (s.lambda * s.lambda)
        + 2.0 * m * p.omega0;
    EnergyLevel::from_e_squared(e_squared, l_eff, Scenario::Linear)
}

/// The unique cyclotron frequency at which the degree-1 polynomial state of
/// the linear potential exists:
///
/// ```text
/// ω₁ = √( (4/m²)·[m²ν²(3 + 2|l_eff|)/2]^(2/3) - 4ν²/m² - 4ω₀² )
/// ```
///
/// Both termination conditions of the Heun series pin the confinement scale
/// to `λ³ = m²ν²(3 + 2|l_eff|)/2`; solving that for `ω` gives the value
/// above.  One frequency per `(l, k)` — the field strength plays the role of
/// a tuning knob, not a free parameter.  Returns
/// [`SpectrumError::NoRealFrequency`] when the radicand is not positive
/// (slope or oscillator too strong for a real tuning to exist).
///
/// Panics if `nu <= 0` (caller contract).
pub fn frequency_n1(p: &PhysicalParams, qn: &QuantumNumbers) -> Result<f64, SpectrumError> {
    assert!(p.nu > 0.0, "constrained frequency requires a positive slope nu (got {})", p.nu);
    let l_abs = effective_angular_momentum(p, qn).abs();
    let m = p.mass;
    // scale³ = m²ν²(3 + 2|l_eff|)/2 is the pinned confinement scale
    let scale = (m * m * p.nu * p.nu * (3.0 + 2.0 * l_abs) / 2.0).cbrt();
    let inner = scale * scale - p.nu * p.nu - m * m * p.omega0 * p.omega0;
    let radicand = 4.0 * inner / (m * m);
    if radicand <= 0.0 {
        return Err(SpectrumError::NoRealFrequency { radicand });
    }
    Ok(radicand.sqrt())
}

/// Ground-state energy of the degree-1 polynomial state: [`energy_linear`]
/// evaluated at `n = 1` with the field retuned so the cyclotron frequency
/// equals [`frequency_n1`].
///
/// Computed by composition — substitute the constrained frequency, then
/// apply the general level formula — rather than as a separately transcribed
/// closed form, so the two can never disagree.  Requires `q != 0` (the
/// constrained frequency is realized through `B₀ = mω₁/q`) and
/// `qn.n_radial == 1`.
pub fn energy_ground_n1(
    p: &PhysicalParams,
    qn: &QuantumNumbers,
) -> Result<EnergyLevel, SpectrumError> {
    assert_eq!(qn.n_radial, 1, "the constrained polynomial state has degree 1");
    assert!(
        p.charge != 0.0,
        "realizing the constrained frequency needs a nonzero charge (B0 = m*omega1/q)"
    );
    let w1 = frequency_n1(p, qn)?;
    let tuned = PhysicalParams {
        b0: p.mass * w1 / p.charge,
        ..*p
    };
    energy_linear(&tuned, qn)
}
