//! Physical parameters and derived scales for a charged scalar bound to a
//! screw dislocation that carries magnetic flux.
//!
//! The medium is characterised by a torsion parameter `chi` (the Burgers-vector
//! density of the dislocation), an Aharonov-Bohm flux `phi_b` threading the
//! defect line, a uniform axial magnetic field `b0`, an optional oscillator
//! coupling `omega0`, an optional linear confining slope `nu`, and an optional
//! hard cylindrical wall at radius `r0`.  Everything downstream is controlled
//! by a single combination of the angular quantum number with the torsion and
//! the flux: the effective angular momentum
//!
//! ```text
//! l_eff = l - chi*k - q*phi_b / (2*pi)
//! ```
//!
//! which is why the spectra are periodic in the flux with period `2*pi/q` and
//! why the torsion couples the axial momentum `k` into the angular sector.

use thiserror::Error;

/// Angle subtended by one flux quantum divided by the charge, `2*pi`.
pub const FLUX_ANGLE: f64 = std::f64::consts::TAU;

/// Inputs describing the background and the particle.
///
/// Units are natural (`hbar = c = 1`); `mass` sets the overall scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Rest mass `m` of the scalar (must be positive).
    pub mass: f64,
    /// Electric charge `q`; may be negative or zero.
    pub charge: f64,
    /// Uniform axial magnetic field strength `B_0 >= 0`.
    pub b0: f64,
    /// Aharonov-Bohm flux `phi_B` carried by the dislocation line.
    pub phi_b: f64,
    /// Torsion (screw-dislocation) parameter `chi`; couples the axial
    /// momentum into the angular sector.
    pub chi: f64,
    /// Oscillator frequency `omega_0 >= 0` of the quadratic scalar coupling.
    pub omega0: f64,
    /// Slope `nu >= 0` of the linear scalar potential (position-dependent
    /// mass `m + nu*r`).
    pub nu: f64,
    /// Hard-wall radius `r_0 > 0`, when the particle is boxed in a cylinder.
    pub r0: Option<f64>,
}

impl PhysicalParams {
    /// A neutral baseline: unit mass and charge, unit field, everything else off.
    pub fn base() -> Self {
        Self {
            mass: 1.0,
            charge: 1.0,
            b0: 1.0,
            phi_b: 0.0,
            chi: 0.0,
            omega0: 0.0,
            nu: 0.0,
            r0: None,
        }
    }

    /// Check the domain restrictions that every operation relies on.
    pub fn validate(&self) -> Result<(), ParamError> {
        let finite = |v: f64| v.is_finite();
        if !(finite(self.mass) && self.mass > 0.0) {
            return Err(ParamError::Mass(self.mass));
        }
        if !finite(self.charge) {
            return Err(ParamError::Charge(self.charge));
        }
        if !(finite(self.b0) && self.b0 >= 0.0) {
            return Err(ParamError::Field(self.b0));
        }
        if !finite(self.phi_b) || !finite(self.chi) {
            return Err(ParamError::Background);
        }
        if !(finite(self.omega0) && self.omega0 >= 0.0) {
            return Err(ParamError::Oscillator(self.omega0));
        }
        if !(finite(self.nu) && self.nu >= 0.0) {
            return Err(ParamError::Slope(self.nu));
        }
        if let Some(r0) = self.r0 {
            if !(finite(r0) && r0 > 0.0) {
                return Err(ParamError::Wall(r0));
            }
        }
        Ok(())
    }
}

/// Quantum numbers labelling one bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumNumbers {
    /// Radial index; counts radial nodes for the oscillator-type spectra
    /// (from 0) and the polynomial degree for the linear-potential spectra
    /// (from 1).
    pub n_radial: u32,
    /// Angular momentum quantum number `l` (any integer).
    pub l: i32,
    /// Axial wave number `k` along the dislocation line.
    pub k: f64,
}

impl QuantumNumbers {
    pub fn new(n_radial: u32, l: i32, k: f64) -> Self {
        Self { n_radial, l, k }
    }
}

/// Which closed-form spectrum is being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// Uniform field (plus optional oscillator coupling), no wall, no slope.
    Landau,
    /// Hard cylindrical wall at `r0`; energies from the large-argument
    /// asymptotic of the confluent series.
    HardWall,
    /// Linear scalar potential with the series-termination constraint.
    Linear,
}

impl Scenario {
    pub const ALL: [Scenario; 3] = [Scenario::Landau, Scenario::HardWall, Scenario::Linear];

    pub fn as_str(self) -> &'static str {
        match self {
            Scenario::Landau => "landau",
            Scenario::HardWall => "hardwall",
            Scenario::Linear => "linear",
        }
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Scenario {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "landau" => Ok(Scenario::Landau),
            "hardwall" => Ok(Scenario::HardWall),
            "linear" => Ok(Scenario::Linear),
            other => Err(format!(
                "unknown scenario `{other}` (expected landau, hardwall or linear)"
            )),
        }
    }
}

/// Violation of a parameter domain restriction.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ParamError {
    #[error("mass must be positive and finite (got {0})")]
    Mass(f64),
    #[error("charge must be finite (got {0})")]
    Charge(f64),
    #[error("field strength b0 must be non-negative and finite (got {0})")]
    Field(f64),
    #[error("flux and torsion must be finite")]
    Background,
    #[error("oscillator frequency omega0 must be non-negative and finite (got {0})")]
    Oscillator(f64),
    #[error("linear slope nu must be non-negative and finite (got {0})")]
    Slope(f64),
    #[error("wall radius r0 must be positive and finite (got {0})")]
    Wall(f64),
}

/// Effective angular momentum `l_eff = l - chi*k - q*phi_b/(2*pi)`.
///
/// Real-valued in general: the torsion shifts `l` by `chi*k` and the flux by
/// `q*phi_b/(2*pi)`.  Shifting `phi_b` by one period `2*pi/q` is the same as
/// stepping `l` down by one, which is the flux periodicity every spectrum
/// inherits.
pub fn effective_angular_momentum(p: &PhysicalParams, qn: &QuantumNumbers) -> f64 {
    f64::from(qn.l) - p.chi * qn.k - p.charge * p.phi_b / FLUX_ANGLE
}

/// Frequency and confinement scales derived from [`PhysicalParams`].
///
/// The two spectral parameters `tau` and `lambda_cap` depend on the energy of
/// a particular level and are therefore left unset here; they are filled in by
/// [`DerivedScales::with_spectral`] once an `E^2` is known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScales {
    /// Cyclotron frequency `omega = q*b0/m`.
    pub omega: f64,
    /// Combined frequency `varpi = sqrt(4*omega0^2 + omega^2)`; reduces to
    /// `omega` when the oscillator coupling is off.
    pub varpi: f64,
    /// Confinement scale of the linear problem,
    /// `delta = (m^2*omega^2/4 + nu^2)^(1/2)`.
    pub delta: f64,
    /// Same scale with the oscillator folded in,
    /// `lambda = (m^2*omega0^2 + m^2*omega^2/4 + nu^2)^(1/2)`; equals `delta`
    /// when `omega0 = 0`.
    pub lambda: f64,
    /// Linear-drive coefficient `mu = 2*m*nu/delta^(3/2)` of the scaled
    /// radial series (zero when `nu = 0`).
    pub mu: f64,
    /// Oscillator-coupled drive `theta = 2*m*nu/lambda^(3/2)`; equals `mu`
    /// when `omega0 = 0`.
    pub theta: f64,
    /// Spectral parameter `tau = E^2 - m^2 - k^2 - m*omega*l_eff` of the
    /// minimally coupled radial problem; set by `with_spectral`.
    pub tau: Option<f64>,
    /// Spectral parameter `lambda_cap = tau - 2*m*omega0` of the
    /// oscillator-coupled radial problem; set by `with_spectral`.
    pub lambda_cap: Option<f64>,
}

/// Compute all energy-independent scales.
///
/// When `omega0 = 0` the collapse `varpi = omega`, `lambda = delta`,
/// `theta = mu` is exact in floating point, not merely approximate: the
/// oscillator contributions enter as added squares that vanish identically.
pub fn derived_scales(p: &PhysicalParams) -> DerivedScales {
    let omega = p.charge * p.b0 / p.mass;
    let varpi = (4.0 * p.omega0 * p.omega0 + omega * omega).sqrt();
    let half_m_omega = 0.5 * p.mass * omega;
    let delta_sq = half_m_omega * half_m_omega + p.nu * p.nu;
    let delta = delta_sq.sqrt();
    let m_omega0 = p.mass * p.omega0;
    let lambda = (m_omega0 * m_omega0 + delta_sq).sqrt();
    // 0/0 guard: with nu = 0 there is no linear drive at all, whatever the
    // confinement scale happens to be.
    let drive = |scale: f64| {
        if p.nu == 0.0 {
            0.0
        } else {
            2.0 * p.mass * p.nu / scale.powf(1.5)
        }
    };
    DerivedScales {
        omega,
        varpi,
        delta,
        lambda,
        mu: drive(delta),
        theta: drive(lambda),
        tau: None,
        lambda_cap: None,
    }
}

impl DerivedScales {
    /// Fill in the spectral parameters for a level with the given `E^2`:
    /// `tau = E^2 - m^2 - k^2 - m*omega*l_eff` and
    /// `lambda_cap = tau - 2*m*omega0`.
    pub fn with_spectral(
        mut self,
        p: &PhysicalParams,
        qn: &QuantumNumbers,
        e_squared: f64,
    ) -> Self {
        let l_eff = effective_angular_momentum(p, qn);
        let tau = e_squared
            - p.mass * p.mass
            - qn.k * qn.k
            - p.mass * self.omega * l_eff;
        self.tau = Some(tau);
        self.lambda_cap = Some(tau - 2.0 * p.mass * p.omega0);
        self
    }
}
