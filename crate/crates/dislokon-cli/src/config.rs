//! Run configuration with layered resolution.
//!
//! Precedence, lowest to highest: built-in defaults, the `DISLOKON_GRID_N`
//! environment variable, a `--config` key=value file, explicit command-line
//! flags.  Every layer only touches the keys it actually sets, so a flag
//! overrides the file for that one key while the rest of the file still
//! applies.
//!
//! Any malformed or inconsistent configuration is a [`ConfigError`], which
//! the binary maps to exit code 2.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use dislokon::{PhysicalParams, Scenario, DEFAULT_GRID_N, MIN_GRID_N};

/// A configuration problem: malformed value, unknown key, violated
/// invariant.  Always fatal before any computation starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid config: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

/// Flux sweep grid: `steps` evenly spaced values from `start` to `stop`
/// inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl SweepSpec {
    /// The sweep grid points, endpoints included.
    pub fn grid(&self) -> Vec<f64> {
        let span = self.stop - self.start;
        (0..self.steps)
            .map(|i| self.start + span * i as f64 / (self.steps - 1) as f64)
            .collect()
    }
}

impl FromStr for SweepSpec {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return err(format!(
                "sweep must be start:stop:steps (got `{s}`)"
            ));
        }
        let start: f64 = parts[0]
            .parse()
            .map_err(|_| ConfigError(format!("sweep start `{}` is not a number", parts[0])))?;
        let stop: f64 = parts[1]
            .parse()
            .map_err(|_| ConfigError(format!("sweep stop `{}` is not a number", parts[1])))?;
        let steps: usize = parts[2]
            .parse()
            .map_err(|_| ConfigError(format!("sweep steps `{}` is not an integer", parts[2])))?;
        if !start.is_finite() || !stop.is_finite() {
            return err("sweep endpoints must be finite");
        }
        if steps < 2 {
            return err(format!("sweep needs at least 2 steps (got {steps})"));
        }
        Ok(SweepSpec { start, stop, steps })
    }
}

/// Fully resolved run configuration shared by all commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: PhysicalParams,
    /// Highest radial index in tables and verification (inclusive).
    pub n_max: u32,
    /// Inclusive angular-momentum range.
    pub l_min: i32,
    pub l_max: i32,
    /// Axial wave numbers; sweeps use only the first entry.
    pub k_values: Vec<f64>,
    pub scenario: Scenario,
    pub out: Option<PathBuf>,
    pub sweep: Option<SweepSpec>,
    /// Oracle grid resolution (verification only).
    pub grid_n: usize,
    /// Oracle relative tolerance (verification only).
    pub tol: f64,
}

/// One unresolved layer: every key optional, `None` = not set here.
#[derive(Debug, Clone, Default)]
pub struct Layer {
    pub mass: Option<f64>,
    pub charge: Option<f64>,
    pub b0: Option<f64>,
    pub flux: Option<f64>,
    pub chi: Option<f64>,
    pub omega0: Option<f64>,
    pub nu: Option<f64>,
    pub r0: Option<Option<f64>>,
    pub n_max: Option<u32>,
    pub l_min: Option<i32>,
    pub l_max: Option<i32>,
    pub k: Option<Vec<f64>>,
    pub scenario: Option<Scenario>,
    pub sweep: Option<Option<SweepSpec>>,
    pub out: Option<PathBuf>,
    pub grid_n: Option<usize>,
    pub tol: Option<f64>,
}

impl Layer {
    /// Overlay `upper` on top of `self`: keys set in `upper` win.
    fn overlay(mut self, upper: Layer) -> Layer {
        macro_rules! take {
            ($($field:ident),*) => { $( if upper.$field.is_some() { self.$field = upper.$field; } )* };
        }
        take!(mass, charge, b0, flux, chi, omega0, nu, r0, n_max, l_min, l_max);
        take!(k, scenario, sweep, out, grid_n, tol);
        self
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        fn real(key: &str, value: &str) -> Result<f64, ConfigError> {
            value
                .parse::<f64>()
                .map_err(|_| ConfigError(format!("{key}: `{value}` is not a number")))
        }
        fn int<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
            value
                .parse::<T>()
                .map_err(|_| ConfigError(format!("{key}: `{value}` is not a valid integer")))
        }
        match key {
            "mass" => self.mass = Some(real(key, value)?),
            "charge" => self.charge = Some(real(key, value)?),
            "b0" => self.b0 = Some(real(key, value)?),
            "flux" => self.flux = Some(real(key, value)?),
            "chi" => self.chi = Some(real(key, value)?),
            "omega0" => self.omega0 = Some(real(key, value)?),
            "nu" => self.nu = Some(real(key, value)?),
            "r0" => {
                self.r0 = Some(if value == "none" {
                    None
                } else {
                    Some(real(key, value)?)
                })
            }
            "n-max" => self.n_max = Some(int(key, value)?),
            "l-min" => self.l_min = Some(int(key, value)?),
            "l-max" => self.l_max = Some(int(key, value)?),
            "k" => self.k = Some(parse_k_list(value)?),
            "scenario" => self.scenario = Some(value.parse().map_err(ConfigError)?),
            "sweep" => {
                self.sweep = Some(if value == "none" {
                    None
                } else {
                    Some(value.parse()?)
                })
            }
            "out" => self.out = Some(PathBuf::from(value)),
            "grid-n" => self.grid_n = Some(int(key, value)?),
            "tol" => self.tol = Some(real(key, value)?),
            other => return err(format!("unknown key `{other}`")),
        }
        Ok(())
    }
}

/// Comma-separated list of axial wave numbers.
pub fn parse_k_list(value: &str) -> Result<Vec<f64>, ConfigError> {
    let ks: Result<Vec<f64>, _> = value
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| ConfigError(format!("k: `{}` is not a number", part.trim())))
        })
        .collect();
    let ks = ks?;
    if ks.is_empty() {
        return err("k list must not be empty");
    }
    Ok(ks)
}

/// Parse a flat `key=value` config file.  Blank lines and lines starting
/// with `#` are ignored; keys are the long flag names.
pub fn parse_file(text: &str) -> Result<Layer, ConfigError> {
    let mut layer = Layer::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return err(format!("line {}: expected key=value, got `{line}`", idx + 1));
        };
        layer
            .set(key.trim(), value.trim())
            .map_err(|e| ConfigError(format!("line {}: {}", idx + 1, e.0)))?;
    }
    Ok(layer)
}

/// The `DISLOKON_GRID_N` environment override as a layer.
pub fn env_layer() -> Result<Layer, ConfigError> {
    let mut layer = Layer::default();
    if let Ok(value) = std::env::var("DISLOKON_GRID_N") {
        let grid_n = value.parse::<usize>().map_err(|_| {
            ConfigError(format!("DISLOKON_GRID_N: `{value}` is not a valid integer"))
        })?;
        layer.grid_n = Some(grid_n);
    }
    Ok(layer)
}

/// Which command the config is being resolved for; drives the
/// command-specific invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Spectrum,
    SweepFlux,
    Verify,
}

/// Resolve layers (lowest precedence first) into a validated [`RunConfig`].
pub fn resolve(layers: Vec<Layer>, kind: CommandKind) -> Result<RunConfig, ConfigError> {
    let merged = layers
        .into_iter()
        .fold(Layer::default(), |acc, layer| acc.overlay(layer));

    let params = PhysicalParams {
        mass: merged.mass.unwrap_or(1.0),
        charge: merged.charge.unwrap_or(1.0),
        b0: merged.b0.unwrap_or(1.0),
        phi_b: merged.flux.unwrap_or(0.0),
        chi: merged.chi.unwrap_or(0.0),
        omega0: merged.omega0.unwrap_or(0.0),
        nu: merged.nu.unwrap_or(0.0),
        r0: merged.r0.unwrap_or(None),
    };
    let cfg = RunConfig {
        params,
        n_max: merged.n_max.unwrap_or(3),
        l_min: merged.l_min.unwrap_or(1),
        l_max: merged.l_max.unwrap_or(2),
        k_values: merged.k.unwrap_or_else(|| vec![0.0]),
        scenario: merged.scenario.unwrap_or(Scenario::Landau),
        out: merged.out,
        sweep: merged.sweep.unwrap_or(None),
        grid_n: merged.grid_n.unwrap_or(DEFAULT_GRID_N),
        tol: merged.tol.unwrap_or(1e-4),
    };
    validate(&cfg, kind)?;
    Ok(cfg)
}

fn validate(cfg: &RunConfig, kind: CommandKind) -> Result<(), ConfigError> {
    cfg.params
        .validate()
        .map_err(|e| ConfigError(e.to_string()))?;
    if cfg.l_min > cfg.l_max {
        return err(format!(
            "l-min ({}) must not exceed l-max ({})",
            cfg.l_min, cfg.l_max
        ));
    }
    if cfg.k_values.is_empty() {
        return err("k list must not be empty");
    }
    if cfg.k_values.iter().any(|k| !k.is_finite()) {
        return err("k values must be finite");
    }
    if cfg.grid_n < MIN_GRID_N {
        return err(format!(
            "grid-n must be at least {MIN_GRID_N} (got {})",
            cfg.grid_n
        ));
    }
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return err(format!("tol must be positive and finite (got {})", cfg.tol));
    }
    match cfg.scenario {
        Scenario::HardWall => {
            if cfg.params.r0.is_none() {
                return err("hardwall scenario requires r0");
            }
        }
        Scenario::Linear => {
            if cfg.params.nu <= 0.0 {
                return err("linear scenario requires a positive slope nu");
            }
            if cfg.params.charge == 0.0 {
                return err("linear scenario requires nonzero charge (the tuned field is b0 = m*omega_1/q)");
            }
        }
        Scenario::Landau => {}
    }
    if kind == CommandKind::SweepFlux {
        if cfg.sweep.is_none() {
            return err("sweep-flux requires --sweep start:stop:steps");
        }
        if cfg.params.charge == 0.0 {
            return err("sweep-flux requires nonzero charge (the flux period is 2*pi/q)");
        }
    }
    Ok(())
}
