//! The three commands: spectrum tables, flux sweeps, oracle verification.
//!
//! Rows are computed through [`dislokon::par::map_vec`] — data-parallel
//! under the default `parallel` feature, plain sequential without it, with
//! identical ordering and bit-identical values either way.  Assembly into
//! text is always single-threaded and order-preserving.
//!
//! Formula failures are per row, never per run: a pathological parameter
//! combination marks its own row's status column and leaves the rest of a
//! large table or sweep intact.

use dislokon::{
    effective_angular_momentum, energy_ground_n1, energy_hardwall_approx, energy_landau, par,
    verify_scenario, EnergyLevel, OracleError, PhysicalParams, QuantumNumbers, Scenario,
    SpectrumError, FLUX_ANGLE,
};

use crate::config::RunConfig;
use crate::render::{csv_document, fmt_real, status_slug};

/// Closed-form level for one quantum-number combination under the
/// configured scenario.
///
/// The linear scenario always evaluates the degree-1 constrained state:
/// [`energy_ground_n1`] back-solves the field strength that terminates the
/// series at degree 1 for this row's `l_eff`, so the configured `b0` plays
/// no role there.
fn level_for(
    p: &PhysicalParams,
    scenario: Scenario,
    qn: &QuantumNumbers,
) -> Result<EnergyLevel, SpectrumError> {
    match scenario {
        Scenario::Landau => energy_landau(p, qn),
        Scenario::HardWall => energy_hardwall_approx(p, qn).map(|hw| hw.level),
        Scenario::Linear => energy_ground_n1(p, qn),
    }
}

/// Radial indices a scenario tabulates: every index up to `n_max` for the
/// magnetic scenarios, only the constrained degree-1 state for the linear
/// one.
fn radial_indices(cfg: &RunConfig) -> Vec<u32> {
    match cfg.scenario {
        Scenario::Linear => vec![1],
        _ => (0..=cfg.n_max).collect(),
    }
}

/// Spectrum table: one row per (n, l, k), deterministically ordered by
/// n, then l, then k.
pub fn cmd_spectrum(cfg: &RunConfig) -> String {
    let mut tasks = Vec::new();
    for n in radial_indices(cfg) {
        for l in cfg.l_min..=cfg.l_max {
            for &k in &cfg.k_values {
                tasks.push(QuantumNumbers::new(n, l, k));
            }
        }
    }
    let rows = par::map_vec(tasks, |qn| {
        let l_eff = effective_angular_momentum(&cfg.params, &qn);
        let (e2, ep, em, status) = match level_for(&cfg.params, cfg.scenario, &qn) {
            Ok(level) => (
                fmt_real(level.e_squared),
                fmt_real(level.e_plus),
                fmt_real(level.e_minus),
                "ok",
            ),
            Err(e) => (String::new(), String::new(), String::new(), status_slug(&e)),
        };
        format!(
            "{},{},{},{},{},{},{},{},{}",
            cfg.scenario.as_str(),
            qn.n_radial,
            qn.l,
            fmt_real(qn.k),
            fmt_real(l_eff),
            e2,
            ep,
            em,
            status
        )
    });
    csv_document(
        cfg,
        "scenario,n,l,k,l_eff,e_squared,e_plus,e_minus,status",
        &rows,
    )
}

/// Flux sweep: `E⁺` over the sweep grid for each `l` in range, at fixed
/// radial index (0, or the constrained degree 1 for the linear scenario)
/// and the first configured `k`.
///
/// The `period_gap` column verifies flux periodicity directly from the
/// table: for a row at `(Φ_B, l)` it holds `|E(Φ_B + 2π/q, l) − E(Φ_B,
/// l−1)|` whenever `Φ_B + 2π/q` lands on the sweep grid and `l−1` is still
/// in range — the two levels are the same physical state, so the gap is a
/// numerical zero.  Rows without a partner leave the cell empty.
pub fn cmd_sweep_flux(cfg: &RunConfig) -> String {
    let sweep = cfg.sweep.expect("sweep presence is validated");
    let phis = sweep.grid();
    let ls: Vec<i32> = (cfg.l_min..=cfg.l_max).collect();
    let n = radial_indices(cfg)[0];
    let k = cfg.k_values[0];

    let mut tasks = Vec::new();
    for &phi in &phis {
        for &l in &ls {
            tasks.push((phi, l));
        }
    }
    let energies = par::map_vec(tasks, |(phi, l)| {
        let p = PhysicalParams {
            phi_b: phi,
            ..cfg.params
        };
        level_for(&p, cfg.scenario, &QuantumNumbers::new(n, l, k))
    });

    let idx = |i_phi: usize, i_l: usize| i_phi * ls.len() + i_l;
    let period = FLUX_ANGLE / cfg.params.charge;
    let mut rows = Vec::with_capacity(energies.len());
    for (i_phi, &phi) in phis.iter().enumerate() {
        for (i_l, &l) in ls.iter().enumerate() {
            let here = &energies[idx(i_phi, i_l)];
            let (ep, status) = match here {
                Ok(level) => (fmt_real(level.e_plus), "ok"),
                Err(e) => (String::new(), status_slug(e)),
            };
            // One full period up in flux, same l, against one step down in l
            // at this flux: equal whenever both grid points exist.
            let target = phi + period;
            let partner_phi = phis
                .iter()
                .position(|&pj| (pj - target).abs() <= 1e-9 * (1.0 + target.abs()));
            let gap = match (partner_phi, i_l) {
                (Some(j), il) if il > 0 => {
                    match (&energies[idx(j, il)], &energies[idx(i_phi, il - 1)]) {
                        (Ok(shifted), Ok(down)) => fmt_real((shifted.e_plus - down.e_plus).abs()),
                        _ => String::new(),
                    }
                }
                _ => String::new(),
            };
            rows.push(format!("{},{},{},{},{}", fmt_real(phi), l, ep, gap, status));
        }
    }
    csv_document(cfg, "phi_b,l,e_plus,period_gap,status", &rows)
}

/// Oracle verification: one check per (n, l, k), rendered as a
/// human-readable report.  Returns the report text and the number of failed
/// checks; the binary exits 1 when any check fails.
pub fn cmd_verify(cfg: &RunConfig) -> (String, usize) {
    let mut combos = Vec::new();
    for n in radial_indices(cfg) {
        for l in cfg.l_min..=cfg.l_max {
            for &k in &cfg.k_values {
                combos.push(QuantumNumbers::new(n, l, k));
            }
        }
    }
    let results = par::map_vec(combos, |qn| {
        let outcome = verify_scenario(&cfg.params, &qn, cfg.scenario, cfg.tol, cfg.grid_n);
        (qn, outcome)
    });

    let mut text = crate::render::config_echo(cfg);
    let mut failed = 0usize;
    let total = results.len();
    for (qn, outcome) in results {
        text.push_str(&format!(
            "check {} n={} l={} k={}\n",
            cfg.scenario.as_str(),
            qn.n_radial,
            qn.l,
            fmt_real(qn.k)
        ));
        let verdict = match outcome {
            Ok(report) => {
                indent_lines(&mut text, &report.to_string());
                "result: PASS".to_string()
            }
            Err(OracleError::MismatchBeyondTolerance(report)) => {
                failed += 1;
                indent_lines(&mut text, &report.to_string());
                "result: FAIL (relative error exceeds tolerance)".to_string()
            }
            Err(other) => {
                failed += 1;
                format!("result: FAIL ({other})")
            }
        };
        text.push_str("  ");
        text.push_str(&verdict);
        text.push('\n');
    }
    text.push_str(&format!(
        "summary: {total} checks, {} passed, {failed} failed\n",
        total - failed
    ));
    (text, failed)
}

fn indent_lines(out: &mut String, block: &str) {
    for line in block.lines() {
        out.push_str("  ");
        out.push_str(line);
        out.push('\n');
    }
}
