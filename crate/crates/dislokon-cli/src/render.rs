//! Deterministic text rendering: locale-independent reals, the config echo
//! block, and CSV assembly.
//!
//! Determinism contract: identical configs produce byte-identical output.
//! Everything here is a pure function of the resolved [`RunConfig`] and the
//! computed values — no timestamps, no paths (the output path is
//! deliberately excluded from the echo so the same table written to two
//! different files stays byte-identical).

use dislokon::SpectrumError;

use crate::config::RunConfig;

/// Render a real with 17 significant digits, `.` decimal separator, and a
/// canonical zero (no negative zero), e.g. `1.2500000000000000e-1`.
pub fn fmt_real(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Status column slug for a per-row formula failure.
pub fn status_slug(e: &SpectrumError) -> &'static str {
    match e {
        SpectrumError::FreeParticle => "free-particle",
        SpectrumError::NegativeESquared { .. } => "negative-e-squared",
        SpectrumError::MissingWall => "missing-wall",
        SpectrumError::NoRealFrequency { .. } => "no-real-frequency",
    }
}

/// The `#`-prefixed config echo carried at the top of every output.
///
/// Key order is fixed; values are rendered exactly as [`fmt_real`] renders
/// data cells, so the echo is itself locale-independent and deterministic.
/// The output path is intentionally not part of the echo (see module docs).
pub fn config_echo(cfg: &RunConfig) -> String {
    let p = &cfg.params;
    let mut s = String::new();
    let mut line = |key: &str, value: String| {
        s.push_str("# ");
        s.push_str(key);
        s.push('=');
        s.push_str(&value);
        s.push('\n');
    };
    line("mass", fmt_real(p.mass));
    line("charge", fmt_real(p.charge));
    line("b0", fmt_real(p.b0));
    line("flux", fmt_real(p.phi_b));
    line("chi", fmt_real(p.chi));
    line("omega0", fmt_real(p.omega0));
    line("nu", fmt_real(p.nu));
    line("r0", p.r0.map_or_else(|| "none".into(), fmt_real));
    line("n-max", cfg.n_max.to_string());
    line("l-min", cfg.l_min.to_string());
    line("l-max", cfg.l_max.to_string());
    line(
        "k",
        cfg.k_values
            .iter()
            .map(|&k| fmt_real(k))
            .collect::<Vec<_>>()
            .join(","),
    );
    line("scenario", cfg.scenario.as_str().to_string());
    line(
        "sweep",
        cfg.sweep.map_or_else(
            || "none".into(),
            |sw| format!("{}:{}:{}", fmt_real(sw.start), fmt_real(sw.stop), sw.steps),
        ),
    );
    line("grid-n", cfg.grid_n.to_string());
    line("tol", fmt_real(cfg.tol));
    s
}

/// Assemble a CSV document: config echo, header row, data rows, LF endings.
pub fn csv_document(cfg: &RunConfig, header: &str, rows: &[String]) -> String {
    let mut doc = config_echo(cfg);
    doc.push_str(header);
    doc.push('\n');
    for row in rows {
        doc.push_str(row);
        doc.push('\n');
    }
    doc
}
