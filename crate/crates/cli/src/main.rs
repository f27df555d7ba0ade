//! Command-line front end: catalog listing, single-point propagation,
//! infidelity sweeps with CSV and plot-script output, analytic-vs-integrator
//! cross checks, and robustness order fits.

// !(step > 0.0) also rejects a NaN step, unlike step <= 0.0.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod csvio;
mod plot;
mod resolve;
mod seqfile;

use std::f64::consts::PI;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use ramancp_core::analysis::{infidelity, propagate_with, robustness_order};
use ramancp_core::catalog;
use ramancp_core::oracle::{integrate, integrate_checked, suggested_steps, IntegratorConfig};
use ramancp_core::propagator::sequence_propagator;
use ramancp_core::pulse::ErrorModel;
use ramancp_core::Error;

#[derive(Parser)]
#[command(name = "ramancp", version, about = "Composite pulse sequences for Raman qubits")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the built-in sequences with areas, phases, and schemes
    Catalog,
    /// Print the three-state propagator and infidelity at one grid point
    Propagate(PropagateArgs),
    /// Write an infidelity CSV over an error (and detuning) grid
    Sweep(SweepArgs),
    /// Compare the closed-form propagator against the integrator
    OracleCheck(OracleCheckArgs),
    /// Fit the robustness order from the small-error scaling of D
    Order(OrderArgs),
}

#[derive(Args)]
struct PropagateArgs {
    /// Catalog label or path to a sequence file
    #[arg(long)]
    sequence: String,
    /// Target gate: x, hadamard, rotation:<angle>, phase:<angle>
    #[arg(long)]
    gate: Option<String>,
    /// Alignment when scoring: none or phase
    #[arg(long)]
    align: Option<String>,
    /// Pulse area error (pi literals such as pi/10 are accepted)
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    epsilon: String,
    /// Detuning times pulse duration, dimensionless
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    delta_t: String,
    /// Propagation engine: analytic or oracle
    #[arg(long, default_value = "analytic")]
    engine: String,
    /// Integrator steps per pulse (default: suggested for the sequence)
    #[arg(long)]
    steps: Option<u32>,
}

#[derive(Args)]
struct SweepArgs {
    /// Catalog label or path to a sequence file
    #[arg(long)]
    sequence: String,
    /// Target gate override
    #[arg(long)]
    gate: Option<String>,
    /// Alignment override: none or phase
    #[arg(long)]
    align: Option<String>,
    /// Error grid as start:stop:step (pi literals accepted)
    #[arg(long, allow_hyphen_values = true)]
    epsilon_range: Option<String>,
    /// Comma-separated detuning-times-duration values
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    delta_t: String,
    /// Propagation engine: analytic or oracle
    #[arg(long, default_value = "analytic")]
    engine: String,
    /// Integrator steps per pulse (default: suggested per point)
    #[arg(long)]
    steps: Option<u32>,
    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
    /// Also write a gnuplot script rendering the CSV
    #[arg(long)]
    plot_script: Option<PathBuf>,
}

#[derive(Args)]
struct OracleCheckArgs {
    /// Catalog label or path to a sequence file
    #[arg(long)]
    sequence: String,
    /// Pulse area error
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    epsilon: String,
    /// Detuning times pulse duration
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    delta_t: String,
    /// Integrator steps per pulse (default: suggested for the sequence)
    #[arg(long)]
    steps: Option<u32>,
}

#[derive(Args)]
struct OrderArgs {
    /// Catalog label or path to a sequence file
    #[arg(long)]
    sequence: String,
    /// Target gate override
    #[arg(long)]
    gate: Option<String>,
    /// Alignment override: none or phase
    #[arg(long)]
    align: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Catalog => cmd_catalog(),
        Cmd::Propagate(a) => cmd_propagate(a),
        Cmd::Sweep(a) => cmd_sweep(a),
        Cmd::OracleCheck(a) => cmd_oracle_check(a),
        Cmd::Order(a) => cmd_order(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Resolves a sequence at a given dimensionless detuning, converting to a
/// physical detuning with the sequence's own pulse duration so compensated
/// catalog entries are rebuilt consistently.
fn resolve_at(
    sequence: &str,
    gate: Option<&str>,
    align: Option<&str>,
    delta_t: f64,
) -> Result<(resolve::Resolved, f64)> {
    let base = resolve::resolve(sequence, gate, align, 0.0)?;
    let duration = match base.seq.uniform_shape() {
        Some(s) => s.duration,
        None if delta_t == 0.0 => 1.0,
        None => anyhow::bail!("detuned propagation needs a uniform pulse duration"),
    };
    let delta = delta_t / duration;
    let resolved = if delta == 0.0 { base } else { resolve::resolve(sequence, gate, align, delta)? };
    Ok((resolved, delta))
}

fn cmd_catalog() -> Result<bool> {
    let labels = catalog::labels();
    for label in &labels {
        let e = catalog::entry(label, 0.0)?;
        let seq = &e.sequence;
        let first = &seq.pairs[0];
        let leg_sum: f64 = seq.pairs.iter().map(|p| p.area0.abs()).sum();
        let phases: Vec<String> =
            seq.pairs.iter().map(|p| format!("{:+.4}", p.phase0 / PI)).collect();
        println!(
            "{:<16} {:<9} {:>2} pairs  legs/pi ({:+.4}, {:+.4})  rms area/pi {:>5.2}  leg area sum/pi {:>7.4}",
            label,
            seq.scheme.as_str(),
            seq.pairs.len(),
            first.area0 / PI,
            first.area1 / PI,
            seq.total_rms_area() / PI,
            leg_sum / PI,
        );
        println!("{:<16} phases/pi: {}", "", phases.join(" "));
        if !e.note.is_empty() {
            println!("{:<16} {}", "", e.note);
        }
    }
    println!();
    println!("Rotation gates follow the grammar ROT-<pairs>-<angle>, e.g. ROT-6-pi/3.");
    println!("SUMMARY command=catalog entries={} status=ok", labels.len());
    Ok(true)
}

fn cmd_propagate(a: &PropagateArgs) -> Result<bool> {
    let eps = resolve::parse_angle(&a.epsilon)?;
    let dt = resolve::parse_angle(&a.delta_t)?;
    let (r, delta) = resolve_at(&a.sequence, a.gate.as_deref(), a.align.as_deref(), dt)?;
    let em = ErrorModel::new(eps, delta)?;
    let eng = resolve::engine(&a.engine, a.steps, &r.seq, &em)?;
    let u = propagate_with(&r.seq, &em, &eng)?;
    println!(
        "sequence {} ({} pairs, {} scheme), epsilon = {}, delta t = {}, engine = {}",
        r.seq.label,
        r.seq.pairs.len(),
        r.seq.scheme.as_str(),
        eps,
        dt,
        eng.describe(),
    );
    println!("three-state propagator, rows and columns ordered |0>, |1>, |2>:");
    for row in &u.0 {
        let cells: Vec<String> =
            row.iter().map(|e| format!("{:+.11e} {:+.11e}i", e.re, e.im)).collect();
        println!("  [ {} ]", cells.join("   "));
    }
    let d = infidelity(&u, &r.target, r.align)?;
    println!(
        "D against {} ({} alignment) = {:.11e}",
        r.target.describe(),
        r.align.as_str(),
        d
    );
    println!(
        "SUMMARY command=propagate sequence={} epsilon={} delta_t={} engine={} d={:.11e} status=ok",
        r.seq.label,
        eps,
        dt,
        eng.describe(),
        d
    );
    Ok(true)
}

fn cmd_sweep(a: &SweepArgs) -> Result<bool> {
    let eps_grid = match &a.epsilon_range {
        Some(spec) => resolve::parse_range(spec)?,
        None => resolve::parse_range("-0.5:0.5:0.002")?,
    };
    let dts = resolve::parse_list(&a.delta_t)?;
    let (rows, r) = resolve::parallel_sweep(
        &a.sequence,
        a.gate.as_deref(),
        a.align.as_deref(),
        &eps_grid,
        &dts,
        &a.engine,
        a.steps,
    )?;
    let csv = csvio::format_rows(&rows);
    let reread = csvio::format_rows(&csvio::parse(&csv)?);
    if reread != csv {
        anyhow::bail!("csv round-trip is not byte-identical");
    }
    fs::write(&a.out, &csv).with_context(|| format!("writing {}", a.out.display()))?;
    println!("wrote {} rows to {}", rows.len(), a.out.display());
    if let Some(path) = &a.plot_script {
        let script = plot::gnuplot_script(&a.out.to_string_lossy(), &r.seq.label);
        fs::write(path, script).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote plot script to {} (not executed)", path.display());
    }
    println!(
        "SUMMARY command=sweep sequence={} rows={} out={} status=ok",
        r.seq.label,
        rows.len(),
        a.out.display()
    );
    Ok(true)
}

fn cmd_oracle_check(a: &OracleCheckArgs) -> Result<bool> {
    let eps = resolve::parse_angle(&a.epsilon)?;
    let dt = resolve::parse_angle(&a.delta_t)?;
    let base = resolve::sequence_only(&a.sequence, 0.0)?;
    let duration = match base.uniform_shape() {
        Some(s) => s.duration,
        None if dt == 0.0 => 1.0,
        None => anyhow::bail!("detuned propagation needs a uniform pulse duration"),
    };
    let delta = dt / duration;
    let seq = if delta == 0.0 { base } else { resolve::sequence_only(&a.sequence, delta)? };
    let em = ErrorModel::new(eps, delta)?;
    let steps = a.steps.unwrap_or_else(|| suggested_steps(&seq, &em, 4000));
    let cfg = IntegratorConfig::with_steps(steps);
    let analytic = match sequence_propagator(&seq, &em) {
        Ok(u) => u,
        Err(Error::EngineMismatch) => {
            println!("analytic path unavailable; oracle-only");
            let (u, residual) = integrate_checked(&seq, &em, &cfg)?;
            println!(
                "oracle propagator at {} steps/pulse: unitarity defect {:.3e}, step-halving residual {:.3e}",
                steps,
                u.unitarity_error(),
                residual
            );
            println!(
                "SUMMARY command=oracle-check sequence={} epsilon={} delta_t={} steps={} status=skipped",
                seq.label, eps, dt, steps
            );
            return Ok(true);
        }
        Err(e) => return Err(e.into()),
    };
    let numeric = integrate(&seq, &em, &cfg)?;
    let diff = analytic.max_abs_diff(&numeric);
    let pass = diff <= 1e-8;
    println!("steps per pulse: {steps}");
    println!("max |analytic - oracle| = {diff:.3e} (tolerance 1e-8)");
    println!("{}", if pass { "PASS" } else { "FAIL" });
    println!(
        "SUMMARY command=oracle-check sequence={} epsilon={} delta_t={} steps={} max_diff={:.3e} status={}",
        seq.label,
        eps,
        dt,
        steps,
        diff,
        if pass { "pass" } else { "fail" }
    );
    Ok(pass)
}

fn cmd_order(a: &OrderArgs) -> Result<bool> {
    let r = resolve::resolve(&a.sequence, a.gate.as_deref(), a.align.as_deref(), 0.0)?;
    let slope = robustness_order(&r.seq, &r.target, r.align)?;
    println!(
        "sequence {} ({} pairs): fitted log-log robustness slope = {:.3}",
        r.seq.label,
        r.seq.pairs.len(),
        slope
    );
    println!(
        "SUMMARY command=order sequence={} slope={:.6} status=ok",
        r.seq.label, slope
    );
    Ok(true)
}
