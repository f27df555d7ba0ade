//! Turns command-line strings (catalog labels or sequence files, gate and
//! alignment names, engine choices) into core types, and runs sweeps with
//! the grid points distributed over a thread pool.

use std::path::Path;

use anyhow::{bail, Context, Result};
use rayon::prelude::*;

use ramancp_core::analysis::{infidelity, propagate_with, Alignment, Engine, GateTarget, SweepRow};
use ramancp_core::catalog::{self, parse_pi_literal};
use ramancp_core::oracle::{suggested_steps, IntegratorConfig};
use ramancp_core::pulse::{CompositeSequence, ErrorModel};

use crate::seqfile;

/// A sequence ready to run: the pulses, the gate they should implement, and
/// the alignment used when scoring them.
pub struct Resolved {
    pub seq: CompositeSequence,
    pub target: GateTarget,
    pub align: Alignment,
}

/// Parses an angle or plain number, accepting pi literals such as "2pi/3".
pub fn parse_angle(s: &str) -> Result<f64> {
    parse_pi_literal(s).with_context(|| format!("cannot parse number or pi literal: {s:?}"))
}

pub fn parse_gate(s: &str) -> Result<GateTarget> {
    let lower = s.to_ascii_lowercase();
    if let Some(arg) = lower.strip_prefix("rotation:") {
        return Ok(GateTarget::rotation(parse_angle(arg)?));
    }
    if let Some(arg) = lower.strip_prefix("phase:") {
        return Ok(GateTarget::phase(parse_angle(arg)?));
    }
    match lower.as_str() {
        "x" => Ok(GateTarget::x()),
        "hadamard" | "h" => Ok(GateTarget::hadamard()),
        other => bail!("unknown gate {other:?}; expected x, hadamard, rotation:<angle>, phase:<angle>"),
    }
}

/// Parses a grid spec "start:stop:step" into an inclusive grid. The step
/// must be strictly positive and the stop must not precede the start.
pub fn parse_range(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        bail!("range must look like start:stop:step, got {spec:?}");
    }
    let start = parse_angle(parts[0])?;
    let stop = parse_angle(parts[1])?;
    let step = parse_angle(parts[2])?;
    if !(step > 0.0) {
        bail!("range step must be positive, got {step}");
    }
    if stop < start {
        bail!("range stop {stop} is below start {start}");
    }
    let span = (stop - start) / step;
    if span > 2e6 {
        bail!("range {spec:?} has more than two million points");
    }
    // A tiny slack absorbs accumulated rounding at the far endpoint without
    // admitting an extra point on non-divisible ranges.
    let count = (span + 1e-6).floor() as usize + 1;
    let mut grid = Vec::with_capacity(count);
    for i in 0..count {
        grid.push(start + step * i as f64);
    }
    Ok(grid)
}

/// Parses a comma-separated list of numbers or pi literals.
pub fn parse_list(spec: &str) -> Result<Vec<f64>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_angle)
        .collect()
}

pub fn parse_align(s: &str) -> Result<Alignment> {
    match s.to_ascii_lowercase().as_str() {
        "none" => Ok(Alignment::None),
        "phase" => Ok(Alignment::GlobalPhase),
        other => bail!("unknown alignment {other:?}; expected none or phase"),
    }
}

fn is_file(sequence: &str) -> bool {
    sequence.ends_with(".json") || Path::new(sequence).is_file()
}

/// Loads just the pulses for commands that need no target gate.
pub fn sequence_only(sequence: &str, delta: f64) -> Result<CompositeSequence> {
    if is_file(sequence) {
        seqfile::load(Path::new(sequence))
    } else {
        Ok(catalog::entry(sequence, delta)?.sequence)
    }
}

/// Resolves a `--sequence` value to pulses plus scoring defaults. A value
/// naming an existing file (or ending in .json) is loaded as a sequence
/// file and needs an explicit `--gate`; anything else goes through the
/// catalog, where detuning-compensated entries are built for the physical
/// detuning given here.
pub fn resolve(
    sequence: &str,
    gate: Option<&str>,
    align: Option<&str>,
    delta: f64,
) -> Result<Resolved> {
    if is_file(sequence) {
        let seq = seqfile::load(Path::new(sequence))?;
        let target = gate
            .map(parse_gate)
            .transpose()?
            .context("sequence files carry no target gate; pass --gate")?;
        let align = align.map(parse_align).transpose()?.unwrap_or(Alignment::GlobalPhase);
        return Ok(Resolved { seq, target, align });
    }
    let entry = catalog::entry(sequence, delta)?;
    let target = match gate {
        Some(g) => parse_gate(g)?,
        None => entry.target,
    };
    let align = match align {
        Some(a) => parse_align(a)?,
        None => entry.align,
    };
    Ok(Resolved { seq: entry.sequence, target, align })
}

/// Builds the engine for one evaluation point. Without an explicit step
/// count the oracle uses the suggested count for this sequence and error
/// model, so stiff (far-detuned) entries get enough resolution by default.
pub fn engine(kind: &str, steps: Option<u32>, seq: &CompositeSequence, em: &ErrorModel) -> Result<Engine> {
    match kind.to_ascii_lowercase().as_str() {
        "analytic" => Ok(Engine::Analytic),
        "oracle" => {
            let n = steps.unwrap_or_else(|| suggested_steps(seq, em, 4000));
            Ok(Engine::Oracle(IntegratorConfig::with_steps(n)))
        }
        other => bail!("unknown engine {other:?}; expected analytic or oracle"),
    }
}

fn sorted(grid: &[f64]) -> Result<Vec<f64>> {
    if grid.iter().any(|x| !x.is_finite()) {
        bail!("grid values must be finite");
    }
    let mut g = grid.to_vec();
    g.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    Ok(g)
}

/// Evaluates D over the epsilon x delta-t grid in parallel, re-resolving
/// catalog labels per detuning so compensated entries track it. Rows come
/// back sorted by epsilon then delta t, independent of scheduling.
pub fn parallel_sweep(
    sequence: &str,
    gate: Option<&str>,
    align: Option<&str>,
    eps_grid: &[f64],
    delta_t_grid: &[f64],
    engine_kind: &str,
    steps: Option<u32>,
) -> Result<(Vec<SweepRow>, Resolved)> {
    if eps_grid.is_empty() {
        bail!("epsilon grid is empty");
    }
    let eps = sorted(eps_grid)?;
    let dts = if delta_t_grid.is_empty() { vec![0.0] } else { sorted(delta_t_grid)? };

    let base = resolve(sequence, gate, align, 0.0)?;
    let duration = match base.seq.uniform_shape() {
        Some(s) => s.duration,
        None if dts.iter().all(|&d| d == 0.0) => 1.0,
        None => bail!("detuning sweeps need a uniform pulse duration"),
    };

    let variants: Vec<(f64, CompositeSequence)> = dts
        .iter()
        .map(|&dt| Ok((dt, resolve(sequence, gate, align, dt / duration)?.seq)))
        .collect::<Result<_>>()?;

    let points: Vec<(f64, &(f64, CompositeSequence))> = eps
        .iter()
        .flat_map(|&e| variants.iter().map(move |v| (e, v)))
        .collect();

    let rows = points
        .par_iter()
        .map(|&(e, (dt, seq))| {
            let em = ErrorModel::new(e, dt / duration)?;
            let eng = engine(engine_kind, steps, seq, &em)?;
            let u = propagate_with(seq, &em, &eng)?;
            let d = infidelity(&u, &base.target, base.align)?;
            Ok(SweepRow { epsilon: e, delta_t: *dt, infidelity: d })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rows, base))
}
