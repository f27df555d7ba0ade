//! Gate targets, the infidelity metric, the closed-form error law, sweep
//! generation, and robustness-order estimation.
//!
//! The distance D is the Frobenius distance between the 2x2 qubit block of
//! the realized propagator and the target gate, optionally minimized over a
//! global phase. Restricting to the qubit block is what makes the composite
//! sequences' error law come out exactly; leakage still shows up because a
//! leaky block cannot stay unitary.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64 as C64;

use crate::error::Error;
use crate::matrix::{CMat2, CMat3};
use crate::oracle::{self, IntegratorConfig};
use crate::propagator::sequence_propagator;
use crate::pulse::{CompositeSequence, ErrorModel};
// Supplies f64 math in no_std builds; unused whenever a dev-dependency pulls
// std into the graph and the inherent methods shadow the trait.
#[allow(unused_imports)]
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

/// Named single-qubit target gates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind {
    X,
    Hadamard,
    Rotation(f64),
    Phase(f64),
}

/// A target gate together with its 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GateTarget {
    pub kind: GateKind,
    pub qubit_matrix: CMat2,
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

impl GateTarget {
    pub fn x() -> Self {
        let m = CMat2::from_rows([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        Self { kind: GateKind::X, qubit_matrix: m }
    }

    pub fn hadamard() -> Self {
        let s = 0.5_f64.sqrt();
        let m = CMat2::from_rows([[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]);
        Self { kind: GateKind::Hadamard, qubit_matrix: m }
    }

    /// Reflection-form rotation [[cos t, sin t], [sin t, -cos t]]; equals X
    /// at t = pi/2 and the Hadamard at t = pi/4.
    pub fn rotation(theta: f64) -> Self {
        let m = CMat2::from_rows([
            [c(theta.cos(), 0.0), c(theta.sin(), 0.0)],
            [c(theta.sin(), 0.0), c(-theta.cos(), 0.0)],
        ]);
        Self { kind: GateKind::Rotation(theta), qubit_matrix: m }
    }

    /// diag(e^{i eta/2}, e^{-i eta/2}), i.e. exp(i eta sigma_z / 2).
    pub fn phase(eta: f64) -> Self {
        let m = CMat2::from_rows([
            [C64::from_polar(1.0, 0.5 * eta), c(0.0, 0.0)],
            [c(0.0, 0.0), C64::from_polar(1.0, -0.5 * eta)],
        ]);
        Self { kind: GateKind::Phase(eta), qubit_matrix: m }
    }

    pub fn describe(&self) -> String {
        match self.kind {
            GateKind::X => String::from("X"),
            GateKind::Hadamard => String::from("Hadamard"),
            GateKind::Rotation(t) => format!("Rotation({t})"),
            GateKind::Phase(e) => format!("Phase({e})"),
        }
    }
}

/// Whether the distance is taken as-is or minimized over a global phase of
/// the qubit block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alignment {
    None,
    GlobalPhase,
}

impl Alignment {
    pub fn as_str(&self) -> &'static str {
        match self {
            Alignment::None => "none",
            Alignment::GlobalPhase => "phase",
        }
    }
}

/// Top-left 2x2 block of a three-state propagator.
pub fn qubit_block(u: &CMat3) -> CMat2 {
    CMat2::from_rows([
        [u.0[0][0], u.0[0][1]],
        [u.0[1][0], u.0[1][1]],
    ])
}

/// Frobenius distance between the realized qubit block and the target,
/// optionally after the optimal global phase (the phase of the trace
/// overlap) is removed. Rejects propagators that are not unitary.
pub fn infidelity(u: &CMat3, target: &GateTarget, align: Alignment) -> Result<f64, Error> {
    let defect = u.unitarity_error();
    if !(defect <= 1e-6) {
        return Err(Error::NonUnitaryInput(defect));
    }
    let q = qubit_block(u);
    let t = &target.qubit_matrix;
    match align {
        Alignment::None => Ok(q.frobenius_dist(t)),
        Alignment::GlobalPhase => {
            let mut s = C64::ZERO;
            for i in 0..2 {
                for j in 0..2 {
                    s += t.0[i][j].conj() * q.0[i][j];
                }
            }
            let n = s.norm();
            if n == 0.0 {
                return Ok(q.frobenius_dist(t));
            }
            Ok(q.frobenius_dist(&t.scale(s / n)))
        }
    }
}

/// Closed-form error law 2 sin^{2N}(pi eps / 2) of the 2N-pair broadband
/// sequences, valid for any coupling ratio.
pub fn analytic_infidelity(n: u32, eps: f64) -> Result<f64, Error> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::InvalidN(n));
    }
    let s = (0.5 * PI * eps).sin();
    Ok(2.0 * s.powi(2 * n as i32))
}

/// Which propagator backend a sweep uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Engine {
    Analytic,
    Oracle(IntegratorConfig),
}

impl Engine {
    pub fn describe(&self) -> String {
        match self {
            Engine::Analytic => String::from("analytic"),
            Engine::Oracle(cfg) => format!("oracle-rk4-{}", cfg.steps_per_pulse),
        }
    }
}

/// Evaluates one (epsilon, delta t) point with the chosen engine.
pub fn propagate_with(
    seq: &CompositeSequence,
    em: &ErrorModel,
    engine: &Engine,
) -> Result<CMat3, Error> {
    match engine {
        Engine::Analytic => sequence_propagator(seq, em),
        Engine::Oracle(cfg) => oracle::integrate(seq, em, cfg),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub epsilon: f64,
    pub delta_t: f64,
    pub infidelity: f64,
}

/// Sweep output: rows sorted by epsilon, then by delta t, plus enough
/// metadata to label a plot.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub label: String,
    pub scheme: &'static str,
    pub shape: String,
    pub alignment: &'static str,
    pub engine: String,
    pub rows: Vec<SweepRow>,
}

fn sorted_finite(grid: &[f64]) -> Result<Vec<f64>, Error> {
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidConfig("sweep grids must be finite"));
    }
    let mut g = grid.to_vec();
    g.sort_by(|a, b| a.partial_cmp(b).expect("finite values compare"));
    Ok(g)
}

/// Evaluates D on the epsilon x delta-t grid. The detuning grid is given as
/// the dimensionless product delta * T; an empty detuning grid means
/// resonance. Grid points are evaluated in deterministic (sorted) order.
pub fn sweep(
    seq: &CompositeSequence,
    target: &GateTarget,
    align: Alignment,
    eps_grid: &[f64],
    delta_t_grid: &[f64],
    engine: &Engine,
) -> Result<SweepResult, Error> {
    if eps_grid.is_empty() {
        return Err(Error::InvalidConfig("epsilon grid is empty"));
    }
    let eps = sorted_finite(eps_grid)?;
    let dts = if delta_t_grid.is_empty() { vec![0.0] } else { sorted_finite(delta_t_grid)? };

    let duration = match seq.uniform_shape() {
        Some(s) => s.duration,
        None if dts.iter().all(|&d| d == 0.0) => 1.0,
        None => {
            return Err(Error::InvalidConfig(
                "detuning sweeps need a uniform pulse duration",
            ))
        }
    };

    let shape = match seq.uniform_shape() {
        Some(s) => format!("{:?}", s.kind).to_lowercase(),
        None => String::from("mixed"),
    };

    let mut rows = Vec::with_capacity(eps.len() * dts.len());
    for &e in &eps {
        for &dt in &dts {
            let em = ErrorModel::new(e, dt / duration)?;
            let u = propagate_with(seq, &em, engine)?;
            let d = infidelity(&u, target, align)?;
            rows.push(SweepRow { epsilon: e, delta_t: dt, infidelity: d });
        }
    }
    Ok(SweepResult {
        label: seq.label.clone(),
        scheme: seq.scheme.as_str(),
        shape,
        alignment: align.as_str(),
        engine: engine.describe(),
        rows,
    })
}

/// Least-squares slope of log D versus log epsilon, probed on a log-spaced
/// grid and restricted to points where D is large enough to be clean of
/// roundoff (1e-12) and small enough to sit in the power-law regime (1e-4).
/// High-order sequences push that window to larger epsilon, so the probe
/// range is wide and the window is selected adaptively.
pub fn robustness_order(
    seq: &CompositeSequence,
    target: &GateTarget,
    align: Alignment,
) -> Result<f64, Error> {
    let (lo, hi, n) = (1e-5_f64, 0.32_f64, 160_usize);
    let (la, lb) = (lo.ln(), hi.ln());
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for i in 0..n {
        let eps = (la + (lb - la) * i as f64 / (n - 1) as f64).exp();
        let u = sequence_propagator(seq, &ErrorModel::new(eps, 0.0)?)?;
        let d = infidelity(&u, target, align)?;
        if (1e-12..=1e-4).contains(&d) {
            pts.push((eps.ln(), d.ln()));
        }
    }
    if pts.len() < 6 {
        return Err(Error::DegenerateCurve);
    }
    let m = pts.len() as f64;
    let xbar = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let ybar = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in &pts {
        num += (x - xbar) * (y - ybar);
        den += (x - xbar) * (x - xbar);
    }
    Ok(num / den)
}

/// Largest epsilon below which D stays under the threshold: coarse forward
/// scan to bracket the first crossing, then bisection. Uses the closed-form
/// propagator path.
pub fn half_width_below(
    seq: &CompositeSequence,
    target: &GateTarget,
    align: Alignment,
    threshold: f64,
) -> Result<f64, Error> {
    let d_at = |eps: f64| -> Result<f64, Error> {
        let u = sequence_propagator(seq, &ErrorModel::new(eps, 0.0)?)?;
        infidelity(&u, target, align)
    };
    let n = 512;
    let mut prev = 0.0_f64;
    let mut bracket = None;
    for i in 1..=n {
        let eps = i as f64 / n as f64;
        if d_at(eps)? > threshold {
            bracket = Some((prev, eps));
            break;
        }
        prev = eps;
    }
    let (mut a, mut b) = bracket.ok_or(Error::DegenerateCurve)?;
    for _ in 0..80 {
        let mid = 0.5 * (a + b);
        if d_at(mid)? > threshold {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(0.5 * (a + b))
}
