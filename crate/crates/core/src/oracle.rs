//! Brute-force time-domain integration of the three-state Schrodinger
//! equation. This is the ground truth the closed-form propagators are
//! checked against, and the only path for shaped pulses off resonance.

use num_complex::Complex64 as C64;

use crate::error::Error;
use crate::matrix::CMat3;
use crate::pulse::{CompositeSequence, ErrorModel, PulsePair, Scheme, ShapeKind};
// Supplies f64 math in no_std builds; unused whenever a dev-dependency pulls
// std into the graph and the inherent methods shadow the trait.
#[allow(unused_imports)]
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Rk4,
    Midpoint,
}

/// Fixed-step integrator settings. The step count is per pulse pair, so the
/// local truncation error scales with each pair's Hamiltonian norm alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub steps_per_pulse: u32,
    pub method: Method,
    /// Project the running propagator back onto the unitary group every
    /// `renorm_interval` steps.
    pub renormalize: bool,
    pub renorm_interval: u32,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self { steps_per_pulse: 4000, method: Method::Rk4, renormalize: false, renorm_interval: 100 }
    }
}

impl IntegratorConfig {
    pub fn with_steps(steps_per_pulse: u32) -> Self {
        Self { steps_per_pulse, ..Self::default() }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.steps_per_pulse < 100 {
            return Err(Error::InvalidConfig("integrator needs at least 100 steps per pulse"));
        }
        if self.renorm_interval == 0 {
            return Err(Error::InvalidConfig("renormalization interval must be positive"));
        }
        Ok(())
    }
}

/// Hamiltonian of one pair with the detuning on the excited state:
/// couplings Omega_k(t)/2 = (A_k / 2 pi) f(t) on the |k> to |2> legs with
/// phases e^{i phi_k}, and Delta on |2><2|. Hermitian by construction.
pub fn hamiltonian_ms(t: f64, pair: &PulsePair, delta: f64) -> CMat3 {
    let f = pair.shape.envelope(t);
    let g0 = C64::from_polar(0.5 * pair.area0 / PI * f, pair.phase0);
    let g1 = C64::from_polar(0.5 * pair.area1 / PI * f, pair.phase1);
    let z = C64::ZERO;
    CMat3::from_rows([
        [z, z, g0],
        [z, z, g1],
        [g0.conj(), g1.conj(), C64::new(delta, 0.0)],
    ])
}

/// Hamiltonian of a counter-phased pair: equal couplings with phases
/// e^{+-i phi} and the detuning split across the ground states as
/// diag(-Delta, +Delta, 0), so <1|H|1> - <0|H|0> = 2 Delta.
pub fn hamiltonian_majorana(t: f64, pair: &PulsePair, delta: f64) -> Result<CMat3, Error> {
    const TOL: f64 = 1e-12;
    if (pair.area0 - pair.area1).abs() > TOL * (1.0 + pair.area0.abs()) {
        return Err(Error::SchemeViolation("counter-phased pairs need equal leg areas"));
    }
    if (pair.phase0 + pair.phase1).abs() > TOL {
        return Err(Error::SchemeViolation("counter-phased pairs need opposite leg phases"));
    }
    Ok(hamiltonian_majorana_unchecked(t, pair, delta))
}

fn hamiltonian_majorana_unchecked(t: f64, pair: &PulsePair, delta: f64) -> CMat3 {
    let f = pair.shape.envelope(t);
    let g = C64::from_polar(0.5 * pair.area0 / PI * f, pair.phase0);
    let z = C64::ZERO;
    CMat3::from_rows([
        [C64::new(-delta, 0.0), z, g],
        [z, C64::new(delta, 0.0), g.conj()],
        [g.conj(), g, z],
    ])
}

fn hamiltonian(scheme: Scheme, t: f64, pair: &PulsePair, delta: f64) -> CMat3 {
    match scheme {
        Scheme::Ms | Scheme::Adiabatic => hamiltonian_ms(t, pair, delta),
        Scheme::Majorana => hamiltonian_majorana_unchecked(t, pair, delta),
    }
}

fn cscale(m: &CMat3, f: f64) -> CMat3 {
    m.scale(C64::new(f, 0.0))
}

/// One-step transfer matrix for a constant Hamiltonian: the degree-4
/// (classic RK4) or degree-2 (midpoint) Taylor polynomial of exp(-i H h).
fn constant_step_matrix(h_mat: &CMat3, h: f64, method: Method) -> CMat3 {
    let x = h_mat.scale(C64::new(0.0, -h));
    let x2 = x * x;
    let quad = CMat3::identity() + x + cscale(&x2, 0.5);
    match method {
        Method::Midpoint => quad,
        Method::Rk4 => {
            let x3 = x2 * x;
            let x4 = x3 * x;
            quad + cscale(&x3, 1.0 / 6.0) + cscale(&x4, 1.0 / 24.0)
        }
    }
}

/// Propagates i dU/dt = H(t) U across the whole sequence, pairs back to
/// back, starting from the identity. Pure fixed-step integration; the only
/// concession to speed is that a constant Hamiltonian (rectangular shape)
/// reuses its one-step transfer matrix, which leaves the arithmetic of the
/// method unchanged.
pub fn integrate(seq: &CompositeSequence, em: &ErrorModel, cfg: &IntegratorConfig) -> Result<CMat3, Error> {
    cfg.validate()?;
    if seq.scheme == Scheme::Majorana {
        for pair in &seq.pairs {
            hamiltonian_majorana(0.0, pair, em.delta)?;
        }
    }
    let scaled = seq.apply_error(em)?;
    let n = cfg.steps_per_pulse as usize;
    let mut u = CMat3::identity();
    let mut since_renorm = 0_u32;

    for pair in &scaled.pairs {
        let duration = pair.shape.duration;
        let h = duration / n as f64;
        let constant = pair.shape.kind == ShapeKind::Rectangular;
        let step_const = if constant {
            let hm = hamiltonian(scaled.scheme, 0.5 * duration, pair, em.delta);
            Some(constant_step_matrix(&hm, h, cfg.method))
        } else {
            None
        };

        for i in 0..n {
            if let Some(p) = &step_const {
                u = *p * u;
            } else {
                let t = i as f64 * h;
                u = match cfg.method {
                    Method::Rk4 => {
                        let a1 = hamiltonian(scaled.scheme, t, pair, em.delta).scale(C64::new(0.0, -1.0));
                        let a2 = hamiltonian(scaled.scheme, t + 0.5 * h, pair, em.delta)
                            .scale(C64::new(0.0, -1.0));
                        let a4 = hamiltonian(scaled.scheme, t + h, pair, em.delta)
                            .scale(C64::new(0.0, -1.0));
                        let k1 = a1 * u;
                        let k2 = a2 * (u + cscale(&k1, 0.5 * h));
                        let k3 = a2 * (u + cscale(&k2, 0.5 * h));
                        let k4 = a4 * (u + cscale(&k3, h));
                        u + cscale(&(k1 + cscale(&(k2 + k3), 2.0) + k4), h / 6.0)
                    }
                    Method::Midpoint => {
                        let a1 = hamiltonian(scaled.scheme, t, pair, em.delta).scale(C64::new(0.0, -1.0));
                        let a2 = hamiltonian(scaled.scheme, t + 0.5 * h, pair, em.delta)
                            .scale(C64::new(0.0, -1.0));
                        let k1 = a1 * u;
                        let k2 = a2 * (u + cscale(&k1, 0.5 * h));
                        u + cscale(&k2, h)
                    }
                };
            }
            since_renorm += 1;
            if cfg.renormalize && since_renorm >= cfg.renorm_interval {
                u = u.polar_unitary();
                since_renorm = 0;
            }
        }
    }
    Ok(u)
}

/// Runs the integrator at the configured resolution and at double the step
/// count, and rejects the result when the two disagree by more than 1e-6 in
/// any entry. Returns the finer propagator with the observed difference.
pub fn integrate_checked(
    seq: &CompositeSequence,
    em: &ErrorModel,
    cfg: &IntegratorConfig,
) -> Result<(CMat3, f64), Error> {
    let coarse = integrate(seq, em, cfg)?;
    let fine_cfg = IntegratorConfig { steps_per_pulse: cfg.steps_per_pulse * 2, ..*cfg };
    let fine = integrate(seq, em, &fine_cfg)?;
    if !all_finite(&coarse) || !all_finite(&fine) {
        return Err(Error::NonConvergence(f64::INFINITY));
    }
    let diff = fine.max_abs_diff(&coarse);
    if diff > 1e-6 {
        return Err(Error::NonConvergence(diff));
    }
    Ok((fine, diff))
}

fn all_finite(m: &CMat3) -> bool {
    m.0.iter().all(|row| row.iter().all(|e| e.re.is_finite() && e.im.is_finite()))
}

/// Step count that keeps the fourth-order truncation error of a sequence
/// comfortably below 1e-8, scaling the base count with the largest phase
/// (detuning plus peak Rabi frequency, times duration) of any pair. For the
/// catalog's ordinary pulses this returns `base` unchanged; far-detuned
/// large-area pulses get proportionally more steps.
pub fn suggested_steps(seq: &CompositeSequence, em: &ErrorModel, base: u32) -> u32 {
    let amp = 1.0 + em.epsilon.abs();
    let mut factor = 1.0_f64;
    for pair in &seq.pairs {
        let t = pair.shape.duration;
        let peak = pair.shape.envelope(0.5 * t);
        let omega = pair.rms_area().abs() * amp / PI * peak;
        let phase = em.delta.abs() * t + omega * t;
        factor = factor.max(phase / (4.0 * PI));
    }
    let steps = (base as f64 * factor).ceil();
    if steps >= u32::MAX as f64 {
        u32::MAX
    } else {
        (steps as u32).max(base)
    }
}

/// Second-order reduction of a far-detuned pair to an effective two-state
/// system on the qubit: coupling -Omega0 Omega1 / (2 Delta) carrying phase
/// phi0 - phi1, and light shifts -Omega_k^2 / (4 Delta) on the two states.
/// Rabi frequencies are taken as area over duration (constant envelope).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveTwoState {
    pub omega_eff: f64,
    pub phase: f64,
    pub stark0: f64,
    pub stark1: f64,
}

pub fn adiabatic_effective(pair: &PulsePair, delta: f64) -> Result<EffectiveTwoState, Error> {
    if delta == 0.0 {
        return Err(Error::ZeroDetuning);
    }
    let t = pair.shape.duration;
    let w0 = pair.area0 / t;
    let w1 = pair.area1 / t;
    Ok(EffectiveTwoState {
        omega_eff: -(w0 * w1) / (2.0 * delta),
        phase: pair.phase0 - pair.phase1,
        stark0: -(w0 * w0) / (4.0 * delta),
        stark1: -(w1 * w1) / (4.0 * delta),
    })
}
