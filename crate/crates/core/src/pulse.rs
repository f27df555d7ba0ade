//! Pulse shapes, two-leg pulse pairs, composite sequences, and the
//! systematic-error model they are propagated under.
//!
//! A pulse pair drives both legs of the lambda system simultaneously with a
//! shared envelope f(t) normalized to integrate to pi over its duration.
//! Leg k then carries Rabi frequency (A_k / pi) f(t), so its signed area is
//! exactly A_k.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
// Supplies f64 math in no_std builds; unused whenever a dev-dependency pulls
// std into the graph and the inherent methods shadow the trait.
#[allow(unused_imports)]
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;

/// Envelope family. Gaussian envelopes are truncated to [0, T] and
/// renormalized, so both kinds enclose the same area.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShapeKind {
    Rectangular,
    Gaussian,
}

/// A normalized envelope: integral of f over [0, duration] equals pi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseShape {
    pub kind: ShapeKind,
    pub duration: f64,
    /// Standard deviation of the Gaussian; unused for rectangular pulses.
    pub width: f64,
    amplitude: f64,
}

impl PulseShape {
    pub fn rectangular(duration: f64) -> Result<Self, Error> {
        if !(duration > 0.0) {
            return Err(Error::InvalidConfig("pulse duration must be positive"));
        }
        Ok(Self { kind: ShapeKind::Rectangular, duration, width: 0.0, amplitude: PI / duration })
    }

    /// Gaussian with the default width of 0.2 T.
    pub fn gaussian(duration: f64) -> Result<Self, Error> {
        Self::gaussian_with_width(duration, 0.2 * duration)
    }

    pub fn gaussian_with_width(duration: f64, width: f64) -> Result<Self, Error> {
        if !(duration > 0.0) {
            return Err(Error::InvalidConfig("pulse duration must be positive"));
        }
        if !(width > 0.0) {
            return Err(Error::InvalidConfig("gaussian width must be positive"));
        }
        let mut s = Self { kind: ShapeKind::Gaussian, duration, width, amplitude: 1.0 };
        s = s.normalize();
        Ok(s)
    }

    /// Rescales the amplitude so the enclosed area is pi. Idempotent: the
    /// amplitude is recomputed from scratch, so a second call is a no-op.
    pub fn normalize(&self) -> Self {
        let mut s = *self;
        s.amplitude = 1.0;
        let area = s.raw_integral();
        s.amplitude = PI / area;
        s
    }

    /// Envelope value at time t within [0, duration]; zero outside.
    pub fn envelope(&self, t: f64) -> f64 {
        if t < 0.0 || t > self.duration {
            return 0.0;
        }
        match self.kind {
            ShapeKind::Rectangular => self.amplitude,
            ShapeKind::Gaussian => {
                let x = (t - 0.5 * self.duration) / self.width;
                self.amplitude * (-0.5 * x * x).exp()
            }
        }
    }

    /// Integral of the envelope over [0, duration]. Closed form for the
    /// rectangle; composite Simpson for the Gaussian, accurate to ~1e-14
    /// relative, well inside the 1e-12 normalization budget.
    fn raw_integral(&self) -> f64 {
        match self.kind {
            ShapeKind::Rectangular => self.amplitude * self.duration,
            ShapeKind::Gaussian => {
                let n = 4096_usize;
                let h = self.duration / n as f64;
                let mut s = self.envelope(0.0) + self.envelope(self.duration);
                for i in 1..n {
                    let w = if i % 2 == 1 { 4.0 } else { 2.0 };
                    s += w * self.envelope(i as f64 * h);
                }
                s * h / 3.0
            }
        }
    }

    pub fn integral(&self) -> f64 {
        self.raw_integral()
    }
}

/// Coupling scheme of a sequence. It fixes both the phase constraints on
/// each pair and where a detuning enters the Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Equal phases on both legs; detuning sits on the excited state. The
    /// dynamics reduce to a dark state plus a driven bright pair.
    Ms,
    /// Opposite phases and equal areas; detuning splits the ground states
    /// symmetrically. The three levels form a spin-1 ladder driven through
    /// an equivalent spin-1/2 problem.
    Majorana,
    /// Opposite phases and equal areas like Majorana, but with the detuning
    /// on the excited state, far off resonance. Used for gates that operate
    /// through adiabatic elimination of the excited state.
    Adiabatic,
}

impl Scheme {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scheme::Ms => "ms",
            Scheme::Majorana => "majorana",
            Scheme::Adiabatic => "adiabatic",
        }
    }
}

/// One simultaneous pair of pulses on the two legs of the lambda system,
/// with signed areas (sign = pi phase flip) and per-leg phases in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulsePair {
    pub area0: f64,
    pub area1: f64,
    pub phase0: f64,
    pub phase1: f64,
    pub shape: PulseShape,
}

impl PulsePair {
    pub fn new(area0: f64, area1: f64, phase0: f64, phase1: f64, shape: PulseShape) -> Self {
        Self { area0, area1, phase0, phase1, shape }
    }

    /// Builds the pair from dimensionless couplings (xi0, xi1) and a common
    /// phase: leg areas are xi_k * pi.
    pub fn from_couplings(xi0: f64, xi1: f64, phi: f64, shape: PulseShape) -> Result<Self, Error> {
        if xi0 == 0.0 && xi1 == 0.0 {
            return Err(Error::ZeroCoupling);
        }
        Ok(Self::new(xi0 * PI, xi1 * PI, phi, phi, shape))
    }

    /// Root-mean-square area sqrt(A0^2 + A1^2); the area seen by the driven
    /// bright state in the equal-phase scheme.
    pub fn rms_area(&self) -> f64 {
        (self.area0 * self.area0 + self.area1 * self.area1).sqrt()
    }

    /// Phase delta = Delta * T / 2 accumulated by a constant detuning over
    /// this pair's duration.
    pub fn delta_phase(&self, delta: f64) -> f64 {
        0.5 * delta * self.shape.duration
    }

    fn scaled(&self, factor: f64) -> Self {
        let mut p = *self;
        p.area0 *= factor;
        p.area1 *= factor;
        p
    }
}

/// Systematic errors applied at propagation time: a relative pulse-area
/// error epsilon (areas scale by 1 + epsilon) and a detuning Delta in rad
/// per unit time, placed in the Hamiltonian according to the scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorModel {
    pub epsilon: f64,
    pub delta: f64,
}

impl ErrorModel {
    pub fn new(epsilon: f64, delta: f64) -> Result<Self, Error> {
        if !(epsilon > -1.0) || !epsilon.is_finite() {
            return Err(Error::InvalidEpsilon(epsilon));
        }
        Ok(Self { epsilon, delta })
    }

    pub fn ideal() -> Self {
        Self { epsilon: 0.0, delta: 0.0 }
    }
}

impl Default for ErrorModel {
    fn default() -> Self {
        Self::ideal()
    }
}

/// An ordered list of pulse pairs applied first to last, all under one
/// coupling scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeSequence {
    pub label: String,
    pub scheme: Scheme,
    pub pairs: Vec<PulsePair>,
}

const PHASE_TOL: f64 = 1e-12;

impl CompositeSequence {
    pub fn new(
        label: impl Into<String>,
        scheme: Scheme,
        pairs: Vec<PulsePair>,
    ) -> Result<Self, Error> {
        if pairs.is_empty() {
            return Err(Error::SchemeViolation("sequence has no pairs"));
        }
        for p in &pairs {
            if p.area0 == 0.0 && p.area1 == 0.0 {
                return Err(Error::ZeroCoupling);
            }
            match scheme {
                Scheme::Ms => {
                    if (p.phase0 - p.phase1).abs() > PHASE_TOL {
                        return Err(Error::SchemeViolation("ms pairs need equal leg phases"));
                    }
                }
                Scheme::Majorana | Scheme::Adiabatic => {
                    if (p.area0 - p.area1).abs() > PHASE_TOL * (1.0 + p.area0.abs()) {
                        return Err(Error::SchemeViolation(
                            "counter-phased pairs need equal leg areas",
                        ));
                    }
                    if (p.phase0 + p.phase1).abs() > PHASE_TOL {
                        return Err(Error::SchemeViolation(
                            "counter-phased pairs need opposite leg phases",
                        ));
                    }
                }
            }
        }
        Ok(Self { label: label.into(), scheme, pairs })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Sum of per-pair RMS areas at epsilon = 0.
    pub fn total_rms_area(&self) -> f64 {
        self.pairs.iter().map(|p| p.rms_area()).sum()
    }

    /// Scales every leg area by 1 + epsilon; the label records the error.
    /// Composing two applications equals one application of the combined
    /// factor, since the scaling is a plain multiplication.
    pub fn apply_error(&self, em: &ErrorModel) -> Result<Self, Error> {
        let em = ErrorModel::new(em.epsilon, em.delta)?;
        let factor = 1.0 + em.epsilon;
        let pairs = self.pairs.iter().map(|p| p.scaled(factor)).collect();
        Ok(Self {
            label: format!("{} [eps={}]", self.label, em.epsilon),
            scheme: self.scheme,
            pairs,
        })
    }

    /// Common shape of all pairs, if they share one.
    pub fn uniform_shape(&self) -> Option<PulseShape> {
        let first = self.pairs.first()?.shape;
        if self.pairs.iter().all(|p| p.shape == first) {
            Some(first)
        } else {
            None
        }
    }
}
