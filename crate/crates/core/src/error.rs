use core::fmt;

use alloc::string::String;

/// Failure modes surfaced by construction, propagation, and analysis routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A matrix handed to the exponential was not Hermitian.
    NonHermitianInput,
    /// Both couplings of a pulse pair are zero.
    ZeroCoupling,
    /// Pulse-area error factor 1 + epsilon must stay positive.
    InvalidEpsilon(f64),
    /// A pair violates the phase/area constraints of its scheme.
    SchemeViolation(&'static str),
    /// Composite order must be an odd positive integer (and fixed to 5 for
    /// the universal and BB1 constructions).
    InvalidN(u32),
    /// Rotation or BB1 angle outside the supported range.
    InvalidTheta(f64),
    /// Infidelity is only defined for unitary propagators; carries the
    /// Frobenius defect of U†U - I.
    NonUnitaryInput(f64),
    /// The analytic engine cannot propagate shaped pulses off resonance.
    EngineMismatch,
    /// The infidelity curve is flat below the noise floor; no slope to fit.
    DegenerateCurve,
    /// Adiabatic elimination needs a nonzero detuning.
    ZeroDetuning,
    /// Step-halving changed the integrated propagator by more than the
    /// convergence bound; carries the observed deviation.
    NonConvergence(f64),
    /// An integrator or sweep configuration field is out of range.
    InvalidConfig(&'static str),
    /// No catalog entry with this label.
    UnknownLabel(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonHermitianInput => write!(f, "input matrix is not Hermitian"),
            Error::ZeroCoupling => write!(f, "pulse pair has zero coupling on both legs"),
            Error::InvalidEpsilon(e) => {
                write!(f, "pulse-area error {e} leaves no positive area (need epsilon > -1)")
            }
            Error::SchemeViolation(why) => write!(f, "scheme constraint violated: {why}"),
            Error::InvalidN(n) => write!(f, "invalid composite order N = {n}"),
            Error::InvalidTheta(t) => write!(f, "angle {t} outside the supported range"),
            Error::NonUnitaryInput(d) => {
                write!(f, "propagator is not unitary (defect {d:.3e})")
            }
            Error::EngineMismatch => {
                write!(f, "analytic engine does not cover shaped pulses off resonance")
            }
            Error::DegenerateCurve => {
                write!(f, "infidelity curve sits below the noise floor; cannot fit a slope")
            }
            Error::ZeroDetuning => write!(f, "adiabatic elimination requires nonzero detuning"),
            Error::NonConvergence(d) => {
                write!(f, "integrator not converged: step-halving moved entries by {d:.3e}")
            }
            Error::InvalidConfig(why) => write!(f, "invalid configuration: {why}"),
            Error::UnknownLabel(l) => write!(f, "unknown sequence label '{l}'"),
        }
    }
}

impl core::error::Error for Error {}
