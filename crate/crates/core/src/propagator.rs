//! Closed-form propagators: two-state Cayley-Klein parameters, the lift of
//! a two-state solution to the full three-state propagator for both coupling
//! schemes, and composition over whole sequences.
//!
//! Basis convention throughout: index 0 and 1 are the ground (qubit) states,
//! index 2 is the excited state.

use num_complex::Complex64 as C64;

use crate::error::Error;
use crate::matrix::{CMat2, CMat3};
use crate::oracle;
use crate::pulse::{CompositeSequence, ErrorModel, PulsePair, Scheme, ShapeKind};
// Supplies f64 math in no_std builds; unused whenever a dev-dependency pulls
// std into the graph and the inherent methods shadow the trait.
#[allow(unused_imports)]
use num_traits::Float;

const SQRT_2: f64 = core::f64::consts::SQRT_2;

/// Cayley-Klein parameters of a two-state propagator [[a, b], [-b*, a*]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CkParams {
    pub a: C64,
    pub b: C64,
}

impl CkParams {
    pub fn new(a: C64, b: C64) -> Self {
        Self { a, b }
    }

    pub fn identity() -> Self {
        Self { a: C64::new(1.0, 0.0), b: C64::new(0.0, 0.0) }
    }

    /// Deviation of |a|^2 + |b|^2 from 1.
    pub fn unimodularity_defect(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() - 1.0).abs()
    }

    /// The 2x2 matrix [[a, b e^{i phi}], [-b* e^{-i phi}, a*]].
    pub fn matrix(&self, phi: f64) -> CMat2 {
        let e = C64::from_polar(1.0, phi);
        CMat2::from_rows([
            [self.a, self.b * e],
            [-self.b.conj() * e.conj(), self.a.conj()],
        ])
    }
}

/// Resonant pulse of (signed) area A: a = cos(A/2), b = -i sin(A/2). Exact
/// for any envelope, since on resonance only the enclosed area matters.
pub fn ck_resonant(area: f64) -> CkParams {
    let half = 0.5 * area;
    CkParams::new(C64::new(half.cos(), 0.0), C64::new(0.0, -half.sin()))
}

/// Constant-envelope pulse of area A with a constant detuning: solves the
/// two-state block [[0, Omega/2], [Omega/2, Delta]] with Omega = A/T over
/// duration T, written as e^{-i delta} [[a, b], [-b*, a*]] with the phase
/// delta = Delta T / 2 split off. Returns (ck, delta).
///
/// With zero coupling this yields a = e^{+i delta}, which the lift needs to
/// leave the ground states untouched when only the excited state is shifted.
pub fn ck_detuned_const(area: f64, delta: f64, duration: f64) -> Result<(CkParams, f64), Error> {
    if !(duration > 0.0) {
        return Err(Error::InvalidConfig("pulse duration must be positive"));
    }
    let omega = area / duration;
    let root = (omega * omega + delta * delta).sqrt();
    let delta_phase = 0.5 * delta * duration;
    if root == 0.0 {
        return Ok((CkParams::identity(), 0.0));
    }
    let half = 0.5 * root * duration;
    let (s, c) = (half.sin(), half.cos());
    let a = C64::new(c, delta / root * s);
    let b = C64::new(0.0, -omega / root * s);
    Ok((CkParams::new(a, b), delta_phase))
}

/// Folds a first-to-last list of (ck, phase, delta) factors into one total
/// (ck, delta); the per-factor phases are absorbed into the returned b.
pub fn compose_ck(factors: &[(CkParams, f64, f64)]) -> (CkParams, f64) {
    let mut a = C64::new(1.0, 0.0);
    let mut b = C64::new(0.0, 0.0);
    let mut total_delta = 0.0;
    for (ck, phi, dp) in factors {
        let e = C64::from_polar(1.0, *phi);
        let (ak, bk) = (ck.a, ck.b * e);
        let a_new = ak * a - bk * b.conj();
        let b_new = ak * b + bk * a.conj();
        a = a_new;
        b = b_new;
        total_delta += dp;
    }
    (CkParams::new(a, b), total_delta)
}

/// Lifts a two-state solution to the three-state propagator of a pair with
/// couplings (xi0, xi1) sharing phase phi, for the scheme with the detuning
/// on the excited state. The dark combination of ground states is left
/// invariant by construction.
pub fn ms_lift(xi0: f64, xi1: f64, phi: f64, ck: &CkParams, delta_phase: f64) -> Result<CMat3, Error> {
    let xi2 = xi0 * xi0 + xi1 * xi1;
    if xi2 == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    let xi = xi2.sqrt();
    let (a, b) = (ck.a, ck.b);
    let eid = C64::from_polar(1.0, delta_phase);
    let pref = C64::from_polar(1.0, -delta_phase) / xi2;
    let eiphi = C64::from_polar(1.0, phi);
    let bc = b.conj() * eiphi.conj();
    let u = CMat3::from_rows([
        [
            a * xi0 * xi0 + eid * xi1 * xi1,
            (a - eid) * xi0 * xi1,
            b * eiphi * xi0 * xi,
        ],
        [
            (a - eid) * xi0 * xi1,
            eid * xi0 * xi0 + a * xi1 * xi1,
            b * eiphi * xi1 * xi,
        ],
        [-bc * xi0 * xi, -bc * xi1 * xi, a.conj() * C64::new(xi2, 0.0)],
    ]);
    Ok(u.scale(pref))
}

/// Lifts a two-state solution to three states for the counter-phased scheme,
/// where the system behaves as a spin 1 driven by the equivalent spin-1/2
/// field. The qubit states sit at the poles, the excited state in between.
pub fn majorana_lift(ck: &CkParams, phi: f64) -> CMat3 {
    let (a, b) = (ck.a, ck.b);
    let e = C64::from_polar(1.0, phi);
    let e2 = e * e;
    let r2 = C64::new(SQRT_2, 0.0);
    let mid = C64::new(a.norm_sqr() - b.norm_sqr(), 0.0);
    CMat3::from_rows([
        [a * a, b * b * e2, r2 * a * b * e],
        [
            b.conj() * b.conj() * e2.conj(),
            a.conj() * a.conj(),
            -r2 * a.conj() * b.conj() * e.conj(),
        ],
        [
            -r2 * a * b.conj() * e.conj(),
            r2 * a.conj() * b * e,
            mid,
        ],
    ])
}

fn check_pair(pair: &PulsePair, scheme: Scheme) -> Result<(), Error> {
    const TOL: f64 = 1e-12;
    match scheme {
        Scheme::Ms => {
            if (pair.phase0 - pair.phase1).abs() > TOL {
                return Err(Error::SchemeViolation("ms pairs need equal leg phases"));
            }
        }
        Scheme::Majorana | Scheme::Adiabatic => {
            if (pair.area0 - pair.area1).abs() > TOL * (1.0 + pair.area0.abs()) {
                return Err(Error::SchemeViolation("counter-phased pairs need equal leg areas"));
            }
            if (pair.phase0 + pair.phase1).abs() > TOL {
                return Err(Error::SchemeViolation("counter-phased pairs need opposite leg phases"));
            }
        }
    }
    if pair.area0 == 0.0 && pair.area1 == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    Ok(())
}

/// Closed-form propagator of one pair under the given scheme and detuning.
/// Detuned propagation is only available for rectangular envelopes, where
/// the Hamiltonian is constant; shaped detuned pulses belong to the
/// numerical integrator.
pub fn pair_propagator(pair: &PulsePair, scheme: Scheme, delta: f64) -> Result<CMat3, Error> {
    check_pair(pair, scheme)?;
    let detuned = delta != 0.0;
    if detuned && pair.shape.kind != ShapeKind::Rectangular && scheme != Scheme::Adiabatic {
        return Err(Error::EngineMismatch);
    }
    match scheme {
        Scheme::Ms => {
            let rms = pair.rms_area();
            let (xi0, xi1) = (pair.area0 / rms, pair.area1 / rms);
            let (ck, dp) = if detuned {
                ck_detuned_const(rms, delta, pair.shape.duration)?
            } else {
                (ck_resonant(rms), 0.0)
            };
            ms_lift(xi0, xi1, pair.phase0, &ck, dp)
        }
        Scheme::Majorana => {
            let eff_area = pair.area0 / SQRT_2;
            let ck = if detuned {
                ck_detuned_const(eff_area, delta, pair.shape.duration)?.0
            } else {
                ck_resonant(eff_area)
            };
            Ok(majorana_lift(&ck, pair.phase0))
        }
        Scheme::Adiabatic => {
            if pair.shape.kind != ShapeKind::Rectangular {
                return Err(Error::EngineMismatch);
            }
            let h = oracle::hamiltonian_ms(0.5 * pair.shape.duration, pair, delta);
            h.expm_skew_hermitian(pair.shape.duration)
        }
    }
}

/// Time-ordered product of per-pair propagators for the whole sequence,
/// with the area error applied first. The first pair acts first, so it sits
/// rightmost in the matrix product.
pub fn sequence_propagator(seq: &CompositeSequence, em: &ErrorModel) -> Result<CMat3, Error> {
    let scaled = seq.apply_error(em)?;
    let mut u = CMat3::identity();
    for pair in &scaled.pairs {
        u = pair_propagator(pair, scaled.scheme, em.delta)? * u;
    }
    Ok(u)
}
