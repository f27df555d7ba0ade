//! Named composite sequences built from their analytic phase formulas, plus
//! the label resolver used by the command-line tool.
//!
//! Phase lists are produced from integer arithmetic reduced mod 2N before
//! the single multiplication by pi/N, so palindromic symmetry holds exactly
//! in floating point even for long sequences.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::analysis::{Alignment, GateTarget};
use crate::error::Error;
use crate::pulse::{CompositeSequence, PulsePair, PulseShape, Scheme};
// Supplies f64 math in no_std builds; unused whenever a dev-dependency pulls
// std into the graph and the inherent methods shadow the trait.
#[allow(unused_imports)]
use num_traits::Float;

const PI: f64 = core::f64::consts::PI;
const SQRT_2: f64 = core::f64::consts::SQRT_2;
const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// Rabi area of each leg of the adiabatic-regime pairs, in units where the
/// pulse duration is 1.
pub const ADIABATIC_LEG_AREA: f64 = 40.0 * PI;

/// Design detuning (times pulse duration) for the adiabatic-regime entry:
/// twenty times the leg Rabi frequency, giving an effective pi pulse per
/// pair.
pub const ADIABATIC_DESIGN_DELTA: f64 = 800.0 * PI;

fn require_odd(n: u32) -> Result<(), Error> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::InvalidN(n));
    }
    Ok(())
}

/// Broadband phases phi_k = k(k-1) pi / N, k = 1..N, reduced mod 2 pi.
pub fn bb_phases(n: u32) -> Result<Vec<f64>, Error> {
    require_odd(n)?;
    let m = 2 * n as u64;
    Ok((1..=n as u64)
        .map(|k| (k * (k - 1) % m) as f64 * PI / n as f64)
        .collect())
}

/// Phases of a 2N-pair sequence: the broadband list followed by the same
/// list with a common shift added.
pub fn two_pi_cp(n: u32, shift: f64) -> Result<Vec<f64>, Error> {
    let base = bb_phases(n)?;
    let mut out = base.clone();
    out.extend(base.iter().map(|p| p + shift));
    Ok(out)
}

/// The five-pulse universal phase list (0, 5pi/6, pi/3, 5pi/6, 0).
pub fn universal_cp5() -> Vec<f64> {
    vec![0.0, 5.0 * PI / 6.0, PI / 3.0, 5.0 * PI / 6.0, 0.0]
}

/// BB1 pulse list for a target rotation angle theta, as (nominal area,
/// phase) in time order: four pi pulses at phases (zeta, 3 zeta, 3 zeta,
/// zeta) with zeta = arccos(-theta / 4 pi), then the theta pulse at phase 0.
pub fn bb1(theta: f64) -> Result<Vec<(f64, f64)>, Error> {
    if !(theta > 0.0 && theta <= 2.0 * PI) {
        return Err(Error::InvalidTheta(theta));
    }
    let zeta = (-theta / (4.0 * PI)).acos();
    Ok(vec![
        (PI, zeta),
        (PI, 3.0 * zeta),
        (PI, 3.0 * zeta),
        (PI, zeta),
        (theta, 0.0),
    ])
}

fn ms_sequence(
    label: String,
    xi0: f64,
    xi1: f64,
    phases: &[f64],
) -> Result<CompositeSequence, Error> {
    let shape = PulseShape::rectangular(1.0)?;
    let pairs = phases
        .iter()
        .map(|&p| PulsePair::from_couplings(xi0, xi1, p, shape))
        .collect::<Result<Vec<_>, _>>()?;
    CompositeSequence::new(label, Scheme::Ms, pairs)
}

/// Flavors of the composite X gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum XVariant {
    /// 2N pairs with legs (pi/sqrt2, -pi/sqrt2) and broadband phases.
    Resonant,
    /// Same, with the second half's phases shifted by the dressed-state
    /// phase the detuning accumulates over the whole sequence.
    SmallDetuning(f64),
    /// Ten pairs on the five-pulse universal phases, second half shifted
    /// the same way.
    ModerateDetuning(f64),
    /// Five counter-phased pairs on BB1 phases with legs (pi sqrt2, pi
    /// sqrt2).
    Majorana,
}

pub fn x_gate_sequence(n: u32, variant: XVariant) -> Result<CompositeSequence, Error> {
    match variant {
        XVariant::Resonant => {
            let ph = two_pi_cp(n, 0.0)?;
            ms_sequence(format!("X{}", 2 * n), FRAC_1_SQRT_2, -FRAC_1_SQRT_2, &ph)
        }
        XVariant::SmallDetuning(shift) => {
            let ph = two_pi_cp(n, shift)?;
            ms_sequence(
                format!("X{}-delta", 2 * n),
                FRAC_1_SQRT_2,
                -FRAC_1_SQRT_2,
                &ph,
            )
        }
        XVariant::ModerateDetuning(shift) => {
            if n != 5 {
                return Err(Error::InvalidN(n));
            }
            let mut ph = universal_cp5();
            let shifted: Vec<f64> = ph.iter().map(|p| p + shift).collect();
            ph.extend(shifted);
            ms_sequence(String::from("X10-universal"), FRAC_1_SQRT_2, -FRAC_1_SQRT_2, &ph)
        }
        XVariant::Majorana => {
            if n != 5 {
                return Err(Error::InvalidN(n));
            }
            let shape = PulseShape::rectangular(1.0)?;
            let pairs = bb1(PI)?
                .iter()
                .map(|&(area, phase)| {
                    PulsePair::new(area * SQRT_2, area * SQRT_2, phase, -phase, shape)
                })
                .collect();
            CompositeSequence::new("X5-majorana", Scheme::Majorana, pairs)
        }
    }
}

/// 2N pairs with legs (xi0 pi/2, xi1 pi/2), xi0 = sqrt(2+sqrt2), xi1 =
/// sqrt(2-sqrt2), on broadband phases; realizes the Hadamard up to a global
/// sign.
pub fn hadamard_sequence(n: u32) -> Result<CompositeSequence, Error> {
    let ph = two_pi_cp(n, 0.0)?;
    let xi0 = 0.5 * (2.0 + SQRT_2).sqrt();
    let xi1 = 0.5 * (2.0 - SQRT_2).sqrt();
    ms_sequence(format!("H{}", 2 * n), xi0, xi1, &ph)
}

/// 2N pairs with legs (sin(theta/2) pi, -cos(theta/2) pi) on broadband
/// phases; realizes the reflection-form rotation by theta exactly.
pub fn rotation_sequence(n: u32, theta: f64) -> Result<CompositeSequence, Error> {
    let ph = two_pi_cp(n, 0.0)?;
    ms_sequence(
        format!("ROT-{}-{theta}", 2 * n),
        (0.5 * theta).sin(),
        -(0.5 * theta).cos(),
        &ph,
    )
}

/// 2N counter-phased pairs with legs (pi sqrt2, pi sqrt2) on broadband
/// phases, the second half shifted by eta/4; realizes diag(e^{i eta/2},
/// e^{-i eta/2}) exactly. The shift is a quarter of eta because the
/// counter-phased scheme doubles the composite phase twice: once in the
/// two-half interference and once in the spin-1 lift.
pub fn phase_gate_sequence(n: u32, eta: f64) -> Result<CompositeSequence, Error> {
    let ph = two_pi_cp(n, 0.25 * eta)?;
    let shape = PulseShape::rectangular(1.0)?;
    let pairs = ph
        .iter()
        .map(|&p| PulsePair::new(PI * SQRT_2, PI * SQRT_2, p, -p, shape))
        .collect();
    CompositeSequence::new(format!("F{}", 2 * n), Scheme::Majorana, pairs)
}

/// Five far-detuned pairs on BB1 phases. Each pair drives both legs with
/// area 40 pi; at the design detuning of 20 Rabi frequencies the
/// second-order effective coupling gives a pi rotation per pair. The
/// counter-phased legs carry half of the BB1 phase each, since the
/// effective phase is their difference.
pub fn bb1_adiabatic_x() -> Result<CompositeSequence, Error> {
    let shape = PulseShape::rectangular(1.0)?;
    let pairs = bb1(PI)?
        .iter()
        .map(|&(_, phase)| {
            PulsePair::new(
                ADIABATIC_LEG_AREA,
                ADIABATIC_LEG_AREA,
                0.5 * phase,
                -0.5 * phase,
                shape,
            )
        })
        .collect();
    CompositeSequence::new("X-bb1-adiabatic", Scheme::Adiabatic, pairs)
}

/// Parses an angle written either as a plain number or as a pi literal such
/// as "pi", "2pi", "pi/3", "2pi/3", "-pi/4".
pub fn parse_pi_literal(s: &str) -> Option<f64> {
    let t = s.trim();
    if let Some(idx) = t.find("pi") {
        let coef_s = &t[..idx];
        let rest = &t[idx + 2..];
        let coef = match coef_s {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse::<f64>().ok()?,
        };
        let den = match rest.strip_prefix('/') {
            None if rest.is_empty() => 1.0,
            None => return None,
            Some(d) => d.parse::<f64>().ok()?,
        };
        if den == 0.0 || !den.is_finite() {
            return None;
        }
        Some(coef * PI / den)
    } else {
        t.parse::<f64>().ok().filter(|x| x.is_finite())
    }
}

/// A resolved catalog entry: the sequence, the gate it implements, and the
/// alignment under which it reaches that gate exactly at zero error.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub label: String,
    pub sequence: CompositeSequence,
    pub target: GateTarget,
    pub align: Alignment,
    pub note: &'static str,
}

/// Labels the resolver accepts with no parameters. Rotation gates follow
/// the grammar ROT-<pairs>-<angle>; the listed ROT label is one instance.
pub fn labels() -> Vec<&'static str> {
    vec![
        "X2",
        "X6",
        "X10",
        "X6-delta",
        "X10-universal",
        "X5-majorana",
        "X-bb1-adiabatic",
        "H2",
        "H6",
        "H10",
        "ROT-6-pi/3",
        "F2",
        "F6",
        "F10",
        "T6",
    ]
}

fn make(
    label: &str,
    sequence: CompositeSequence,
    target: GateTarget,
    align: Alignment,
    note: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        label: label.to_string(),
        sequence,
        target,
        align,
        note,
    }
}

/// Resolves a label to a concrete entry. Detuning-compensated entries bake
/// in the dressed-state phase the detuning supplied here accumulates over
/// the whole sequence (pair count times delta T / 2, unit pair duration),
/// so they must be re-resolved when the detuning changes. All catalog
/// shapes are rectangular with unit duration.
pub fn entry(label: &str, delta: f64) -> Result<CatalogEntry, Error> {
    let x = GateTarget::x;
    let h = GateTarget::hadamard;
    match label {
        "X2" => Ok(make(label, x_gate_sequence(1, XVariant::Resonant)?, x(), Alignment::None, "single broadband pair of pairs")),
        "X6" => Ok(make(label, x_gate_sequence(3, XVariant::Resonant)?, x(), Alignment::None, "broadband X, six pairs")),
        "X10" => Ok(make(label, x_gate_sequence(5, XVariant::Resonant)?, x(), Alignment::None, "broadband X, ten pairs")),
        "X6-delta" => Ok(make(label, x_gate_sequence(3, XVariant::SmallDetuning(3.0 * delta))?, x(), Alignment::None, "six pairs, second half phase-shifted against the supplied detuning")),
        "X10-universal" => Ok(make(label, x_gate_sequence(5, XVariant::ModerateDetuning(5.0 * delta))?, x(), Alignment::None, "universal five-pulse phases doubled, detuning-shifted")),
        "X5-majorana" => Ok(make(label, x_gate_sequence(5, XVariant::Majorana)?, x(), Alignment::GlobalPhase, "counter-phased BB1 X, five pairs")),
        "X-bb1-adiabatic" => Ok(make(label, bb1_adiabatic_x()?, x(), Alignment::GlobalPhase, "far-detuned BB1 X; drive at the design detuning of 800 pi / T")),
        "H2" => Ok(make(label, hadamard_sequence(1)?, h(), Alignment::GlobalPhase, "single Hadamard pair of pairs")),
        "H6" => Ok(make(label, hadamard_sequence(3)?, h(), Alignment::GlobalPhase, "broadband Hadamard, six pairs")),
        "H10" => Ok(make(label, hadamard_sequence(5)?, h(), Alignment::GlobalPhase, "broadband Hadamard, ten pairs")),
        "F2" => Ok(make(label, phase_gate_sequence(1, 0.5 * PI)?, GateTarget::phase(0.5 * PI), Alignment::None, "phase gate eta = pi/2, two pairs")),
        "F6" => Ok(make(label, phase_gate_sequence(3, 0.5 * PI)?, GateTarget::phase(0.5 * PI), Alignment::None, "phase gate eta = pi/2, six pairs")),
        "F10" => Ok(make(label, phase_gate_sequence(5, 0.5 * PI)?, GateTarget::phase(0.5 * PI), Alignment::None, "phase gate eta = pi/2, ten pairs")),
        "T6" => Ok(make(label, phase_gate_sequence(3, 0.25 * PI)?.with_label(label), GateTarget::phase(0.25 * PI), Alignment::None, "phase gate eta = pi/4, six pairs")),
        other => {
            if let Some(rest) = other.strip_prefix("ROT-") {
                let mut it = rest.splitn(2, '-');
                let pairs = it
                    .next()
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::UnknownLabel(other.to_string()))?;
                let angle_s = it.next().ok_or_else(|| Error::UnknownLabel(other.to_string()))?;
                let theta = parse_pi_literal(angle_s)
                    .ok_or_else(|| Error::UnknownLabel(other.to_string()))?;
                if pairs == 0 || pairs % 2 != 0 {
                    return Err(Error::InvalidN(pairs));
                }
                let seq = rotation_sequence(pairs / 2, theta)?.with_label(other);
                return Ok(make(
                    other,
                    seq,
                    GateTarget::rotation(theta),
                    Alignment::None,
                    "broadband rotation",
                ));
            }
            Err(Error::UnknownLabel(other.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{infidelity, Alignment};
    use crate::propagator::sequence_propagator;
    use crate::pulse::ErrorModel;

    #[test]
    fn broadband_phase_lists_match_known_values() {
        assert_eq!(bb_phases(1).unwrap(), vec![0.0]);
        assert_eq!(bb_phases(3).unwrap(), vec![0.0, 2.0 * PI / 3.0, 0.0]);
        assert_eq!(
            bb_phases(5).unwrap(),
            vec![0.0, 2.0 * PI / 5.0, 6.0 * PI / 5.0, 2.0 * PI / 5.0, 0.0]
        );
        assert!(matches!(bb_phases(4), Err(Error::InvalidN(4))));
        assert!(matches!(bb_phases(0), Err(Error::InvalidN(0))));
    }

    #[test]
    fn broadband_lists_are_exact_palindromes() {
        let mut n = 1;
        while n <= 25 {
            let ph = bb_phases(n).unwrap();
            for k in 0..ph.len() {
                assert_eq!(ph[k], ph[ph.len() - 1 - k], "n={n} k={k}");
            }
            n += 2;
        }
    }

    #[test]
    fn doubled_list_appends_the_shift() {
        let ph = two_pi_cp(3, 0.7).unwrap();
        assert_eq!(ph.len(), 6);
        assert_eq!(&ph[..3], &bb_phases(3).unwrap()[..]);
        assert_eq!(ph[3], 0.7);
        assert_eq!(ph[4], 2.0 * PI / 3.0 + 0.7);
        assert_eq!(ph[5], 0.7);
        assert_eq!(two_pi_cp(1, 1.25).unwrap(), vec![0.0, 1.25]);
    }

    #[test]
    fn universal_list_is_a_five_phase_palindrome() {
        let u = universal_cp5();
        assert_eq!(u.len(), 5);
        assert_eq!(u[0], 0.0);
        assert_eq!(u[1], 5.0 * PI / 6.0);
        assert_eq!(u[2], PI / 3.0);
        assert_eq!(u[1], u[3]);
        assert_eq!(u[0], u[4]);
    }

    #[test]
    fn bb1_phase_relation() {
        let p = bb1(PI).unwrap();
        let zeta = p[0].1;
        assert!((zeta - 1.8234765819369751).abs() < 1e-15);
        assert!((zeta - (-0.25_f64).acos()).abs() < 1e-16);
        assert_eq!(p[1].1, 3.0 * zeta);
        assert_eq!(p[4], (PI, 0.0));
        assert!(p.iter().take(4).all(|&(a, _)| a == PI));

        let half = bb1(0.5 * PI).unwrap();
        assert!((half[0].1 - (-0.125_f64).acos()).abs() < 1e-16);
        assert_eq!(half[4].0, 0.5 * PI);

        let full = bb1(2.0 * PI).unwrap();
        assert!((full[0].1 - 2.0 * PI / 3.0).abs() < 1e-15);

        assert!(matches!(bb1(0.0), Err(Error::InvalidTheta(_))));
        assert!(matches!(bb1(2.0 * PI + 0.1), Err(Error::InvalidTheta(_))));
        assert!(matches!(bb1(-1.0), Err(Error::InvalidTheta(_))));
    }

    #[test]
    fn resonant_x_layout() {
        let seq = x_gate_sequence(3, XVariant::Resonant).unwrap();
        assert_eq!(seq.label, "X6");
        assert_eq!(seq.pairs.len(), 6);
        for p in &seq.pairs {
            assert_eq!(p.area0, PI * FRAC_1_SQRT_2);
            assert_eq!(p.area1, -PI * FRAC_1_SQRT_2);
            assert_eq!(p.phase0, p.phase1);
        }
        let ph = two_pi_cp(3, 0.0).unwrap();
        for (p, want) in seq.pairs.iter().zip(&ph) {
            assert_eq!(p.phase0, *want);
        }
    }

    #[test]
    fn matched_total_areas_of_the_two_x_constructions() {
        let ms = x_gate_sequence(5, XVariant::Resonant).unwrap();
        let mj = x_gate_sequence(5, XVariant::Majorana).unwrap();
        assert!((ms.total_rms_area() - 10.0 * PI).abs() < 1e-12);
        assert!((mj.total_rms_area() - 10.0 * PI).abs() < 1e-12);
        let leg0 = |s: &CompositeSequence| s.pairs.iter().map(|p| p.area0.abs()).sum::<f64>();
        assert!((leg0(&ms) - 5.0 * SQRT_2 * PI).abs() < 1e-12);
        assert!((leg0(&mj) - 5.0 * SQRT_2 * PI).abs() < 1e-12);
        assert!((leg0(&ms) - leg0(&mj)).abs() < 1e-12);
    }

    #[test]
    fn rotation_legs_match_the_half_angle() {
        let seq = rotation_sequence(3, PI / 3.0).unwrap();
        assert_eq!(seq.pairs.len(), 6);
        let p = &seq.pairs[0];
        assert!((p.area0 - 0.5 * PI).abs() < 1e-15);
        assert!((p.area1 + 0.5 * 3.0_f64.sqrt() * PI).abs() < 1e-14);
        // theta = 0 is the degenerate reflection with one silent leg.
        let flat = rotation_sequence(1, 0.0).unwrap();
        assert_eq!(flat.pairs[0].area0, 0.0);
        assert_eq!(flat.pairs[0].area1, -PI);
    }

    #[test]
    fn phase_gate_layout() {
        let seq = phase_gate_sequence(1, 1.0).unwrap();
        assert_eq!(seq.pairs.len(), 2);
        assert_eq!(seq.pairs[0].phase0, 0.0);
        assert_eq!(seq.pairs[1].phase0, 0.25);
        for p in &seq.pairs {
            assert_eq!(p.area0, PI * SQRT_2);
            assert_eq!(p.area1, p.area0);
            assert_eq!(p.phase1, -p.phase0);
        }
    }

    #[test]
    fn adiabatic_entry_layout() {
        let seq = bb1_adiabatic_x().unwrap();
        assert_eq!(seq.scheme, Scheme::Adiabatic);
        assert_eq!(seq.pairs.len(), 5);
        let zeta = (-0.25_f64).acos();
        assert_eq!(seq.pairs[0].phase0, 0.5 * zeta);
        assert_eq!(seq.pairs[1].phase0, 1.5 * zeta);
        assert_eq!(seq.pairs[4].phase0, 0.0);
        for p in &seq.pairs {
            assert_eq!(p.area0, 40.0 * PI);
            assert_eq!(p.area1, 40.0 * PI);
            assert_eq!(p.phase1, -p.phase0);
        }
        assert!((ADIABATIC_DESIGN_DELTA - 20.0 * ADIABATIC_LEG_AREA).abs() < 1e-12);
    }

    #[test]
    fn pi_literal_grammar() {
        assert_eq!(parse_pi_literal("pi"), Some(PI));
        assert_eq!(parse_pi_literal("2pi"), Some(2.0 * PI));
        assert_eq!(parse_pi_literal("pi/3"), Some(PI / 3.0));
        assert_eq!(parse_pi_literal("2pi/3"), Some(2.0 * PI / 3.0));
        assert_eq!(parse_pi_literal("-pi/4"), Some(-PI / 4.0));
        assert_eq!(parse_pi_literal("0.25"), Some(0.25));
        assert_eq!(parse_pi_literal("3"), Some(3.0));
        assert_eq!(parse_pi_literal(" 1.5pi "), Some(1.5 * PI));
        assert_eq!(parse_pi_literal("pi/0"), None);
        assert_eq!(parse_pi_literal("2pi3"), None);
        assert_eq!(parse_pi_literal("abc"), None);
        assert_eq!(parse_pi_literal(""), None);
    }

    #[test]
    fn every_label_resolves_and_rotation_grammar_works() {
        for label in labels() {
            let e = entry(label, 0.0).unwrap();
            assert_eq!(e.label, label);
            assert!(!e.sequence.pairs.is_empty());
        }
        let rot = entry("ROT-6-pi/3", 0.0).unwrap();
        assert_eq!(rot.sequence.pairs.len(), 6);
        assert!((rot.sequence.pairs[0].area0 - 0.5 * PI).abs() < 1e-15);
        assert!(matches!(entry("ROT-5-pi/3", 0.0), Err(Error::InvalidN(5))));
        assert!(matches!(entry("ROT-6-zzz", 0.0), Err(Error::UnknownLabel(_))));
        assert!(matches!(entry("Y6", 0.0), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn detuning_shift_lands_in_the_second_half() {
        // Six pairs of unit duration accumulate a dressed phase of
        // 6 * delta / 2 = 3 delta; ten pairs accumulate 5 delta.
        let e = entry("X6-delta", 0.4).unwrap();
        let ph: Vec<f64> = e.sequence.pairs.iter().map(|p| p.phase0).collect();
        assert_eq!(&ph[..3], &bb_phases(3).unwrap()[..]);
        assert_eq!(ph[3], 3.0 * 0.4);
        assert_eq!(ph[5], 3.0 * 0.4);
        let u = entry("X10-universal", 0.4).unwrap();
        assert_eq!(u.sequence.pairs[5].phase0, 5.0 * 0.4);
        assert_eq!(u.sequence.pairs[6].phase0, 5.0 * PI / 6.0 + 5.0 * 0.4);
    }

    #[test]
    fn compensated_entries_cancel_the_detuning_they_are_built_for() {
        // The shifted second half realizes the target up to the detuning
        // phase of the whole sequence; the universal phases also correct
        // the detuned pulse distortions, so the ten-pair variant is far
        // more accurate at the same detuning.
        let delta = 0.1;
        let em = ErrorModel::new(0.0, delta).unwrap();
        let six = entry("X6-delta", delta).unwrap();
        let u = sequence_propagator(&six.sequence, &em).unwrap();
        let d6 = infidelity(&u, &six.target, six.align).unwrap();
        assert!(d6 < 2e-3, "six-pair compensation: {d6}");
        let ten = entry("X10-universal", delta).unwrap();
        let u = sequence_propagator(&ten.sequence, &em).unwrap();
        let d10 = infidelity(&u, &ten.target, ten.align).unwrap();
        assert!(d10 < 1e-7, "universal compensation: {d10}");
        assert!(d10 < d6);
    }

    #[test]
    fn non_adiabatic_entries_hit_their_targets_exactly() {
        for label in labels() {
            let e = entry(label, 0.0).unwrap();
            if e.sequence.scheme == Scheme::Adiabatic {
                continue;
            }
            let u = sequence_propagator(&e.sequence, &ErrorModel::ideal()).unwrap();
            let d = infidelity(&u, &e.target, e.align).unwrap();
            assert!(d < 1e-12, "{label}: {d}");
        }
    }

    #[test]
    fn x_like_entries_keep_working_when_phase_aligned_too() {
        // The resonant X entries are exact without alignment; alignment must
        // not make them worse.
        for label in ["X2", "X6", "X10"] {
            let e = entry(label, 0.0).unwrap();
            let u = sequence_propagator(&e.sequence, &ErrorModel::ideal()).unwrap();
            let d = infidelity(&u, &e.target, Alignment::GlobalPhase).unwrap();
            assert!(d < 1e-12, "{label}: {d}");
        }
    }
}
