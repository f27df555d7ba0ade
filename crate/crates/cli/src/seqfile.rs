//! JSON sequence files: a label, a scheme name, one shared pulse shape, and
//! the list of pulse pairs with areas and phases in radians.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use ramancp_core::pulse::{CompositeSequence, PulsePair, PulseShape, Scheme};

#[derive(Debug, Serialize, Deserialize)]
pub struct ShapeDto {
    pub kind: String,
    pub duration: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PairDto {
    pub area0: f64,
    pub area1: f64,
    pub phase0: f64,
    pub phase1: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SequenceDto {
    pub label: String,
    pub scheme: String,
    pub shape: ShapeDto,
    pub pairs: Vec<PairDto>,
}

fn shape_from(dto: &ShapeDto) -> Result<PulseShape> {
    match dto.kind.as_str() {
        "rectangular" => Ok(PulseShape::rectangular(dto.duration)?),
        "gaussian" => match dto.width {
            Some(w) => Ok(PulseShape::gaussian_with_width(dto.duration, w)?),
            None => Ok(PulseShape::gaussian(dto.duration)?),
        },
        other => bail!("unknown shape kind {other:?}; expected rectangular or gaussian"),
    }
}

fn scheme_from(name: &str) -> Result<Scheme> {
    match name {
        "ms" => Ok(Scheme::Ms),
        "majorana" => Ok(Scheme::Majorana),
        "adiabatic" => Ok(Scheme::Adiabatic),
        other => bail!("unknown scheme {other:?}; expected ms, majorana, or adiabatic"),
    }
}

/// Reads a sequence file and validates it through the same constructors the
/// catalog uses.
pub fn load(path: &Path) -> Result<CompositeSequence> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let dto: SequenceDto =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let scheme = scheme_from(&dto.scheme)?;
    let shape = shape_from(&dto.shape)?;
    let pairs: Vec<PulsePair> = dto
        .pairs
        .iter()
        .map(|p| PulsePair::new(p.area0, p.area1, p.phase0, p.phase1, shape))
        .collect();
    if pairs.is_empty() {
        bail!("sequence file {} has no pulse pairs", path.display());
    }
    let seq = CompositeSequence::new(dto.label, scheme, pairs)
        .with_context(|| format!("validating {}", path.display()))?;
    Ok(seq)
}
