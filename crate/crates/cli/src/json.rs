//! JSON schemas. Exact values travel as strings.

use pommiez_core::algebra::{Degree, GaussianRational};
use pommiez_core::classify::{format_p, SubspaceDescriptor};
use pommiez_core::domain::{G0Context, MultiplicityVariety};
use serde::{Deserialize, Serialize};

use crate::expr::{parse_factored, parse_scalar, SyntaxError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointJson {
    pub point: String,
    pub order: usize,
}

/// `n` is a JSON number, or the string `"-inf"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DegreeJson {
    Finite(usize),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum DescriptorJson {
    Rational { p: String, n: DegreeJson, upsilon: Vec<PointJson> },
    ZeroVariety { w: Vec<PointJson> },
    Full,
    Trivial,
}

#[derive(Debug)]
pub enum DecodeError {
    Json(serde_json::Error),
    Syntax { field: &'static str, err: SyntaxError },
    Invalid(pommiez_core::Error),
    Shape(String),
}

fn variety_json(w: &MultiplicityVariety) -> Vec<PointJson> {
    w.entries().iter().map(|(x, m)| PointJson { point: x.to_string(), order: *m }).collect()
}

fn variety_from_json(points: &[PointJson], field: &'static str) -> Result<MultiplicityVariety, DecodeError> {
    let entries = points
        .iter()
        .map(|p| parse_scalar(&p.point).map(|x| (x, p.order)).map_err(|err| DecodeError::Syntax { field, err }))
        .collect::<Result<Vec<(GaussianRational, usize)>, _>>()?;
    MultiplicityVariety::new(entries).map_err(DecodeError::Invalid)
}

impl From<&SubspaceDescriptor> for DescriptorJson {
    fn from(d: &SubspaceDescriptor) -> Self {
        match d {
            SubspaceDescriptor::Rational(rt) => DescriptorJson::Rational {
                p: format_p(rt.p_zeros()),
                n: match rt.n() {
                    Degree::Finite(n) => DegreeJson::Finite(n),
                    Degree::NegInf => DegreeJson::Text("-inf".into()),
                },
                upsilon: variety_json(rt.upsilon()),
            },
            SubspaceDescriptor::ZeroVariety(w) => DescriptorJson::ZeroVariety { w: variety_json(w) },
            SubspaceDescriptor::Full => DescriptorJson::Full,
            SubspaceDescriptor::Trivial => DescriptorJson::Trivial,
        }
    }
}

impl DescriptorJson {
    /// Decodes and validates against `ctx`.
    pub fn to_descriptor(&self, ctx: &G0Context) -> Result<SubspaceDescriptor, DecodeError> {
        let d = match self {
            DescriptorJson::Rational { p, n, upsilon } => {
                let p_entries = parse_factored(p).map_err(|err| DecodeError::Syntax { field: "p", err })?;
                let p_zeros = MultiplicityVariety::new(p_entries).map_err(DecodeError::Invalid)?;
                let n = match n {
                    DegreeJson::Finite(n) => Degree::Finite(*n),
                    DegreeJson::Text(s) if s == "-inf" => Degree::NegInf,
                    DegreeJson::Text(s) => {
                        return Err(DecodeError::Shape(format!(
                            "n must be a nonnegative integer or \"-inf\", got {s:?}"
                        )))
                    }
                };
                SubspaceDescriptor::rational(p_zeros, n, variety_from_json(upsilon, "upsilon")?)
                    .map_err(DecodeError::Invalid)?
            }
            DescriptorJson::ZeroVariety { w } => {
                SubspaceDescriptor::zero_variety(variety_from_json(w, "w")?).map_err(DecodeError::Invalid)?
            }
            DescriptorJson::Full => SubspaceDescriptor::Full,
            DescriptorJson::Trivial => SubspaceDescriptor::Trivial,
        };
        d.validate(ctx).map_err(DecodeError::Invalid)?;
        Ok(d)
    }
}

pub fn descriptor_to_string(d: &SubspaceDescriptor) -> String {
    serde_json::to_string(&DescriptorJson::from(d)).expect("descriptor serializes")
}

pub fn descriptor_from_str(src: &str, ctx: &G0Context) -> Result<SubspaceDescriptor, DecodeError> {
    let json: DescriptorJson = serde_json::from_str(src).map_err(DecodeError::Json)?;
    json.to_descriptor(ctx)
}
