//! JSON input and output documents.
//!
//! Rationals are written as strings (`"3/4"`, `"-2"`); on input plain JSON
//! integers are accepted as well.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::spectrum::{BuildingSetChoice, SpectrumResult};
use crate::verify::Report;
use crate::{Arrangement, Error, Hyperplane, Rational, Result};

/// A rational that serializes as `"a/b"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalValue(pub Rational);

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for RationalValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Validation(format!("`{s}` is not a rational number"));
        let r = match s.split_once('/') {
            Some((a, b)) => {
                let num = a.trim().parse::<num_bigint::BigInt>().map_err(|_| bad())?;
                let den = b.trim().parse::<num_bigint::BigInt>().map_err(|_| bad())?;
                if den == 0.into() {
                    return Err(Error::Validation(format!("`{s}` has a zero denominator")));
                }
                Rational::new(num, den)
            }
            None => Rational::from_integer(s.parse().map_err(|_| bad())?),
        };
        Ok(RationalValue(r))
    }
}

impl Serialize for RationalValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(i) => Ok(RationalValue(Rational::from_integer(i.into()))),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

fn default_mult() -> u32 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneEntry {
    pub coeffs: Vec<RationalValue>,
    #[serde(default = "default_mult")]
    pub mult: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BuildingSetSpec {
    /// Only `"maximal"` is recognized.
    Named(String),
    Closures(Vec<Vec<usize>>),
}

impl Default for BuildingSetSpec {
    fn default() -> Self {
        BuildingSetSpec::Named("maximal".into())
    }
}

impl BuildingSetSpec {
    pub fn to_choice(&self) -> Result<BuildingSetChoice> {
        match self {
            BuildingSetSpec::Named(s) if s == "maximal" => Ok(BuildingSetChoice::Maximal),
            BuildingSetSpec::Named(s) => Err(Error::Validation(format!(
                "building_set: unknown value `{s}` (expected \"maximal\" or a list of closures)"
            ))),
            BuildingSetSpec::Closures(c) => Ok(BuildingSetChoice::Closures(c.clone())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub n: usize,
    pub hyperplanes: Vec<HyperplaneEntry>,
    #[serde(default)]
    pub building_set: BuildingSetSpec,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(format!("malformed document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_arrangement(arr: &Arrangement) -> Self {
        let hyperplanes = arr
            .hyperplanes()
            .iter()
            .map(|h| HyperplaneEntry {
                coeffs: h.normal.iter().cloned().map(RationalValue).collect(),
                mult: h.mult,
            })
            .collect();
        InputDocument { n: arr.n(), hyperplanes, building_set: BuildingSetSpec::default() }
    }

    pub fn to_arrangement(&self) -> Result<Arrangement> {
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if h.coeffs.len() != self.n {
                return Err(Error::Validation(format!(
                    "hyperplanes[{i}].coeffs: expected {} entries, found {}",
                    self.n,
                    h.coeffs.len()
                )));
            }
            if h.mult == 0 {
                return Err(Error::Validation(format!("hyperplanes[{i}].mult: must be positive")));
            }
        }
        let hs = self
            .hyperplanes
            .iter()
            .map(|h| Hyperplane::new(h.coeffs.iter().map(|c| c.0.clone()).collect(), h.mult))
            .collect();
        Arrangement::new(self.n, hs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub alpha: RationalValue,
    pub mult: i64,
    pub k: u64,
    pub p: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub n: usize,
    pub degree: u64,
    pub spectrum: Vec<SpectrumEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Report>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

impl OutputDocument {
    pub fn new(result: &SpectrumResult, checks: Option<Report>) -> Self {
        OutputDocument {
            n: result.n,
            degree: result.degree,
            spectrum: result
                .points
                .iter()
                .map(|pt| SpectrumEntry {
                    alpha: RationalValue(pt.alpha.clone()),
                    mult: pt.mult,
                    k: pt.k,
                    p: pt.p,
                })
                .collect(),
            checks,
            warnings: result.warnings.clone(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(format!("malformed document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// `t^{2/3} + 2 t + t^{4/3}` style rendering.
    pub fn polynomial(&self) -> String {
        if self.spectrum.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, e) in self.spectrum.iter().enumerate() {
            let sign = if e.mult < 0 { "-" } else { "+" };
            if i > 0 {
                out.push_str(&format!(" {sign} "));
            } else if e.mult < 0 {
                out.push('-');
            }
            let abs = e.mult.unsigned_abs();
            if abs != 1 {
                out.push_str(&abs.to_string());
            }
            if e.alpha.0 == Rational::from_integer(1.into()) {
                out.push('t');
            } else {
                out.push_str(&format!("t^{{{}}}", e.alpha));
            }
        }
        out
    }
}
