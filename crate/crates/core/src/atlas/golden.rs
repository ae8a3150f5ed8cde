//! Typed views of the golden-data tables under `data/golden`. Every file is stored in the
//! canonical form produced by [`to_canonical`], so parsing and re-serializing gives it back
//! byte for byte.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::data;
use crate::error::{Error, Result};
use crate::kernel::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GitWalls {
    pub name: String,
    pub n: usize,
    pub d: u32,
    pub e: u32,
    pub walls: Vec<Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_max: Option<Q>,
    /// Pencil problem targeted by the experimental `grassmannian` engine.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub grassmannian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KWallList {
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub walls: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallsFile {
    pub git: Vec<GitWalls>,
    pub kmoduli: Vec<KWallList>,
}

/// One K-moduli wall for degree at least 5, with the replaced pair's description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Replacement {
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub c: Q,
    pub curve: String,
    pub singularities: String,
    /// Bundled pair configuration whose beta vanishes at `c`, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReplacementsFile {
    pub wall: Vec<Replacement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KwallRow {
    pub row: u32,
    pub wall: Q,
    pub curve: String,
    pub line: String,
    /// Blow-up weights as printed, one per coordinate.
    pub printed_weights: Vec<i64>,
    pub beta: String,
    pub config: String,
    pub valuation: String,
    pub cstar_row: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Demonstration {
    pub config: String,
    pub valuation: String,
    #[serde(rename = "A")]
    pub a: String,
    pub tau: String,
    #[serde(rename = "S")]
    pub s: String,
    pub wall: Q,
    pub polystable_at: Q,
    pub unstable_at: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KwallTableFile {
    pub row: Vec<KwallRow>,
    pub demonstration: Demonstration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedOps {
    pub name: String,
    pub weights: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CstarRow {
    pub row: u32,
    pub singularities: String,
    pub f: Vec<Vec<u32>>,
    pub h: Vec<Vec<u32>>,
    pub printed_lambda: String,
    /// The subgroup that actually fixes the pair.
    pub lambda: String,
    /// Slope where `mu_t` vanishes; absent when it vanishes for every `t`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_zero_at: Option<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CstarFile {
    pub lambda: Vec<NamedOps>,
    pub row: Vec<CstarRow>,
}

impl CstarFile {
    pub fn weights(&self, name: &str) -> Result<&[i64]> {
        self.lambda
            .iter()
            .find(|l| l.name == name)
            .map(|l| l.weights.as_slice())
            .ok_or_else(|| Error::Parse(format!("no subgroup named {name:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SValue {
    pub config: String,
    pub valuation: String,
    #[serde(rename = "S")]
    pub s: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SValuesFile {
    pub entry: Vec<SValue>,
}

pub const WALLS: &str = "golden/walls.toml";
pub const KWALL_TABLE: &str = "golden/kwall-table.toml";
pub const CSTAR: &str = "golden/cstar-quartics.toml";
pub const S_VALUES: &str = "golden/s-values.toml";
pub const REPLACEMENTS: &str = "golden/replacements.toml";

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_canonical<T: Serialize>(value: &T) -> Result<String> {
    toml::to_string(value).map_err(|e| Error::Parse(e.to_string()))
}

pub fn load<T: DeserializeOwned>(path: &str) -> Result<T> {
    parse(&data::read(path)?)
}

/// Parses a golden file into its typed form and serializes it again.
pub fn reserialize(path: &str) -> Result<(String, String)> {
    let text = data::read(path)?;
    let out = match path {
        WALLS => to_canonical(&parse::<WallsFile>(&text)?)?,
        KWALL_TABLE => to_canonical(&parse::<KwallTableFile>(&text)?)?,
        CSTAR => to_canonical(&parse::<CstarFile>(&text)?)?,
        S_VALUES => to_canonical(&parse::<SValuesFile>(&text)?)?,
        REPLACEMENTS => to_canonical(&parse::<ReplacementsFile>(&text)?)?,
        _ => return Err(Error::Parse(format!("{path} is not a golden table"))),
    };
    Ok((text, out))
}

pub fn files() -> [&'static str; 5] {
    [WALLS, KWALL_TABLE, CSTAR, S_VALUES, REPLACEMENTS]
}
