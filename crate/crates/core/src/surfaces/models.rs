//! Bundled surface models, stored as TOML under `data/models`.

use serde::Deserialize;

use super::{build_toric, NegativeCurve, NsSurface, Surface};
use crate::data;
use crate::error::{Error, Result};
use crate::kernel::rational::{serde_rational_matrix, serde_rational_vec};
use crate::kernel::Rational;

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum ModelFile {
    Toric {
        name: String,
        #[serde(default)]
        #[serde(rename = "description")]
        _description: String,
        rays: Vec<[i64; 2]>,
        labels: Vec<String>,
    },
    Ns {
        name: String,
        #[serde(default)]
        #[serde(rename = "description")]
        _description: String,
        #[serde(with = "serde_rational_matrix")]
        gram: Vec<Vec<Rational>>,
        #[serde(with = "serde_rational_vec")]
        anti_k: Vec<Rational>,
        curves: Vec<NegativeCurve>,
    },
}

pub fn parse_model(text: &str) -> Result<Surface> {
    let file: ModelFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    match file {
        ModelFile::Toric {
            name, rays, labels, ..
        } => Ok(Surface::Toric(build_toric(&name, &rays, Some(labels))?)),
        ModelFile::Ns {
            name,
            gram,
            anti_k,
            curves,
            ..
        } => Ok(Surface::Ns(NsSurface::new(&name, gram, anti_k, curves)?)),
    }
}

/// Loads `models/<name>.toml` from the bundled data (or the override directory).
pub fn load_model(name: &str) -> Result<Surface> {
    parse_model(&data::read(&format!("models/{name}.toml"))?)
}

pub fn model_names() -> Vec<String> {
    data::list("models/")
}
