//! Problem descriptors: the `(n, d, e)` triple of a GIT problem plus an optional sample pair.
//!
//! ```toml
//! kind = "hypersurface-pair"
//! name = "quartic-line"
//! n = 2
//! d = 4
//! e = 1
//!
//! [pair]
//! f = [[0, 4, 0], [1, 2, 1]]
//! h = [[1, 0, 0]]
//! ```
//!
//! For `n = 1` the sample may instead be a pair of binary forms, each either a coefficient array
//! listed from `y^deg` up to `x^deg` or a sparse map from the exponent of `x` to its coefficient:
//!
//! ```toml
//! [binary]
//! f = { 0 = -1, 8 = 1 }
//! g = [0, 1, 0]
//! ```

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::problem::{GitProblem, PairSupport};
use crate::binary::BinaryForm;
use crate::data;
use crate::error::{Error, Result};
use crate::kernel::rational::Q;
use crate::kernel::{ExponentVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportFile {
    pub f: Vec<Vec<u32>>,
    pub h: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficients {
    Dense(Vec<Q>),
    Sparse(BTreeMap<String, Q>),
}

impl Coefficients {
    pub fn to_form(&self, deg: u32) -> Result<BinaryForm> {
        match self {
            Coefficients::Dense(c) => BinaryForm::new(c.iter().map(|x| x.0.clone()).collect()),
            Coefficients::Sparse(m) => {
                let mut c = vec![Rational::zero(); deg as usize + 1];
                for (k, v) in m {
                    let i: usize = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {k:?}")))?;
                    if i > deg as usize {
                        return Err(Error::Domain(format!("exponent {i} exceeds degree {deg}")));
                    }
                    c[i] = v.0.clone();
                }
                BinaryForm::new(c)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinaryFile {
    pub f: Coefficients,
    pub g: Coefficients,
}

pub const KIND: &str = "hypersurface-pair";

fn default_kind() -> String {
    KIND.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default = "default_kind")]
    pub kind: String,
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub n: usize,
    pub d: u32,
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<SupportFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binary: Option<BinaryFile>,
}

impl ProblemFile {
    pub fn problem(&self) -> Result<GitProblem> {
        GitProblem::new(self.n, self.d, self.e)
    }

    pub fn support(&self) -> Result<Option<PairSupport>> {
        self.pair
            .as_ref()
            .map(|p| {
                PairSupport::new(
                    self.n,
                    self.d,
                    self.e,
                    p.f.iter().cloned().map(ExponentVector),
                    p.h.iter().cloned().map(ExponentVector),
                )
            })
            .transpose()
    }

    pub fn binary_pair(&self) -> Result<Option<(BinaryForm, BinaryForm)>> {
        let Some(b) = &self.binary else { return Ok(None) };
        if self.n != 1 {
            return Err(Error::Domain(format!("{}: binary forms need n = 1", self.name)));
        }
        let f = b.f.to_form(self.d)?;
        let g = b.g.to_form(self.e)?;
        if f.degree() != self.d || g.degree() != self.e {
            return Err(Error::Domain(format!(
                "{}: sample forms have degrees ({}, {}), expected ({}, {})",
                self.name,
                f.degree(),
                g.degree(),
                self.d,
                self.e
            )));
        }
        Ok(Some((f, g)))
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let file: ProblemFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.kind != KIND {
        return Err(Error::Parse(format!("unknown problem kind {:?}", file.kind)));
    }
    file.problem()?;
    file.support()?;
    file.binary_pair()?;
    Ok(file)
}

/// Loads `configs/<name>.toml`, or a file path when `name` ends in `.toml`.
pub fn load_problem(name: &str) -> Result<ProblemFile> {
    if name.ends_with(".toml") {
        let text =
            std::fs::read_to_string(name).map_err(|e| Error::Parse(format!("cannot read {name}: {e}")))?;
        return parse_problem(&text);
    }
    parse_problem(&data::read(&format!("configs/{name}.toml"))?)
}
