//! Pair configurations: a bundled surface model, a boundary with coefficients affine in `c`, and
//! the valuations to test.
//!
//! ```toml
//! name = "kwall-row8"
//! model = "p2"
//!
//! [[boundary]]
//! label = "C"
//! coeff = "1/2"
//! terms = [{ x0 = 1, x2 = 3 }, { x1 = 3, x2 = 1 }]
//!
//! [[valuation]]
//! label = "E"
//! vector = [3, 1]
//! ```
//!
//! A boundary component is one of `terms` (Cox monomials, toric models only), `class`, or
//! `anticanonical = true`. Class data stand for a general member, so their order along every
//! valuation is zero unless listed under `orders`. With `base` set, monomials name only the base
//! rays and the remaining exponents are filled in as the strict transform.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::{BoundaryComponent, ComplexityOne, DivisorDatum, LogPair, Valuation, ValuationKind};
use crate::data;
use crate::error::{check_len, Error, Result};
use crate::kernel::rational::Q;
use crate::kernel::{LinearInC, Rational};
use crate::surfaces::models::load_model;
use crate::surfaces::{build_toric, Surface, ToricSurface};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    name: String,
    model: String,
    #[serde(default)]
    description: String,
    #[serde(default)]
    base: Vec<String>,
    #[serde(default)]
    boundary: Vec<BoundaryFile>,
    #[serde(default)]
    valuation: Vec<ValuationFile>,
    complexity_one: Option<ComplexityOne>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BoundaryFile {
    label: String,
    coeff: String,
    terms: Option<Vec<BTreeMap<String, Q>>>,
    class: Option<Vec<Q>>,
    #[serde(default)]
    anticanonical: bool,
    #[serde(default)]
    orders: BTreeMap<String, Q>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ValuationFile {
    label: String,
    ray: Option<String>,
    vector: Option<[i64; 2]>,
    curve: Option<String>,
    class: Option<Vec<Q>>,
    log_discrepancy: Option<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KConfig {
    pub name: String,
    pub model: String,
    pub description: String,
    pub pair: LogPair,
    pub valuations: Vec<Valuation>,
    pub complexity_one: Option<ComplexityOne>,
}

impl KConfig {
    pub fn valuation(&self, label: &str) -> Result<&Valuation> {
        self.valuations
            .iter()
            .find(|v| v.label == label)
            .ok_or_else(|| Error::Parse(format!("{}: no valuation labelled {label:?}", self.name)))
    }
}

fn unwrap_q(v: Vec<Q>) -> Vec<Rational> {
    v.into_iter().map(|x| x.0).collect()
}

fn monomial(t: &ToricSurface, m: &BTreeMap<String, Q>) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::default(); t.len()];
    for (label, e) in m {
        out[t.index(label)?] = e.0.clone();
    }
    Ok(out)
}

/// Fills in the exponents of the rays outside `base` as `ord_E(m) - min_m ord_E(m)`, the orders
/// being taken on the fan spanned by the base rays.
fn strict_transform(t: &ToricSurface, base: &[String], terms: &mut [Vec<Rational>]) -> Result<()> {
    let idx = base.iter().map(|l| t.index(l)).collect::<Result<Vec<_>>>()?;
    let fan = build_toric(
        "base",
        &idx.iter().map(|&i| t.rays[i]).collect::<Vec<_>>(),
        Some(base.to_vec()),
    )?;
    for k in (0..t.len()).filter(|k| !idx.contains(k)) {
        let ords = fan.divisor_orders(t.rays[k])?;
        let vals = terms
            .iter()
            .map(|m| {
                idx.iter()
                    .zip(base)
                    .map(|(&i, l)| Ok(&m[i] * &ords[fan.index(l)?]))
                    .sum::<Result<Rational>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let lo = vals.iter().min().cloned().unwrap_or_default();
        for (m, v) in terms.iter_mut().zip(vals) {
            if !m[k].eq(&Rational::default()) {
                return Err(Error::Parse(format!(
                    "exponent of {} given alongside a base fan",
                    t.labels[k]
                )));
            }
            m[k] = v - &lo;
        }
    }
    Ok(())
}

pub fn parse_config(text: &str) -> Result<KConfig> {
    let file: ConfigFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let surface = load_model(&file.model)?;
    let mut boundary = Vec::new();
    for b in file.boundary {
        let coeff = LinearInC::parse(&b.coeff)?;
        let given = b.terms.is_some() as u8 + b.class.is_some() as u8 + b.anticanonical as u8;
        if given != 1 {
            return Err(Error::Parse(format!(
                "{}: boundary {} needs exactly one of terms, class, anticanonical",
                file.name, b.label
            )));
        }
        let datum = if let Some(terms) = b.terms {
            let Surface::Toric(t) = &surface else {
                return Err(Error::Chart(format!("{}: monomials need a toric model", b.label)));
            };
            let mut ms = terms.iter().map(|m| monomial(t, m)).collect::<Result<Vec<_>>>()?;
            if !file.base.is_empty() {
                strict_transform(t, &file.base, &mut ms)?;
            }
            DivisorDatum::Terms { terms: ms }
        } else if let Some(class) = b.class {
            DivisorDatum::Class {
                class: unwrap_q(class),
            }
        } else {
            DivisorDatum::Anticanonical
        };
        boundary.push(BoundaryComponent {
            label: b.label,
            coeff,
            datum,
            orders: b.orders,
        });
    }

    let mut valuations = Vec::new();
    for v in file.valuation {
        let kind = match (&surface, v.ray, v.vector, v.curve, v.class) {
            (Surface::Toric(t), Some(ray), None, None, None) => ValuationKind::Toric {
                vector: t.rays[t.index(&ray)?],
            },
            (Surface::Toric(_), None, Some(vector), None, None) => ValuationKind::Toric { vector },
            (Surface::Ns(n), None, None, Some(curve), None) => {
                let c = &n.negative_curves[n.curve(&curve)?];
                ValuationKind::Curve {
                    class: c.class.clone(),
                    log_discrepancy: c.log_discrepancy.clone(),
                }
            }
            (_, None, None, None, Some(class)) => ValuationKind::Curve {
                class: unwrap_q(class),
                log_discrepancy: v.log_discrepancy.clone().map(|x| x.0).ok_or_else(|| {
                    Error::Parse(format!("{}: class valuation needs log_discrepancy", v.label))
                })?,
            },
            _ => {
                return Err(Error::Parse(format!(
                    "{}: valuation {} needs one of ray/vector (toric) or curve/class",
                    file.name, v.label
                )))
            }
        };
        if let ValuationKind::Curve { class, .. } = &kind {
            let rank = match &surface {
                Surface::Toric(t) => t.len(),
                Surface::Ns(n) => n.rank(),
            };
            check_len(rank, class.len())?;
        }
        valuations.push(Valuation { label: v.label, kind });
    }

    let pair = LogPair::new(&file.name, surface, boundary)?;
    if let Some(c1) = &file.complexity_one {
        c1.check_invariance(&pair)?;
    }
    Ok(KConfig {
        name: file.name,
        model: file.model,
        description: file.description,
        pair,
        valuations,
        complexity_one: file.complexity_one,
    })
}

/// Loads `configs/<name>.toml`, or a file path when `name` ends in `.toml`.
pub fn load_config(name: &str) -> Result<KConfig> {
    if name.ends_with(".toml") {
        let text =
            std::fs::read_to_string(name).map_err(|e| Error::Parse(format!("cannot read {name}: {e}")))?;
        return parse_config(&text);
    }
    parse_config(&data::read(&format!("configs/{name}.toml"))?)
}

/// Bundled configurations that describe log pairs (GIT descriptors share the directory).
pub fn config_names() -> Vec<String> {
    data::list("configs/")
        .into_iter()
        .filter(|n| data::read(&format!("configs/{n}.toml")).is_ok_and(|t| t.contains("model =")))
        .collect()
}
