//! Log discrepancies, expected vanishing orders and beta-invariants of log del Pezzo pairs
//! whose boundary coefficients are affine in `c`.

pub mod complexity;
pub mod config;

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{check_len, Error, Result};
use crate::kernel::rational::{serde_rational_opt, serde_rational_vec, Q};
use crate::kernel::{q, LinearInC, Rational};
use crate::surfaces::Surface;

pub use complexity::{complexity_one_check, ComplexityOne, ComplexityOneReport, Verdict};
pub use config::{config_names, load_config, parse_config, KConfig};

/// c-values used to fit S(c); the last one is an audit sample.
const SAMPLES: [(i64, i64); 4] = [(1, 5), (2, 5), (3, 5), (4, 5)];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DivisorDatum {
    /// Cox-ring monomials, one exponent per ray of a toric model.
    Terms {
        #[serde(serialize_with = "ser_terms")]
        terms: Vec<Vec<Rational>>,
    },
    Class {
        #[serde(with = "serde_rational_vec")]
        class: Vec<Rational>,
    },
    Anticanonical,
}

fn ser_terms<S: serde::Serializer>(t: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        t.iter()
            .map(|m| m.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryComponent {
    pub label: String,
    pub coeff: LinearInC,
    pub datum: DivisorDatum,
    /// Orders of vanishing along named valuations, overriding anything computed from charts.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub orders: BTreeMap<String, Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ValuationKind {
    /// Toric valuation of a primitive lattice vector: an existing ray or a weighted blow-up.
    Toric { vector: [i64; 2] },
    /// A prime divisor given by its class, with log discrepancy over the surface.
    Curve {
        #[serde(with = "serde_rational_vec")]
        class: Vec<Rational>,
        #[serde(with = "crate::kernel::rational::serde_rational")]
        log_discrepancy: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Valuation {
    pub label: String,
    #[serde(flatten)]
    pub kind: ValuationKind,
}

impl Valuation {
    pub fn toric(label: &str, v: [i64; 2]) -> Self {
        Valuation {
            label: label.to_string(),
            kind: ValuationKind::Toric { vector: v },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogPair {
    pub name: String,
    pub surface: Surface,
    pub boundary: Vec<BoundaryComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaReport {
    pub valuation: String,
    #[serde(rename = "A")]
    pub a: LinearInC,
    #[serde(rename = "S")]
    pub s: LinearInC,
    pub beta: LinearInC,
    /// Root of beta in (0, 1), if any.
    #[serde(with = "serde_rational_opt")]
    pub wall: Option<Rational>,
}

impl BetaReport {
    pub fn at(&self, c: &Rational) -> Rational {
        self.beta.eval(c)
    }
}

impl LogPair {
    pub fn new(name: &str, surface: Surface, boundary: Vec<BoundaryComponent>) -> Result<Self> {
        let pair = LogPair {
            name: name.to_string(),
            surface,
            boundary,
        };
        let rank = pair.class_len();
        for b in &pair.boundary {
            match &b.datum {
                DivisorDatum::Terms { terms } => {
                    let Surface::Toric(t) = &pair.surface else {
                        return Err(Error::Chart(format!(
                            "{}: monomial data needs a toric model",
                            b.label
                        )));
                    };
                    if terms.is_empty() {
                        return Err(Error::Parse(format!("{}: no monomials", b.label)));
                    }
                    for m in terms {
                        check_len(rank, m.len())?;
                        if !t.linearly_equivalent(m, &terms[0])? {
                            return Err(Error::Model(format!(
                                "{}: monomials of {} are not linearly equivalent",
                                pair.name, b.label
                            )));
                        }
                    }
                }
                DivisorDatum::Class { class } => check_len(rank, class.len())?,
                DivisorDatum::Anticanonical => {}
            }
        }
        for (n, d) in [SAMPLES[0], SAMPLES[SAMPLES.len() - 1]] {
            let c = q(n, d);
            let l = pair.polarization(&c);
            let vol = match &pair.surface {
                Surface::Toric(t) => t.volume(&l)?,
                Surface::Ns(s) => s.volume(&l)?,
            };
            if !vol.is_positive() {
                return Err(Error::Model(format!(
                    "{}: -K - Delta is not big at c = {c}",
                    pair.name
                )));
            }
        }
        Ok(pair)
    }

    fn class_len(&self) -> usize {
        match &self.surface {
            Surface::Toric(t) => t.len(),
            Surface::Ns(n) => n.rank(),
        }
    }

    fn anti_k(&self) -> Vec<Rational> {
        match &self.surface {
            Surface::Toric(t) => t.anticanonical(),
            Surface::Ns(n) => n.anti_k.clone(),
        }
    }

    pub fn class_of(&self, b: &BoundaryComponent) -> Vec<Rational> {
        match &b.datum {
            DivisorDatum::Terms { terms } => terms[0].clone(),
            DivisorDatum::Class { class } => class.clone(),
            DivisorDatum::Anticanonical => self.anti_k(),
        }
    }

    /// `-K - Delta(c)`.
    pub fn polarization(&self, c: &Rational) -> Vec<Rational> {
        let mut l = self.anti_k();
        for b in &self.boundary {
            let k = b.coeff.eval(c);
            for (x, y) in l.iter_mut().zip(self.class_of(b)) {
                *x -= &k * y;
            }
        }
        l
    }

    /// Order of vanishing of a boundary component along `v`.
    pub fn order(&self, b: &BoundaryComponent, v: &Valuation) -> Result<Rational> {
        if let Some(o) = b.orders.get(&v.label) {
            return Ok(o.0.clone());
        }
        match (&self.surface, &b.datum, &v.kind) {
            (Surface::Toric(t), DivisorDatum::Terms { terms }, ValuationKind::Toric { vector }) => {
                let w = t.divisor_orders(*vector)?;
                Ok(terms
                    .iter()
                    .map(|m| m.iter().zip(&w).map(|(a, b)| a * b).sum::<Rational>())
                    .min()
                    .expect("nonempty"))
            }
            // A general member of the class.
            (_, DivisorDatum::Class { .. } | DivisorDatum::Anticanonical, _) => Ok(Rational::zero()),
            _ => Err(Error::Chart(format!(
                "{}: no chart or listed order for {} along {}",
                self.name, b.label, v.label
            ))),
        }
    }

    fn s_at(&self, v: &Valuation, c: &Rational) -> Result<Rational> {
        let l = self.polarization(c);
        match (&self.surface, &v.kind) {
            (Surface::Toric(t), ValuationKind::Toric { vector }) => t.s_invariant(&l, *vector),
            (Surface::Toric(t), ValuationKind::Curve { class, .. }) => {
                check_len(t.len(), class.len())?;
                let vol = t.volume(&l)?;
                if vol.is_zero() {
                    return Err(Error::Domain(format!(
                        "{}: polarization is not big at c = {c}",
                        self.name
                    )));
                }
                Ok(t.class_volume_profile(&l, class)?.integrate() / vol)
            }
            (Surface::Ns(n), ValuationKind::Curve { class, .. }) => n.s_invariant(&l, class),
            (Surface::Ns(_), ValuationKind::Toric { .. }) => Err(Error::Chart(format!(
                "{}: toric valuation {} on a lattice model",
                self.name, v.label
            ))),
        }
    }
}

/// `A_{(X, Delta(c))}(v) = A_X(v) - sum coeff_i(c) ord_v(D_i)`.
pub fn log_discrepancy(pair: &LogPair, v: &Valuation) -> Result<LinearInC> {
    let ax = match (&pair.surface, &v.kind) {
        (Surface::Toric(t), ValuationKind::Toric { vector }) => t.log_discrepancy(*vector)?,
        (_, ValuationKind::Curve { log_discrepancy, .. }) => log_discrepancy.clone(),
        (Surface::Ns(_), ValuationKind::Toric { .. }) => {
            return Err(Error::Chart(format!(
                "{}: toric valuation on a lattice model",
                pair.name
            )))
        }
    };
    let mut a = LinearInC::constant(ax);
    for b in &pair.boundary {
        let o = pair.order(b, v)?;
        if !o.is_zero() {
            a = &a - &(&b.coeff * &o);
        }
    }
    Ok(a)
}

/// S(c), fitted through exact values at three sample points and audited at a fourth.
pub fn s_invariant(pair: &LogPair, v: &Valuation) -> Result<LinearInC> {
    let samples = SAMPLES
        .iter()
        .map(|&(n, d)| {
            let c = q(n, d);
            pair.s_at(v, &c).map(|s| (c, s))
        })
        .collect::<Result<Vec<_>>>()?;
    LinearInC::fit(&samples).map_err(|e| match e {
        Error::Nonlinearity(m) => Error::Nonlinearity(format!("{} along {}: {m}", pair.name, v.label)),
        other => other,
    })
}

pub fn beta(pair: &LogPair, v: &Valuation) -> Result<BetaReport> {
    let a = log_discrepancy(pair, v)?;
    let s = s_invariant(pair, v)?;
    let b = &a - &s;
    let wall = b.root().filter(|r| r.is_positive() && r < &Rational::one());
    Ok(BetaReport {
        valuation: v.label.clone(),
        a,
        s,
        beta: b,
        wall,
    })
}
