//! Polystability checklist for pairs with a one-dimensional torus action of complexity one.
//!
//! The action is a 1-PS of the big torus of a toric model, given by Cox weights. Its two
//! fixed-point valuations are the toric valuations of `+-primitive(lambda_N)`; when one of them
//! is a ray, that side is a horizontal divisor rather than a plt blow-up.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{beta, BetaReport, DivisorDatum, LogPair, Valuation};
use crate::error::{Error, Result};
use crate::kernel::lattice::primitive;
use crate::kernel::rational::serde_rational;
use crate::kernel::Rational;
use crate::surfaces::{Surface, ToricSurface};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityOne {
    /// Weight of each Cox coordinate, by ray label.
    pub lambda: BTreeMap<String, i64>,
    /// Ray labels of the vertical divisors whose beta must stay positive.
    pub vertical: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Polystable,
    SemistableBoundary,
    Unstable,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityOneReport {
    #[serde(with = "serde_rational")]
    pub c: Rational,
    pub lambda_n: [i64; 2],
    /// Valuations at `+lambda_N` and `-lambda_N`.
    pub plus: BetaReport,
    pub minus: BetaReport,
    pub vertical: Vec<BetaReport>,
    pub verdict: Verdict,
}

impl ComplexityOne {
    /// `lambda_N = sum lambda_rho u_rho`, the 1-PS as a cocharacter of the big torus.
    pub fn lambda_n(&self, t: &ToricSurface) -> Result<[i64; 2]> {
        let mut v = [0i64; 2];
        for (label, w) in &self.lambda {
            let r = t.rays[t.index(label)?];
            v[0] += w * r[0];
            v[1] += w * r[1];
        }
        if v == [0, 0] {
            return Err(Error::Degenerate(
                "the weights act trivially on the surface".into(),
            ));
        }
        Ok(v)
    }

    fn weight(&self, t: &ToricSurface, m: &[Rational]) -> Result<Rational> {
        let mut w = Rational::zero();
        for (label, k) in &self.lambda {
            w += &m[t.index(label)?] * Rational::from_integer((*k).into());
        }
        Ok(w)
    }

    /// Every polynomial boundary component must be a weight vector for the action.
    pub fn check_invariance(&self, pair: &LogPair) -> Result<()> {
        let Surface::Toric(t) = &pair.surface else {
            return Err(Error::Chart(format!(
                "{}: torus actions need a toric model",
                pair.name
            )));
        };
        for b in &pair.boundary {
            if let DivisorDatum::Terms { terms } = &b.datum {
                let w0 = self.weight(t, &terms[0])?;
                for m in &terms[1..] {
                    let w = self.weight(t, m)?;
                    if w != w0 {
                        return Err(Error::Model(format!(
                            "{}: {} is not semi-invariant (weights {w0} and {w})",
                            pair.name, b.label
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The two fixed-point valuations, `+` side first.
    pub fn fixed_points(&self, pair: &LogPair) -> Result<(Valuation, Valuation)> {
        let Surface::Toric(t) = &pair.surface else {
            return Err(Error::Chart(format!(
                "{}: torus actions need a toric model",
                pair.name
            )));
        };
        let p = primitive(&self.lambda_n(t)?);
        Ok((
            Valuation::toric("E+", [p[0], p[1]]),
            Valuation::toric("E-", [-p[0], -p[1]]),
        ))
    }
}

/// Runs the checklist at `c`. Fails with a consistency error when the two fixed-point betas do
/// not cancel identically in `c`.
pub fn complexity_one_check(
    pair: &LogPair,
    data: &ComplexityOne,
    c: &Rational,
) -> Result<ComplexityOneReport> {
    let Surface::Toric(t) = &pair.surface else {
        return Err(Error::Chart(format!(
            "{}: torus actions need a toric model",
            pair.name
        )));
    };
    data.check_invariance(pair)?;
    let lambda_n = data.lambda_n(t)?;
    let (ep, em) = data.fixed_points(pair)?;
    let plus = beta(pair, &ep)?;
    let minus = beta(pair, &em)?;
    if !(&plus.beta + &minus.beta).is_zero() {
        return Err(Error::Consistency(format!(
            "{}: beta(E+) = {} and beta(E-) = {} do not cancel",
            pair.name, plus.beta, minus.beta
        )));
    }
    let vertical = data
        .vertical
        .iter()
        .map(|label| beta(pair, &Valuation::toric(label, t.rays[t.index(label)?])))
        .collect::<Result<Vec<_>>>()?;

    let verdict = if vertical.is_empty() {
        Verdict::Inconclusive
    } else if !plus.at(c).is_zero() || vertical.iter().any(|r| r.at(c).is_negative()) {
        Verdict::Unstable
    } else if vertical.iter().any(|r| r.at(c).is_zero()) {
        Verdict::SemistableBoundary
    } else {
        Verdict::Polystable
    };
    Ok(ComplexityOneReport {
        c: c.clone(),
        lambda_n,
        plus,
        minus,
        vertical,
        verdict,
    })
}
