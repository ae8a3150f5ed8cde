use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Normalized one-parameter subgroup: primitive integer weights, non-increasing, summing to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct OnePS {
    weights: Vec<i64>,
}

/// Divide by the gcd and sort non-increasingly. Zero vectors are degenerate; nonzero trace is rejected.
pub fn normalize_ops(raw: &[i64]) -> Result<OnePS> {
    let trace: i64 = raw.iter().sum();
    if raw.iter().all(|&r| r == 0) {
        return Err(Error::Degenerate("zero weight vector".into()));
    }
    if trace != 0 {
        return Err(Error::Trace(trace));
    }
    let g = raw.iter().fold(0i64, |g, &r| num_integer::gcd(g, r));
    let mut weights: Vec<i64> = raw.iter().map(|r| r / g).collect();
    weights.sort_unstable_by(|a, b| b.cmp(a));
    Ok(OnePS { weights })
}

impl OnePS {
    pub fn new(raw: &[i64]) -> Result<Self> {
        normalize_ops(raw)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Number of coordinates minus one, i.e. the `n` of `P^n`.
    pub fn n(&self) -> usize {
        self.weights.len() - 1
    }

    /// The inverse subgroup, `(-r_n, ..., -r_0)`.
    pub fn dual(&self) -> OnePS {
        OnePS {
            weights: self.weights.iter().rev().map(|r| -r).collect(),
        }
    }
}

impl TryFrom<Vec<i64>> for OnePS {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        normalize_ops(&v)
    }
}

impl From<OnePS> for Vec<i64> {
    fn from(l: OnePS) -> Self {
        l.weights
    }
}

impl fmt::Display for OnePS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}
