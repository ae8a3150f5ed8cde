use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Result};

/// Exponent vector of a monomial in `x_0, ..., x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The linear monomial `x_i` in `len` variables.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        ExponentVector(v)
    }

    /// Pairing with an integer weight vector.
    pub fn weight(&self, w: &[i64]) -> Result<i64> {
        check_len(self.0.len(), w.len())?;
        Ok(self.0.iter().zip(w).map(|(&a, &r)| a as i64 * r).sum())
    }

    pub(crate) fn weight_unchecked(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(&a, &r)| a as i64 * r).sum()
    }

    pub fn product(&self, other: &ExponentVector) -> Result<ExponentVector> {
        check_len(self.0.len(), other.0.len())?;
        Ok(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{a}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `n + 1` variables, in descending lexicographic order.
pub fn monomials(n: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(pos: usize, len: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if pos + 1 == len {
            cur.push(left);
            out.push(ExponentVector(cur.clone()));
            cur.pop();
            return;
        }
        for a in (0..=left).rev() {
            cur.push(a);
            rec(pos + 1, len, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n + 1, d, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

/// `binom(n + d, n)`, saturating.
pub fn monomial_count(n: usize, d: u32) -> usize {
    let mut acc: u128 = 1;
    for i in 1..=n as u128 {
        acc = acc * (d as u128 + i) / i;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}
