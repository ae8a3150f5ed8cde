//! Pairs of binary forms `(f_d, f_e)` on `P^1`, where stability reduces to root multiplicities.

pub mod poly;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::rational::serde_rational_vec;
use crate::kernel::{q, qi, Rational};
use poly::UniPoly;

/// `sum a_i x^i y^(deg - i)`; the degree is `coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryForm {
    #[serde(with = "serde_rational_vec")]
    pub coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Degenerate("form with no coefficients".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_ints(c: &[i64]) -> Result<Self> {
        BinaryForm::new(c.iter().map(|&x| qi(x)).collect())
    }

    /// Product of `(a x + b y)^k` over the given factors.
    pub fn from_linear_factors(factors: &[((i64, i64), u32)]) -> Result<Self> {
        let deg: u32 = factors.iter().map(|f| f.1).sum();
        let mut p = UniPoly::one();
        for &((a, b), k) in factors {
            if a == 0 && b == 0 {
                return Err(Error::Degenerate("zero linear factor".into()));
            }
            if a == 0 {
                p = p.mul(&UniPoly::new(vec![qi(b)]).pow(k));
            } else {
                p = p.mul(&UniPoly::linear(qi(a), qi(b)).pow(k));
            }
        }
        BinaryForm::from_poly(&p, deg)
    }

    fn from_poly(p: &UniPoly, deg: u32) -> Result<Self> {
        let mut c = p.coeffs().to_vec();
        c.resize(deg as usize + 1, Rational::zero());
        BinaryForm::new(c)
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The affine polynomial `f(x, 1)`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Multiplicity of the root `(1 : 0)`, i.e. the power of `y` dividing the form.
    pub fn multiplicity_at_infinity(&self) -> u32 {
        match self.dehomogenize().degree() {
            Some(k) => self.degree() - k as u32,
            None => self.degree(),
        }
    }

    /// Root multiplicities over the algebraic closure, in decreasing order.
    pub fn multiplicity_profile(&self) -> Result<Vec<u32>> {
        if self.is_zero() {
            return Err(Error::Degenerate("the zero form has no roots".into()));
        }
        let mut out = Vec::new();
        for (a, i) in self.dehomogenize().squarefree_decomposition() {
            out.extend(std::iter::repeat_n(i, a.degree().unwrap_or(0)));
        }
        let inf = self.multiplicity_at_infinity();
        if inf > 0 {
            out.push(inf);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// `f(a x + b y, c x + d y)`.
    pub fn substitute(&self, m: [[i64; 2]; 2]) -> BinaryForm {
        let deg = self.degree();
        let u = UniPoly::linear(qi(m[0][0]), qi(m[0][1]));
        let v = UniPoly::linear(qi(m[1][0]), qi(m[1][1]));
        let mut acc = UniPoly::new(vec![]);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let term = u
                .pow(i as u32)
                .mul(&v.pow(deg - i as u32))
                .mul(&UniPoly::new(vec![a.clone()]));
            acc = acc.add(&term);
        }
        BinaryForm::from_poly(&acc, deg).expect("degree is preserved")
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({a})x^{i}y^{}", d - i as u32)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityStatus {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl fmt::Display for StabilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityStatus::Stable => "stable",
            StabilityStatus::StrictlySemistable => "strictly semistable",
            StabilityStatus::Unstable => "unstable",
        })
    }
}

/// Largest `k + t m` over points of `P^1` where `f` vanishes to order `k` and `g` to order `m`.
pub fn max_weighted_multiplicity(f: &BinaryForm, g: &BinaryForm, t: &Rational) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Degenerate("zero form in pair".into()));
    }
    let (p, r) = (f.dehomogenize(), g.dehomogenize());
    let mut best = q(f.multiplicity_at_infinity() as i64, 1) + t * qi(g.multiplicity_at_infinity() as i64);
    let sp: Vec<UniPoly> = (1..=f.degree())
        .map(|k| p.roots_of_multiplicity_at_least(k))
        .collect();
    let sr: Vec<UniPoly> = (1..=g.degree())
        .map(|k| r.roots_of_multiplicity_at_least(k))
        .collect();
    let mut consider = |k: usize, m: usize| {
        let v = qi(k as i64) + t * qi(m as i64);
        if v > best {
            best = v;
        }
    };
    for (ki, a) in sp.iter().enumerate() {
        if a.is_nonconstant() {
            consider(ki + 1, 0);
        }
    }
    for (mi, b) in sr.iter().enumerate() {
        if b.is_nonconstant() {
            consider(0, mi + 1);
        }
    }
    for (ki, a) in sp.iter().enumerate() {
        if !a.is_nonconstant() {
            break;
        }
        for (mi, b) in sr.iter().enumerate() {
            if !b.is_nonconstant() {
                break;
            }
            if a.gcd(b).is_nonconstant() {
                consider(ki + 1, mi + 1);
            }
        }
    }
    Ok(best)
}

/// Stability of `(f_d, f_e)` for the slope `t`: compare the worst point with `(d + t e)/2`.
pub fn binary_pair_status(f: &BinaryForm, g: &BinaryForm, t: &Rational) -> Result<StabilityStatus> {
    let worst = max_weighted_multiplicity(f, g, t)?;
    let half = (qi(f.degree() as i64) + t * qi(g.degree() as i64)) / qi(2);
    Ok(match worst.cmp(&half) {
        std::cmp::Ordering::Less => StabilityStatus::Stable,
        std::cmp::Ordering::Equal => StabilityStatus::StrictlySemistable,
        std::cmp::Ordering::Greater => StabilityStatus::Unstable,
    })
}

/// Slopes where some multiplicity pair `(m_d, m_e)` becomes critical.
pub fn binary_walls(d: u32, e: u32) -> Vec<Rational> {
    let mut out = BTreeSet::new();
    for md in 0..=d {
        for me in 0..=e {
            let den = qi(me as i64) - q(e as i64, 2);
            if den.is_zero() {
                continue;
            }
            let t = (q(d as i64, 2) - qi(md as i64)) / den;
            if t > Rational::zero() {
                out.insert(t);
            }
        }
    }
    out.into_iter().collect()
}
