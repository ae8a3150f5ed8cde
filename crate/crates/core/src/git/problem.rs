use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::kernel::{monomials, q, ExponentVector, Interval, OnePS, Rational};

/// Pairs `(f, h)` of a degree-`d` and a degree-`e` form on `P^n`, linearized by `O(1) + t O(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GitProblem {
    pub n: usize,
    pub d: u32,
    pub e: u32,
    /// Open interval of admissible slopes `t`.
    pub t_domain: Interval,
    /// The first factor is a pencil of degree-`d` forms in its Plucker embedding.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub pencil: bool,
}

impl GitProblem {
    /// For `e = 1` every pair is unstable once `t > d/n` (the subgroup `(1, ..., 1, -n)` pushes
    /// every form into the hyperplane), while for `e >= 2` semistable degree-`e` forms exist,
    /// so the domain is unbounded.
    pub fn new(n: usize, d: u32, e: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        if d == 0 || e == 0 {
            return Err(Error::Domain("degrees must be positive".into()));
        }
        let hi = (e == 1).then(|| q(d as i64, n as i64));
        Ok(GitProblem {
            n,
            d,
            e,
            t_domain: Interval::new(q(0, 1), hi),
            pencil: false,
        })
    }

    /// Pencils of degree-`d` forms with a hyperplane. The Plucker coordinate of two monomials
    /// `m != m'` has weight `w(m m')`, so the pencil carries the weights of degree-`2d` monomials.
    pub fn pencil(n: usize, d: u32) -> Result<Self> {
        let mut p = GitProblem::new(n, 2 * d, 1)?;
        p.d = d;
        p.pencil = true;
        Ok(p)
    }

    /// Degree of the monomials whose weights the first factor carries.
    pub fn weight_degree(&self) -> u32 {
        if self.pencil {
            2 * self.d
        } else {
            self.d
        }
    }

    pub fn t_max(&self) -> Option<&Rational> {
        self.t_domain.hi.as_ref()
    }

    /// Monomials whose weights are those of the first factor's coordinates. For a pencil these
    /// are the products of two distinct degree-`d` monomials, one per weight class of Plucker
    /// coordinates.
    pub fn degree_d_monomials(&self) -> Vec<ExponentVector> {
        if !self.pencil {
            return monomials(self.n, self.d);
        }
        let base = monomials(self.n, self.d);
        let mut out = BTreeSet::new();
        for (i, a) in base.iter().enumerate() {
            for b in &base[i + 1..] {
                out.insert(ExponentVector(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect()));
            }
        }
        out.into_iter().rev().collect()
    }

    pub fn degree_e_monomials(&self) -> Vec<ExponentVector> {
        monomials(self.n, self.e)
    }

    pub(crate) fn check_ops(&self, lambda: &OnePS) -> Result<()> {
        check_len(self.n + 1, lambda.weights().len())
    }
}

/// Monomial supports of a pair `(f, h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSupport {
    pub n: usize,
    pub d: u32,
    pub e: u32,
    pub f_support: BTreeSet<ExponentVector>,
    pub h_support: BTreeSet<ExponentVector>,
}

impl PairSupport {
    pub fn new(
        n: usize,
        d: u32,
        e: u32,
        f_support: impl IntoIterator<Item = ExponentVector>,
        h_support: impl IntoIterator<Item = ExponentVector>,
    ) -> Result<Self> {
        let f_support: BTreeSet<_> = f_support.into_iter().collect();
        let h_support: BTreeSet<_> = h_support.into_iter().collect();
        if f_support.is_empty() || h_support.is_empty() {
            return Err(Error::Degenerate("a form in the pair has empty support".into()));
        }
        for (set, deg) in [(&f_support, d), (&h_support, e)] {
            for m in set {
                check_len(n + 1, m.len())?;
                if m.degree() != deg {
                    return Err(Error::Domain(format!("monomial {m} does not have degree {deg}")));
                }
            }
        }
        Ok(PairSupport {
            n,
            d,
            e,
            f_support,
            h_support,
        })
    }

    /// Image of the support under a permutation of the coordinates (`perm[i]` is the new index of `x_i`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_len(self.n + 1, perm.len())?;
        let p = |m: &ExponentVector| {
            let mut v = vec![0; m.len()];
            for (i, &a) in m.0.iter().enumerate() {
                v[perm[i]] = a;
            }
            ExponentVector(v)
        };
        PairSupport::new(
            self.n,
            self.d,
            self.e,
            self.f_support.iter().map(p),
            self.h_support.iter().map(p),
        )
    }
}

/// `w_lambda(m) = sum m_i r_i`.
pub fn weight(m: &ExponentVector, lambda: &OnePS) -> Result<i64> {
    m.weight(lambda.weights())
}

/// Hilbert-Mumford weight `max_f w + t max_h w`; the pair is semistable iff this is `>= 0` for all `lambda`.
pub fn mu_t(pair: &PairSupport, lambda: &OnePS, t: &Rational) -> Result<Rational> {
    check_len(pair.n + 1, lambda.weights().len())?;
    let top = |s: &BTreeSet<ExponentVector>| s.iter().map(|m| m.weight_unchecked(lambda.weights())).max();
    let (Some(a), Some(b)) = (top(&pair.f_support), top(&pair.h_support)) else {
        return Err(Error::Degenerate("empty support".into()));
    };
    Ok(q(a, 1) + t * q(b, 1))
}
