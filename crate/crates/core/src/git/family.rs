use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::problem::GitProblem;
use crate::error::{Error, Result};
use crate::kernel::rational::to_i128_pair;
use crate::kernel::{ExponentVector, Interval, OnePS, Rational};

/// How `w(m) + t w(pivot)` is compared with zero when collecting destabilized monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Strict,
    Closed,
    Equal,
}

impl Relation {
    fn holds(self, sign: std::cmp::Ordering) -> bool {
        use std::cmp::Ordering::*;
        match self {
            Relation::Strict => sign == Less,
            Relation::Closed => sign != Greater,
            Relation::Equal => sign == Equal,
        }
    }
}

/// Pivot of a family: a coordinate `x_p` (weight `r_p`) or a degree-`e` monomial.
///
/// The two agree when `e = 1`; for `e >= 2` the monomial form is the one whose
/// `h`-sets are degree-`e` monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pivot {
    Coordinate(usize),
    Monomial(ExponentVector),
}

/// Maximal monomial sets that a one-parameter subgroup destabilizes with a given pivot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DestabilizingFamily {
    pub lambda: OnePS,
    pub pivot: Pivot,
    pub relation: Relation,
    pub t_range: Interval,
    pub f_monomials: Vec<ExponentVector>,
    pub h_monomials: Vec<ExponentVector>,
}

impl DestabilizingFamily {
    pub fn is_subfamily_of(&self, other: &DestabilizingFamily) -> bool {
        self.f_monomials.iter().all(|m| other.f_monomials.contains(m))
            && self.h_monomials.iter().all(|m| other.h_monomials.contains(m))
    }
}

fn sign_of(w_m: i64, wp: i64, t: (i128, i128)) -> std::cmp::Ordering {
    (t.1 * w_m as i128 + t.0 * wp as i128).cmp(&0)
}

/// Family for a single `(lambda, pivot)` at slope `t`.
pub fn destabilizing_family(
    problem: &GitProblem,
    lambda: &OnePS,
    pivot: &Pivot,
    t: &Rational,
    relation: Relation,
) -> Result<DestabilizingFamily> {
    problem.check_ops(lambda)?;
    let tt = to_i128_pair(t)?;
    let r = lambda.weights();
    let (wp, h_monomials) = match pivot {
        Pivot::Coordinate(p) => {
            let wp = *r.get(*p).ok_or(Error::Shape {
                expected: problem.n + 1,
                got: *p + 1,
            })?;
            let h = (0..=problem.n)
                .filter(|&j| r[j] <= wp)
                .map(|j| ExponentVector::unit(problem.n + 1, j))
                .collect();
            (wp, h)
        }
        Pivot::Monomial(m) => {
            if m.len() != problem.n + 1 || m.degree() != problem.e {
                return Err(Error::Domain(format!(
                    "pivot {m} is not a degree-{} monomial",
                    problem.e
                )));
            }
            let wp = m.weight_unchecked(r);
            let h = problem
                .degree_e_monomials()
                .into_iter()
                .filter(|x| x.weight_unchecked(r) <= wp)
                .collect();
            (wp, h)
        }
    };
    let f_monomials = problem
        .degree_d_monomials()
        .into_iter()
        .filter(|m| relation.holds(sign_of(m.weight_unchecked(r), wp, tt)))
        .collect();
    Ok(DestabilizingFamily {
        lambda: lambda.clone(),
        pivot: pivot.clone(),
        relation,
        t_range: Interval::new(t.clone(), Some(t.clone())),
        f_monomials,
        h_monomials,
    })
}

/// Precomputed weights for a fixed problem and candidate list; families are bit masks.
pub(crate) struct FamilyEngine<'a> {
    pub lambdas: &'a [OnePS],
    pub md: Vec<ExponentVector>,
    pub me: Vec<ExponentVector>,
    wd: Vec<Vec<i64>>,
    we: Vec<Vec<i64>>,
    h_masks: Vec<Vec<u128>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct FamilyKey {
    pub f: u128,
    pub h: u128,
}

impl FamilyKey {
    fn strictly_inside(&self, o: &FamilyKey) -> bool {
        self.f & !o.f == 0 && self.h & !o.h == 0 && self != o
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct RawFamily {
    pub key: FamilyKey,
    pub lam: usize,
    pub piv: usize,
}

impl<'a> FamilyEngine<'a> {
    pub fn new(problem: &'a GitProblem, lambdas: &'a [OnePS]) -> Result<Self> {
        let md = problem.degree_d_monomials();
        let me = problem.degree_e_monomials();
        for (what, len) in [("degree-d monomials", md.len()), ("degree-e monomials", me.len())] {
            if len > 128 {
                return Err(Error::Budget {
                    what: what.into(),
                    needed: len,
                    cap: 128,
                });
            }
        }
        let mut wd = Vec::with_capacity(lambdas.len());
        let mut we = Vec::with_capacity(lambdas.len());
        let mut h_masks = Vec::with_capacity(lambdas.len());
        for l in lambdas {
            problem.check_ops(l)?;
            let r = l.weights();
            let d: Vec<i64> = md.iter().map(|m| m.weight_unchecked(r)).collect();
            let e: Vec<i64> = me.iter().map(|m| m.weight_unchecked(r)).collect();
            let masks = e
                .iter()
                .map(|&wp| {
                    e.iter()
                        .enumerate()
                        .filter(|&(_, &w)| w <= wp)
                        .fold(0u128, |acc, (i, _)| acc | 1 << i)
                })
                .collect();
            wd.push(d);
            we.push(e);
            h_masks.push(masks);
        }
        Ok(FamilyEngine {
            lambdas,
            md,
            me,
            wd,
            we,
            h_masks,
        })
    }

    pub fn pivot_weights(&self, lam: usize) -> &[i64] {
        &self.we[lam]
    }

    pub fn monomial_weights(&self, lam: usize) -> &[i64] {
        &self.wd[lam]
    }

    /// All nonempty families at `t`, deduplicated by their monomial sets.
    /// The representative kept is the first `(lambda, pivot)` in list order.
    pub fn families(&self, t: &Rational, relation: Relation) -> Result<Vec<RawFamily>> {
        let tt = to_i128_pair(t)?;
        let mut seen: HashMap<FamilyKey, usize> = HashMap::new();
        let mut out = Vec::new();
        for lam in 0..self.lambdas.len() {
            for (piv, &wp) in self.we[lam].iter().enumerate() {
                let f = self.wd[lam]
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| relation.holds(sign_of(w, wp, tt)))
                    .fold(0u128, |acc, (i, _)| acc | 1 << i);
                if f == 0 {
                    continue;
                }
                let key = FamilyKey {
                    f,
                    h: self.h_masks[lam][piv],
                };
                seen.entry(key).or_insert_with(|| {
                    out.push(RawFamily { key, lam, piv });
                    out.len() - 1
                });
            }
        }
        Ok(out)
    }

    pub fn maximal(&self, t: &Rational, relation: Relation) -> Result<Vec<RawFamily>> {
        let fams = self.families(t, relation)?;
        let keep: Vec<RawFamily> = fams
            .iter()
            .filter(|a| !fams.iter().any(|b| a.key.strictly_inside(&b.key)))
            .copied()
            .collect();
        Ok(keep)
    }

    pub fn to_family(&self, raw: &RawFamily, relation: Relation, t_range: Interval) -> DestabilizingFamily {
        let pick = |mask: u128, ms: &[ExponentVector]| {
            ms.iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| m.clone())
                .collect()
        };
        DestabilizingFamily {
            lambda: self.lambdas[raw.lam].clone(),
            pivot: Pivot::Monomial(self.me[raw.piv].clone()),
            relation,
            t_range,
            f_monomials: pick(raw.key.f, &self.md),
            h_monomials: pick(raw.key.h, &self.me),
        }
    }
}

/// Maximal families over a candidate list at slope `t`, sorted by their monomial sets.
pub fn maximal_families(
    problem: &GitProblem,
    candidates: &[OnePS],
    t: &Rational,
    relation: Relation,
) -> Result<Vec<DestabilizingFamily>> {
    let engine = FamilyEngine::new(problem, candidates)?;
    let mut raw = engine.maximal(t, relation)?;
    raw.sort_by_key(|r| (r.key.f, r.key.h));
    let range = Interval::new(t.clone(), Some(t.clone()));
    Ok(raw
        .iter()
        .map(|r| engine.to_family(r, relation, range.clone()))
        .collect())
}
