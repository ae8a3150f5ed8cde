use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::family::{FamilyEngine, Relation};
use super::problem::GitProblem;
use crate::error::{Error, Result};
use num_integer::Integer;

use crate::kernel::lattice::{det, kernel_line, normalize_direction};
use crate::kernel::{monomial_count, normalize_ops, q, ExponentVector, OnePS, Rational};

pub const DEFAULT_CAP: usize = 35;

/// Pruned candidate subgroups for a problem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSet {
    pub problem: GitProblem,
    /// Number of subgroups produced by the tie systems before pruning.
    pub raw_count: usize,
    /// Sorted in decreasing lexicographic order of weights.
    pub candidates: Vec<OnePS>,
}

fn tie_directions(ms: &[ExponentVector], out: &mut BTreeSet<Vec<i64>>) {
    for (a, b) in ms.iter().tuple_combinations() {
        let diff: Vec<i64> = a.0.iter().zip(&b.0).map(|(&x, &y)| x as i64 - y as i64).collect();
        out.insert(normalize_direction(&diff));
    }
}

/// Every normalized subgroup that is the unique (up to sign) solution of `n - 1` independent
/// monomial ties together with the trace condition, in decreasing order.
pub fn raw_candidates(problem: &GitProblem) -> Vec<OnePS> {
    let mut ties = BTreeSet::new();
    tie_directions(&problem.degree_d_monomials(), &mut ties);
    tie_directions(&problem.degree_e_monomials(), &mut ties);
    let ties: Vec<Vec<i64>> = ties.into_iter().collect();
    let m = problem.n + 1;
    let ones = vec![1i64; m];
    if problem.n == 1 {
        return kernel_line(&[ones]).map(|r| signed_pair(&r)).unwrap_or_default();
    }

    // The last tie of each system is expanded against the minors of the earlier rows, which
    // are computed once per prefix.
    let drops: Vec<(usize, usize)> = (0..m).tuple_combinations().collect();
    let mut minor = vec![0i128; m * m];
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut v = vec![0i64; m];
    let k = problem.n - 1;
    for prefix in (0..ties.len()).combinations(k - 1) {
        let start = prefix.last().map_or(0, |&i| i + 1);
        let mut rows: Vec<&[i64]> = prefix.iter().map(|&i| ties[i].as_slice()).collect();
        rows.push(&ones);
        for &(a, b) in &drops {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| {
                    (0..m)
                        .filter(|&j| j != a && j != b)
                        .map(|j| r[j] as i128)
                        .collect()
                })
                .collect();
            let d = det(sub);
            minor[a * m + b] = d;
            minor[b * m + a] = d;
        }
        for tie in &ties[start..] {
            for (j, out) in v.iter_mut().enumerate() {
                let mut acc = 0i128;
                for (c, &x) in tie.iter().enumerate() {
                    if c == j || x == 0 {
                        continue;
                    }
                    let pos = if c < j { c } else { c - 1 };
                    let term = x as i128 * minor[j * m + c];
                    acc += if (k + pos).is_multiple_of(2) { term } else { -term };
                }
                if j % 2 == 1 {
                    acc = -acc;
                }
                *out = i64::try_from(acc).expect("tie minors fit in i64");
            }
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
            for sign in [1, -1] {
                let mut key: Vec<i64> = v.iter().map(|&x| sign * x / g).collect();
                key.sort_unstable_by(|a, b| b.cmp(a));
                if !seen.contains(&key) {
                    seen.insert(key);
                }
            }
        }
    }
    let mut out: Vec<OnePS> = seen.iter().filter_map(|w| normalize_ops(w).ok()).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn signed_pair(r: &[i64]) -> Vec<OnePS> {
    let neg: Vec<i64> = r.iter().map(|x| -x).collect();
    let mut out: Vec<OnePS> = [r.to_vec(), neg]
        .iter()
        .filter_map(|v| normalize_ops(v).ok())
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// For linear `h`: the smallest slope beyond which some candidate destabilizes every pair.
pub fn candidate_t_max(problem: &GitProblem, lambdas: &[OnePS]) -> Option<Rational> {
    if problem.e != 1 {
        return None;
    }
    lambdas
        .iter()
        .filter_map(|l| {
            let r = l.weights();
            let last = *r.last()?;
            (last < 0).then(|| q(problem.weight_degree() as i64 * r[0], -last))
        })
        .min()
}

/// Slopes in the open domain where some monomial weight balances some pivot weight.
pub fn candidate_walls(problem: &GitProblem, lambdas: &[OnePS]) -> Result<Vec<Rational>> {
    let engine = FamilyEngine::new(problem, lambdas)?;
    let mut walls = BTreeSet::new();
    for lam in 0..lambdas.len() {
        for &wp in engine.pivot_weights(lam) {
            if wp == 0 {
                continue;
            }
            for &w in engine.monomial_weights(lam) {
                let t = q(-w, wp);
                if problem.t_domain.contains_open(&t) {
                    walls.insert(t);
                }
            }
        }
    }
    Ok(walls.into_iter().collect())
}

/// Candidate walls plus midpoints of consecutive ones (and a point past the last wall when unbounded).
pub(crate) fn sample_points(problem: &GitProblem, walls: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut ends = vec![problem.t_domain.lo.clone()];
    ends.extend(walls.iter().cloned());
    let last = match problem.t_max() {
        Some(h) => h.clone(),
        None => ends.last().cloned().unwrap_or_else(|| q(0, 1)) + q(2, 1),
    };
    ends.push(last);
    let mids = ends.windows(2).map(|w| (&w[0] + &w[1]) / q(2, 1)).collect();
    (walls.to_vec(), mids)
}

/// Candidate subgroups after pruning those that never represent a maximal family.
///
/// Fails with a budget error when the number of degree-`d` monomials exceeds `cap`.
pub fn enumerate_candidates(problem: &GitProblem, cap: usize) -> Result<CandidateSet> {
    let needed = monomial_count(problem.n, problem.d);
    if needed > cap {
        return Err(Error::Budget {
            what: format!("degree-{} monomials in {} variables", problem.d, problem.n + 1),
            needed,
            cap,
        });
    }
    let raw = raw_candidates(problem);
    let walls = candidate_walls(problem, &raw)?;
    let (walls, mids) = sample_points(problem, &walls);
    let engine = FamilyEngine::new(problem, &raw)?;
    let mut keep = BTreeSet::new();
    for t in walls.iter().chain(&mids) {
        for rel in [Relation::Closed, Relation::Strict] {
            for f in engine.maximal(t, rel)? {
                keep.insert(raw[f.lam].clone());
            }
        }
    }
    let duals: Vec<OnePS> = keep.iter().map(OnePS::dual).collect();
    keep.extend(duals);
    Ok(CandidateSet {
        problem: problem.clone(),
        raw_count: raw.len(),
        candidates: keep.into_iter().rev().collect(),
    })
}
