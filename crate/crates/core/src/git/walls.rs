use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::candidates::{candidate_walls, enumerate_candidates, sample_points, CandidateSet};
use super::family::{DestabilizingFamily, FamilyEngine, FamilyKey, Relation};
use super::problem::GitProblem;
use crate::error::Result;
use crate::kernel::rational::serde_rational_vec;
use crate::kernel::{Interval, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub interval: Interval,
    /// Maximal closed families, constant across the chamber.
    pub families: Vec<DestabilizingFamily>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallChamberDecomposition {
    pub problem: GitProblem,
    #[serde(with = "serde_rational_vec")]
    pub walls: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub candidate_walls: Vec<Rational>,
    pub candidates: CandidateSet,
    pub chambers: Vec<Chamber>,
}

impl WallChamberDecomposition {
    pub fn t_max(&self) -> Option<&Rational> {
        self.problem.t_max()
    }
}

fn key_set(engine: &FamilyEngine, t: &Rational, rel: Relation) -> Result<BTreeSet<(u128, u128)>> {
    Ok(engine
        .maximal(t, rel)?
        .into_iter()
        .map(|f| {
            let FamilyKey { f, h } = f.key;
            (f, h)
        })
        .collect())
}

/// Genuine walls and chambers of the variation of GIT.
///
/// A candidate wall is genuine when the maximal closed families differ on its two sides,
/// or when the families destabilized strictly at the wall differ from those on either side.
pub fn wall_chamber_decomposition(problem: &GitProblem, cap: usize) -> Result<WallChamberDecomposition> {
    let candidates = enumerate_candidates(problem, cap)?;
    let lambdas = &candidates.candidates;
    let cwalls = candidate_walls(problem, lambdas)?;
    let (cwalls, mids) = sample_points(problem, &cwalls);
    let engine = FamilyEngine::new(problem, lambdas)?;

    let closed: Vec<_> = mids
        .iter()
        .map(|t| key_set(&engine, t, Relation::Closed))
        .collect::<Result<_>>()?;
    let strict_mid: Vec<_> = mids
        .iter()
        .map(|t| key_set(&engine, t, Relation::Strict))
        .collect::<Result<_>>()?;
    let mut walls = Vec::new();
    for (i, t) in cwalls.iter().enumerate() {
        let strict_here = key_set(&engine, t, Relation::Strict)?;
        if closed[i] != closed[i + 1] || strict_here != strict_mid[i] || strict_here != strict_mid[i + 1] {
            walls.push(t.clone());
        }
    }

    let mut chambers = Vec::new();
    let mut lo = problem.t_domain.lo.clone();
    let bounds: Vec<Option<Rational>> = walls
        .iter()
        .cloned()
        .map(Some)
        .chain(std::iter::once(problem.t_max().cloned()))
        .collect();
    for hi in bounds {
        // Any midpoint inside the chamber represents it.
        let idx = mids
            .iter()
            .position(|m| m > &lo && hi.as_ref().is_none_or(|h| m < h))
            .expect("every chamber contains a sample");
        let interval = Interval::new(lo.clone(), hi.clone());
        let mut raw = engine.maximal(&mids[idx], Relation::Closed)?;
        raw.sort_by_key(|r| (r.key.f, r.key.h));
        let families = raw
            .iter()
            .map(|r| engine.to_family(r, Relation::Closed, interval.clone()))
            .collect();
        chambers.push(Chamber { interval, families });
        if let Some(h) = hi {
            lo = h;
        }
    }

    Ok(WallChamberDecomposition {
        problem: problem.clone(),
        walls,
        candidate_walls: cwalls,
        candidates,
        chambers,
    })
}
