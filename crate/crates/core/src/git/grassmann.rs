//! Degree-4 walls from the Grassmannian embedding.
//!
//! A pencil of quadrics in `P^4` is a point of `Gr(2, V)` with `V` spanned by the 15 quadric
//! monomials. Its Plucker coordinate `p_{m m'}` has torus weight `w(m) + w(m')`. The Plucker
//! relations mean that an arbitrary set of coordinates is not the support of a pencil, so the
//! families here are the coordinate Schubert cells
//! `F(A, B) = { pencils inside span A meeting span B }` for monomial sets `B ⊆ A`. A generic
//! member of `F(A, B)` has largest Plucker weight `max w(A) + max w(B)`, or the sum of the two
//! largest weights of `A` when `B = A`. `F(A, B) ⊆ F(A', B')` exactly when `A ⊆ A'` and either
//! `B ⊆ B'` or at most one monomial of `A` lies outside `B'`.
//!
//! Maximal cells are compared up to coordinate permutations, which lie in the group.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use super::candidates::raw_candidates;
use super::problem::GitProblem;
use crate::error::Result;
use crate::kernel::rational::to_i128_pair;
use crate::kernel::{monomials, q, ExponentVector, OnePS, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct CellKey {
    a: u16,
    b: u16,
    h: u8,
}

impl CellKey {
    fn new(a: u16, b: u16, h: u8) -> Self {
        // F(A, B) is all of Gr(2, span A) once B misses at most one monomial of A.
        let b = if (a & !b).count_ones() <= 1 { a } else { b };
        CellKey { a, b, h }
    }

    fn inside(&self, o: &CellKey) -> bool {
        self.h & !o.h == 0 && self.a & !o.a == 0 && (self.b & !o.b == 0 || (self.a & !o.b).count_ones() <= 1)
    }

    fn size(&self) -> u32 {
        self.a.count_ones() + self.b.count_ones() + self.h.count_ones()
    }
}

/// Coordinate permutations acting on quadric-monomial and coordinate bit masks.
struct Symmetries {
    quadric: Vec<[u8; 15]>,
    coord: Vec<[u8; 5]>,
}

impl Symmetries {
    fn new(quadrics: &[ExponentVector]) -> Self {
        let index: HashMap<&ExponentVector, usize> =
            quadrics.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut quadric = Vec::new();
        let mut coord = Vec::new();
        for p in (0..5usize).permutations(5) {
            let mut qm = [0u8; 15];
            for (i, m) in quadrics.iter().enumerate() {
                let mut e = vec![0; 5];
                for (j, &x) in m.0.iter().enumerate() {
                    e[p[j]] = x;
                }
                qm[i] = index[&ExponentVector(e)] as u8;
            }
            let mut cm = [0u8; 5];
            for (j, &pj) in p.iter().enumerate() {
                cm[j] = pj as u8;
            }
            quadric.push(qm);
            coord.push(cm);
        }
        Symmetries { quadric, coord }
    }

    fn apply(&self, g: usize, k: &CellKey) -> CellKey {
        let qm = &self.quadric[g];
        let cm = &self.coord[g];
        let map16 = |m: u16| {
            (0..15)
                .filter(|&i| m >> i & 1 == 1)
                .fold(0u16, |acc, i| acc | 1 << qm[i])
        };
        let map8 = |m: u8| {
            (0..5)
                .filter(|&i| m >> i & 1 == 1)
                .fold(0u8, |acc, i| acc | 1 << cm[i])
        };
        CellKey {
            a: map16(k.a),
            b: map16(k.b),
            h: map8(k.h),
        }
    }

    fn canonical(&self, k: &CellKey) -> CellKey {
        (0..self.quadric.len())
            .map(|g| self.apply(g, k))
            .min()
            .expect("nonempty group")
    }
}

/// End of a slope interval: `num / den` with `den > 0`, and whether it is included.
#[derive(Clone, Copy, Debug)]
struct End(i128, i128, bool);

impl End {
    fn new(num: i64, den: i64, included: bool) -> Self {
        let s = den.signum() as i128;
        End(s * num as i128, s * den as i128, included)
    }

    fn cmp(&self, t: &(i128, i128)) -> Ordering {
        (self.0 * t.1).cmp(&(t.0 * self.1))
    }
}

/// Weights of one subgroup on the quadric monomials and on the coordinates.
struct Weighted {
    /// Distinct quadric weights, increasing, with the mask and count of monomials at or below each.
    levels: Vec<(i64, u16, u32)>,
    /// Distinct coordinate weights with the mask of coordinates at or below each.
    pivots: Vec<(i64, u8)>,
}

impl Weighted {
    fn new(r: &[i64], quadrics: &[ExponentVector]) -> Self {
        let w: Vec<i64> = quadrics.iter().map(|m| m.weight_unchecked(r)).collect();
        let vals: BTreeSet<i64> = w.iter().copied().collect();
        let levels = vals
            .iter()
            .map(|&v| {
                let mask = (0..w.len()).filter(|&i| w[i] <= v).fold(0u16, |m, i| m | 1 << i);
                (v, mask, mask.count_ones())
            })
            .collect();
        let pv: BTreeSet<i64> = r.iter().copied().collect();
        let pivots = pv
            .iter()
            .map(|&p| {
                (
                    p,
                    (0..r.len()).filter(|&j| r[j] <= p).fold(0u8, |m, j| m | 1 << j),
                )
            })
            .collect();
        Weighted { levels, pivots }
    }

    /// Largest generic Plucker weight of `F(A_i, B_j)` for level indices `j <= i`.
    fn top(&self, i: usize, j: usize) -> Option<i64> {
        let (wa, _, na) = self.levels[i];
        if i > j {
            return Some(wa + self.levels[j].0);
        }
        let below = if i == 0 { 0 } else { self.levels[i - 1].2 };
        if na - below >= 2 {
            Some(2 * wa)
        } else if i > 0 {
            Some(wa + self.levels[i - 1].0)
        } else {
            None
        }
    }

    fn balancing_slopes(&self, lo: &Rational, hi: &Rational, out: &mut BTreeSet<Rational>) {
        for &(wp, _) in &self.pivots {
            if wp == 0 {
                continue;
            }
            for i in 0..self.levels.len() {
                for j in 0..=i {
                    if let Some(w) = self.top(i, j) {
                        let t = q(-w, wp);
                        if &t > lo && &t < hi {
                            out.insert(t);
                        }
                    }
                }
            }
        }
    }

    /// For each pivot and `B`-level, the largest strictly destabilized cell as a function of the
    /// slope, reported piecewise as `(cell, lower end, upper end)`. The inequality
    /// `top + t w_p < 0` holds below `-top / w_p` when `w_p > 0` and above it when `w_p < 0`.
    fn pieces(&self, mut emit: impl FnMut(CellKey, Option<End>, Option<End>)) {
        let n = self.levels.len();
        for &(wp, h) in &self.pivots {
            for j in 0..n {
                let key = |i: usize| CellKey::new(self.levels[i].1, self.levels[j].1, h);
                let tops = (j..n).rev().filter_map(|i| self.top(i, j).map(|w| (i, w)));
                match wp.signum() {
                    0 => {
                        if let Some((i, _)) = tops.into_iter().find(|&(_, w)| w < 0) {
                            emit(key(i), None, None);
                        }
                    }
                    1 => {
                        // Thresholds grow as i falls; cell i wins on [tau_{i+1}, tau_i).
                        let mut lower = None;
                        for (i, w) in tops {
                            emit(key(i), lower, Some(End::new(-w, wp, false)));
                            lower = Some(End::new(-w, wp, true));
                        }
                    }
                    _ => {
                        // Thresholds fall with i; cell i wins on (sigma_i, sigma_{i+1}].
                        let mut upper = None;
                        for (i, w) in tops {
                            emit(key(i), Some(End::new(-w, wp, false)), upper);
                            upper = Some(End::new(-w, wp, true));
                        }
                    }
                }
            }
        }
    }
}

/// Walls and the data behind them for pencils of quadrics in `P^4` with a hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilWalls {
    pub candidates: usize,
    pub candidate_walls: Vec<Rational>,
    pub walls: Vec<Rational>,
}

/// Walls on the slope domain `(0, 1)`.
///
/// Samples alternate between chamber midpoints (even indices) and candidate walls (odd
/// indices). Every threshold is a candidate wall, so at a midpoint the strict and closed
/// families coincide and strict families suffice everywhere.
pub fn quadric_pencil_decomposition() -> Result<PencilWalls> {
    let problem = GitProblem::pencil(4, 2)?;
    let quadrics = monomials(4, 2);
    let lambdas: Vec<OnePS> = raw_candidates(&problem);
    let weighted: Vec<Weighted> = lambdas
        .iter()
        .map(|l| Weighted::new(l.weights(), &quadrics))
        .collect();
    let (lo, hi) = (q(0, 1), problem.t_max().cloned().unwrap_or_else(|| q(1, 1)));
    let mut cw = BTreeSet::new();
    for w in &weighted {
        w.balancing_slopes(&lo, &hi, &mut cw);
    }
    let cw: Vec<Rational> = cw.into_iter().collect();
    let mut ends = vec![lo];
    ends.extend(cw.iter().cloned());
    ends.push(hi);
    let mut samples = Vec::with_capacity(2 * cw.len() + 1);
    for (i, e) in ends.windows(2).enumerate() {
        samples.push(to_i128_pair(&((&e[0] + &e[1]) / q(2, 1)))?);
        if let Some(t) = cw.get(i) {
            samples.push(to_i128_pair(t)?);
        }
    }
    let words = samples.len().div_ceil(64);

    // One bit row per distinct cell, marking the samples where it is destabilized.
    let mut index: HashMap<CellKey, usize> = HashMap::new();
    let mut cells: Vec<CellKey> = Vec::new();
    let mut bits: Vec<u64> = Vec::new();
    for w in &weighted {
        w.pieces(|key, lower, upper| {
            let first = lower.map_or(0, |e| {
                samples.partition_point(|s| if e.2 { e.cmp(s).is_gt() } else { e.cmp(s).is_ge() })
            });
            let end = upper.map_or(samples.len(), |e| {
                samples.partition_point(|s| if e.2 { e.cmp(s).is_ge() } else { e.cmp(s).is_gt() })
            });
            if first >= end {
                return;
            }
            let k = *index.entry(key).or_insert_with(|| {
                cells.push(key);
                bits.resize(bits.len() + words, 0);
                cells.len() - 1
            });
            let row = &mut bits[k * words..(k + 1) * words];
            for s in first..end {
                row[s / 64] |= 1 << (s % 64);
            }
        });
    }

    let sym = Symmetries::new(&quadrics);
    let mut by_size: Vec<usize> = (0..cells.len()).collect();
    by_size.sort_by_key(|&k| std::cmp::Reverse(cells[k].size()));
    let maximal_at = |s: usize| -> BTreeSet<CellKey> {
        let mut keep: Vec<CellKey> = Vec::new();
        for &k in &by_size {
            if bits[k * words + s / 64] >> (s % 64) & 1 == 1 && !keep.iter().any(|o| cells[k].inside(o)) {
                keep.push(cells[k]);
            }
        }
        let canon: Vec<CellKey> = keep.iter().map(|k| sym.canonical(k)).collect();
        keep.iter()
            .enumerate()
            .filter(|&(i, k)| {
                !keep.iter().enumerate().any(|(j, o)| {
                    canon[j] != canon[i] && (0..sym.quadric.len()).any(|g| k.inside(&sym.apply(g, o)))
                })
            })
            .map(|(i, _)| canon[i])
            .collect()
    };
    let families: Vec<BTreeSet<CellKey>> = (0..samples.len()).map(maximal_at).collect();
    let walls = cw
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            let (left, here, right) = (&families[2 * i], &families[2 * i + 1], &families[2 * i + 2]);
            left != right || here != left || here != right
        })
        .map(|(_, t)| t.clone())
        .collect();
    Ok(PencilWalls {
        candidates: lambdas.len(),
        candidate_walls: cw,
        walls,
    })
}

pub fn quadric_pencil_walls() -> Result<Vec<Rational>> {
    Ok(quadric_pencil_decomposition()?.walls)
}
