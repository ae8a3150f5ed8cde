//! Gorenstein index bounds from the local volume inequality
//! `dn^2 * (4/9) * l(1-c)^2 <= (2 - c ord)^2` at a T-singularity `1/dn^2 (1, dna - 1)`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::rational::{floor_to_u64, serde_rational};
use crate::kernel::{qi, Rational};

/// Enumeration budget for the congruence branch, in values of `dn^2`.
const MAX_DN2: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// `ord >= 2`: the volume bound alone.
    HighOrder,
    /// `ord = 1`: the weight congruence of the boundary's linear term.
    Congruence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinBound {
    pub l: u32,
    #[serde(with = "serde_rational")]
    pub c: Rational,
    pub ord: u32,
    /// Largest `dn^2` allowed by the volume inequality.
    pub max_dn2: u64,
    pub branch: Branch,
    /// `(d, n)` types that survive every check.
    pub survivors: Vec<(u64, u64)>,
    pub max_index: u64,
    pub gorenstein: bool,
}

/// Index bound at a point of the boundary, where the boundary `D` satisfies `kD + K ~ 0`.
/// When `d_one` is set only the types `1/n^2 (1, na - 1)` are considered.
fn index_bound(l: u32, c: &Rational, ord: u32, k: i64, d_one: bool) -> Result<GorensteinBound> {
    if l == 0 || ord == 0 {
        return Err(Error::Domain("l and ord must be positive".into()));
    }
    if c.is_negative() || c >= &Rational::one() {
        return Err(Error::Domain(format!("c = {c} is outside [0, 1)")));
    }
    let a = qi(2) - c * qi(ord as i64);
    if !a.is_positive() {
        return Err(Error::Domain(format!("2 - c ord = {a} leaves the klt range")));
    }
    let one_minus = Rational::one() - c;
    let bound = qi(9) * &a * &a / (qi(4) * qi(l as i64) * &one_minus * &one_minus);
    let max_dn2 = floor_to_u64(&bound).unwrap_or(u64::MAX);
    if max_dn2 > MAX_DN2 {
        return Err(Error::Budget {
            what: "Gorenstein congruence enumeration".into(),
            needed: usize::try_from(max_dn2).unwrap_or(usize::MAX),
            cap: MAX_DN2 as usize,
        });
    }
    let branch = if ord >= 2 {
        Branch::HighOrder
    } else {
        Branch::Congruence
    };

    let mut survivors = Vec::new();
    let mut n = 1u64;
    while n * n <= max_dn2 {
        let d_max = if d_one { 1 } else { max_dn2 / (n * n) };
        for d in 1..=d_max {
            let m = (d * n * n) as i64;
            let ok = match branch {
                Branch::HighOrder => true,
                // Weights of u, v and K are 1, dna - 1 and -dna; D has weight dna / k.
                Branch::Congruence => (1..=n as i64).filter(|a| a.gcd(&(n as i64)) == 1).any(|a| {
                    let dna = (d * n) as i64 * a;
                    [(1i64, 0i64), (0, 1)]
                        .iter()
                        .any(|&(i, j)| (k * (i + (dna - 1) * j) - dna).rem_euclid(m).is_zero())
                }),
            };
            if ok {
                survivors.push((d, n));
            }
        }
        n += 1;
    }
    let max_index = survivors.iter().map(|&(_, n)| n).max().unwrap_or(1);
    Ok(GorensteinBound {
        l,
        c: c.clone(),
        ord,
        max_dn2,
        branch,
        survivors,
        max_index,
        gorenstein: max_index == 1,
    })
}

/// Bound for a pair `(X_0, cD_0)` smoothing to a degree-`l` del Pezzo surface with `D` anticanonical,
/// at a point where the boundary has order `ord` on the index-one cover.
pub fn gorenstein_bound(l: u32, c: &Rational, ord: u32) -> Result<GorensteinBound> {
    index_bound(l, c, ord, 1, false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deg2IndexBound {
    pub branches: Vec<GorensteinBound>,
    /// Largest index allowed before excluding `n = 3`.
    pub raw_index: u64,
    pub index: u64,
}

/// Index bound for pairs `(X, C/2 + cC')` smoothing to `(P^2, C_4/2 + cL)`. The singularities
/// are `1/n^2 (1, na - 1)` with `n != 3`, the volume is `(1-c)^2` and `3C' + K ~ 0`.
pub fn deg2_plane_index_bound(c: &Rational) -> Result<Deg2IndexBound> {
    let branches = vec![index_bound(1, c, 1, 3, true)?, index_bound(1, c, 2, 3, true)?];
    let raw_index = branches.iter().map(|b| b.max_index).max().unwrap_or(1);
    let index = branches
        .iter()
        .flat_map(|b| b.survivors.iter().map(|&(_, n)| n))
        .filter(|&n| n != 3)
        .max()
        .unwrap_or(1);
    Ok(Deg2IndexBound {
        branches,
        raw_index,
        index,
    })
}
