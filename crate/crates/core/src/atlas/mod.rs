//! Conversion between the GIT slope `t` and the K-moduli coefficient `c`, CM-line-bundle slopes,
//! and the K-moduli wall lists for degrees 2 to 9.
//!
//! `t` is always the ratio of the boundary weight to the surface weight of the polarization.

pub mod golden;
pub mod gorenstein;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binary::binary_walls;
use crate::error::{Error, Result};
use crate::git::{wall_chamber_decomposition, GitProblem, DEFAULT_CAP};
use crate::kernel::rational::serde_rational;
use crate::kernel::{qi, LinearInC, Rational};
use crate::kinv::{beta, load_config};

pub use gorenstein::{deg2_plane_index_bound, gorenstein_bound, Branch, Deg2IndexBound, GorensteinBound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKey {
    /// Cubic surfaces with a hyperplane section.
    Deg3Cubic,
    /// Intersections of two quadrics in `P^4` with a hyperplane section.
    Deg4Ci,
    /// Double covers of `P^2` branched along a quartic, with a line.
    Deg2Plane,
    /// Double covers of `P(1,1,4)` branched along an octic, with a quadric section.
    Deg2P114,
    Deg5,
    Deg6,
    Deg7,
    #[serde(rename = "deg8-p1xp1")]
    Deg8P1xP1,
    Deg8Blp,
    Deg9,
}

impl FamilyKey {
    pub const ALL: [FamilyKey; 10] = [
        FamilyKey::Deg3Cubic,
        FamilyKey::Deg4Ci,
        FamilyKey::Deg2Plane,
        FamilyKey::Deg2P114,
        FamilyKey::Deg5,
        FamilyKey::Deg6,
        FamilyKey::Deg7,
        FamilyKey::Deg8P1xP1,
        FamilyKey::Deg8Blp,
        FamilyKey::Deg9,
    ];

    /// Families that carry a GIT description with conversion maps.
    pub const GIT: [FamilyKey; 4] = [
        FamilyKey::Deg3Cubic,
        FamilyKey::Deg4Ci,
        FamilyKey::Deg2Plane,
        FamilyKey::Deg2P114,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKey::Deg3Cubic => "deg3-cubic",
            FamilyKey::Deg4Ci => "deg4-ci",
            FamilyKey::Deg2Plane => "deg2-plane",
            FamilyKey::Deg2P114 => "deg2-p114",
            FamilyKey::Deg5 => "deg5",
            FamilyKey::Deg6 => "deg6",
            FamilyKey::Deg7 => "deg7",
            FamilyKey::Deg8P1xP1 => "deg8-p1xp1",
            FamilyKey::Deg8Blp => "deg8-blp",
            FamilyKey::Deg9 => "deg9",
        }
    }

    pub fn degree(self) -> u32 {
        match self {
            FamilyKey::Deg2Plane | FamilyKey::Deg2P114 => 2,
            FamilyKey::Deg3Cubic => 3,
            FamilyKey::Deg4Ci => 4,
            FamilyKey::Deg5 => 5,
            FamilyKey::Deg6 => 6,
            FamilyKey::Deg7 => 7,
            FamilyKey::Deg8P1xP1 | FamilyKey::Deg8Blp => 8,
            FamilyKey::Deg9 => 9,
        }
    }

    /// The torus GIT problem behind the family. Degree 4 lives on a Grassmannian instead.
    pub fn git_problem(self) -> Option<GitProblem> {
        let (n, d, e) = match self {
            FamilyKey::Deg3Cubic => (3, 3, 1),
            FamilyKey::Deg2Plane => (2, 4, 1),
            FamilyKey::Deg2P114 => (1, 8, 2),
            _ => return None,
        };
        Some(GitProblem::new(n, d, e).expect("valid problem"))
    }

    /// Open range of `t`, with `None` for an unbounded upper end.
    pub fn t_domain(self) -> Result<(Rational, Option<Rational>)> {
        let hi = match self {
            FamilyKey::Deg3Cubic | FamilyKey::Deg4Ci => Some(qi(1)),
            FamilyKey::Deg2Plane => Some(qi(2)),
            FamilyKey::Deg2P114 => None,
            other => return Err(Error::Domain(format!("{other} has no GIT slope"))),
        };
        Ok((Rational::zero(), hi))
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKey {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyKey::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

fn check_c(c: &Rational) -> Result<()> {
    if c.is_positive() && c < &Rational::one() {
        Ok(())
    } else {
        Err(Error::Domain(format!("c = {c} is outside (0, 1)")))
    }
}

fn check_t(family: FamilyKey, t: &Rational) -> Result<()> {
    let (lo, hi) = family.t_domain()?;
    if t > &lo && hi.as_ref().is_none_or(|h| t < h) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "t = {t} is outside the slope range of {family}"
        )))
    }
}

pub fn t_of_c(family: FamilyKey, c: &Rational) -> Result<Rational> {
    check_c(c)?;
    family.t_domain()?;
    Ok(match family {
        FamilyKey::Deg3Cubic => qi(9) * c / (qi(8) + c),
        FamilyKey::Deg4Ci => qi(6) * c / (qi(5) + c),
        FamilyKey::Deg2Plane => qi(2) * c,
        FamilyKey::Deg2P114 => qi(12) * c / (Rational::one() - c),
        _ => unreachable!("checked by t_domain"),
    })
}

pub fn c_of_t(family: FamilyKey, t: &Rational) -> Result<Rational> {
    check_t(family, t)?;
    Ok(match family {
        FamilyKey::Deg3Cubic => qi(8) * t / (qi(9) - t),
        FamilyKey::Deg4Ci => qi(5) * t / (qi(6) - t),
        FamilyKey::Deg2Plane => t / qi(2),
        FamilyKey::Deg2P114 => t / (t + qi(12)),
        _ => unreachable!("checked by t_domain"),
    })
}

/// Bidegree `(a(c), b(c))` of the CM line bundle on the product of the two parameter spaces,
/// up to positive scale.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmSlope {
    pub a: LinearInC,
    pub b: LinearInC,
}

impl CmSlope {
    pub fn at(&self, c: &Rational) -> (Rational, Rational) {
        (self.a.eval(c), self.b.eval(c))
    }
}

pub fn cm_line(family: FamilyKey) -> Result<CmSlope> {
    let lin = |k0: i64, k1: i64| LinearInC::new(qi(k0), qi(k1));
    let (a, b) = match family {
        FamilyKey::Deg3Cubic => (lin(8, 1), lin(0, 9)),
        FamilyKey::Deg4Ci => (lin(10, 2), lin(0, 12)),
        // Proportional to the polarization O(1, 2c).
        FamilyKey::Deg2Plane => (lin(1, 0), lin(0, 2)),
        FamilyKey::Deg2P114 => (lin(1, -1), lin(0, 12)),
        other => return Err(Error::Domain(format!("{other} has no CM slope formula"))),
    };
    Ok(CmSlope { a, b })
}

/// CM slope at `c`, checked against the conversion map.
pub fn cm_slope(family: FamilyKey, c: &Rational) -> Result<(Rational, Rational)> {
    check_c(c)?;
    let (a, b) = cm_line(family)?.at(c);
    let t = t_of_c(family, c)?;
    if &b / &a != t {
        return Err(Error::Consistency(format!(
            "{family}: CM slope ratio {} differs from t(c) = {t}",
            &b / &a
        )));
    }
    Ok((a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "computed-GIT")]
    ComputedGit,
    #[serde(rename = "computed-beta")]
    ComputedBeta,
    #[serde(rename = "golden")]
    Golden,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ComputedGit => "computed-GIT",
            Provenance::ComputedBeta => "computed-beta",
            Provenance::Golden => "golden",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KWall {
    #[serde(with = "serde_rational")]
    pub c: Rational,
    pub provenance: Provenance,
    pub sources: Vec<String>,
}

/// Variants of degree 8, which has two deformation types.
pub const DEG8_VARIANTS: [&str; 2] = ["p1xp1", "blp"];

fn check_variant(d: u32, variant: Option<&str>) -> Result<()> {
    match (d, variant) {
        (8, Some(v)) if DEG8_VARIANTS.contains(&v) => Ok(()),
        (8, _) => Err(Error::Domain(format!(
            "degree 8 needs a variant, one of {}",
            DEG8_VARIANTS.join(", ")
        ))),
        (_, None) => Ok(()),
        (_, Some(v)) => Err(Error::Domain(format!("degree {d} has no variant {v:?}"))),
    }
}

fn merge(entries: Vec<(Rational, Provenance, String)>) -> Vec<KWall> {
    let mut by_c: BTreeMap<Rational, KWall> = BTreeMap::new();
    for (c, p, src) in entries {
        let w = by_c.entry(c.clone()).or_insert_with(|| KWall {
            c,
            provenance: p,
            sources: Vec::new(),
        });
        w.provenance = w.provenance.min(p);
        w.sources.push(src);
    }
    by_c.into_values().collect()
}

fn git_entries(
    family: FamilyKey,
    label: &str,
    t_walls: &[Rational],
    p: Provenance,
) -> Result<Vec<(Rational, Provenance, String)>> {
    t_walls
        .iter()
        .map(|t| Ok((c_of_t(family, t)?, p, format!("{label} t = {t}"))))
        .collect()
}

/// GIT walls of a family, computed from the torus problem (or the Grassmannian for degree 4
/// when that feature is enabled), otherwise taken from the golden table.
pub fn git_walls(family: FamilyKey, cap: usize) -> Result<(Vec<Rational>, Provenance)> {
    match family {
        FamilyKey::Deg2P114 => Ok((binary_walls(8, 2), Provenance::ComputedGit)),
        FamilyKey::Deg4Ci => deg4_git_walls(),
        f => {
            let problem = f
                .git_problem()
                .ok_or_else(|| Error::Domain(format!("{f} has no GIT problem")))?;
            Ok((
                wall_chamber_decomposition(&problem, cap)?.walls,
                Provenance::ComputedGit,
            ))
        }
    }
}

// The pencil engine behind the `grassmannian` feature still reports an extra wall at 1/2, so
// degree 4 stays on the tabulated walls either way.
fn deg4_git_walls() -> Result<(Vec<Rational>, Provenance)> {
    let file: golden::WallsFile = golden::load(golden::WALLS)?;
    let entry = file
        .git
        .into_iter()
        .find(|g| g.grassmannian)
        .ok_or_else(|| Error::Parse("golden walls table has no Grassmannian entry".into()))?;
    Ok((entry.walls.into_iter().map(|w| w.0).collect(), Provenance::Golden))
}

pub fn kwalls(d: u32, variant: Option<&str>) -> Result<Vec<KWall>> {
    kwalls_with_cap(d, variant, DEFAULT_CAP)
}

pub fn kwalls_with_cap(d: u32, variant: Option<&str>, cap: usize) -> Result<Vec<KWall>> {
    if !(2..=9).contains(&d) {
        return Err(Error::Domain(format!("degree {d} is outside 2..=9")));
    }
    check_variant(d, variant)?;
    let entries = match d {
        2 => {
            let mut out = Vec::new();
            for (f, label) in [
                (FamilyKey::Deg2Plane, "quartic-line"),
                (FamilyKey::Deg2P114, "binary-octic-conic"),
            ] {
                let (walls, p) = git_walls(f, cap)?;
                out.extend(git_entries(f, label, &walls, p)?);
            }
            out
        }
        3 => {
            let (walls, p) = git_walls(FamilyKey::Deg3Cubic, cap)?;
            git_entries(FamilyKey::Deg3Cubic, "cubic-surface", &walls, p)?
        }
        4 => {
            let (walls, p) = git_walls(FamilyKey::Deg4Ci, cap)?;
            git_entries(FamilyKey::Deg4Ci, "quadric-pencil", &walls, p)?
        }
        _ => curated_entries(d, variant)?,
    };
    Ok(merge(entries))
}

/// Walls for degrees 5 to 9 from the replacement table, each checked against the beta-invariant
/// of its bundled pair where there is one.
fn curated_entries(d: u32, variant: Option<&str>) -> Result<Vec<(Rational, Provenance, String)>> {
    let table: golden::ReplacementsFile = golden::load(golden::REPLACEMENTS)?;
    let mut out = Vec::new();
    for r in table
        .wall
        .iter()
        .filter(|r| r.degree == d && r.variant.as_deref() == variant)
    {
        let c = r.c.0.clone();
        match (&r.config, &r.valuation) {
            (Some(name), Some(label)) => {
                let cfg = load_config(name)?;
                let report = beta(&cfg.pair, cfg.valuation(label)?)?;
                if report.wall.as_ref() != Some(&c) {
                    return Err(Error::Model(format!(
                        "{name}: beta({label}) = {} vanishes at {:?}, but the table lists c = {c}",
                        report.beta,
                        report.wall.map(|w| w.to_string())
                    )));
                }
                out.push((
                    c,
                    Provenance::ComputedBeta,
                    format!("{name}: beta({label}) = {}", report.beta),
                ));
            }
            _ => out.push((
                c,
                Provenance::Golden,
                format!("{} ({})", r.curve, r.singularities),
            )),
        }
    }
    Ok(out)
}

/// The published wall list for a degree, as stored in the golden table.
pub fn golden_kwalls(d: u32, variant: Option<&str>) -> Result<Vec<Rational>> {
    let file: golden::WallsFile = golden::load(golden::WALLS)?;
    file.kmoduli
        .into_iter()
        .find(|k| k.degree == d && k.variant.as_deref() == variant)
        .map(|k| k.walls.into_iter().map(|w| w.0).collect())
        .ok_or_else(|| Error::Domain(format!("no golden wall list for degree {d}")))
}

/// Sample `c` values: the midpoints of the chambers cut out by `walls` in (0, 1).
pub fn chamber_midpoints(walls: &[Rational]) -> Vec<Rational> {
    let mut pts = vec![Rational::zero()];
    pts.extend(walls.iter().cloned());
    pts.push(Rational::one());
    pts.windows(2).map(|w| (&w[0] + &w[1]) / qi(2)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;

    #[test]
    fn conversion_examples() {
        assert_eq!(t_of_c(FamilyKey::Deg3Cubic, &q(2, 11)).unwrap(), q(1, 5));
        assert_eq!(c_of_t(FamilyKey::Deg2P114, &qi(2)).unwrap(), q(1, 7));
        assert_eq!(t_of_c(FamilyKey::Deg2Plane, &q(1, 2)).unwrap(), qi(1));
        assert_eq!(c_of_t(FamilyKey::Deg4Ci, &q(6, 11)).unwrap(), q(1, 2));
    }

    #[test]
    fn domains() {
        assert!(t_of_c(FamilyKey::Deg3Cubic, &qi(1)).is_err());
        assert!(t_of_c(FamilyKey::Deg3Cubic, &qi(0)).is_err());
        assert!(c_of_t(FamilyKey::Deg2Plane, &qi(2)).is_err());
        assert!(c_of_t(FamilyKey::Deg2P114, &qi(100)).is_ok());
        assert!(t_of_c(FamilyKey::Deg6, &q(1, 2)).is_err());
    }

    #[test]
    fn cm_examples() {
        assert_eq!(
            cm_slope(FamilyKey::Deg3Cubic, &q(1, 2)).unwrap(),
            (q(17, 2), q(9, 2))
        );
        assert_eq!(cm_slope(FamilyKey::Deg4Ci, &q(1, 2)).unwrap(), (qi(11), qi(6)));
        assert_eq!(cm_slope(FamilyKey::Deg2P114, &q(1, 4)).unwrap(), (q(3, 4), qi(3)));
    }

    #[test]
    fn family_names_round_trip() {
        for k in FamilyKey::ALL {
            assert_eq!(k.name().parse::<FamilyKey>().unwrap(), k);
            assert_eq!(serde_json::to_string(&k).unwrap(), format!("\"{}\"", k.name()));
        }
    }

    #[test]
    fn curated_degrees() {
        let w = kwalls(7, None).unwrap();
        assert_eq!(
            w.iter().map(|w| w.c.clone()).collect::<Vec<_>>(),
            golden_kwalls(7, None).unwrap()
        );
        assert!(w.iter().all(|w| w.provenance == Provenance::ComputedBeta));
        assert!(kwalls(9, None).unwrap().is_empty());
        assert!(kwalls(8, None).is_err());
        assert!(kwalls(5, Some("blp")).is_err());
    }
}
