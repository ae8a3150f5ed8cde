//! Torus-level VGIT for pairs of hypersurfaces.

pub mod candidates;
pub mod centroid;
pub mod descriptor;
pub mod family;
#[cfg(feature = "grassmannian")]
pub mod grassmann;
pub mod problem;
pub mod walls;

pub use candidates::{candidate_walls, enumerate_candidates, raw_candidates, CandidateSet, DEFAULT_CAP};
pub use centroid::centroid_semistable;
pub use descriptor::{load_problem, parse_problem, ProblemFile};
pub use family::{destabilizing_family, maximal_families, DestabilizingFamily, Pivot, Relation};
pub use problem::{mu_t, weight, GitProblem, PairSupport};
pub use walls::{wall_chamber_decomposition, Chamber, WallChamberDecomposition};
