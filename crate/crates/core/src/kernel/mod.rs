//! Exact arithmetic shared by every other module.

pub mod hull;
pub mod lattice;
pub mod linalg;
pub mod linear;
pub mod monomial;
pub mod one_ps;
pub mod piecewise;
pub mod polygon;
pub mod rational;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use hull::{convex_weights, in_convex_hull};
pub use linear::LinearInC;
pub use monomial::{monomial_count, monomials, ExponentVector};
pub use one_ps::{normalize_ops, OnePS};
pub use piecewise::{PiecewiseQuadratic, QuadPiece};
pub use polygon::{halfplane_vertices, polygon_area, HalfPlane, Point};
pub use rational::{parse_rational, q, qi, Rational};

use rational::{serde_rational, serde_rational_opt};

/// Interval of parameter values; `hi = None` means unbounded above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational_opt")]
    pub hi: Option<Rational>,
}

impl Interval {
    pub fn new(lo: Rational, hi: Option<Rational>) -> Self {
        Interval { lo, hi }
    }

    pub fn contains_open(&self, t: &Rational) -> bool {
        t > &self.lo && self.hi.as_ref().is_none_or(|h| t < h)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.hi {
            Some(h) => write!(f, "({}, {})", self.lo, h),
            None => write!(f, "({}, inf)", self.lo),
        }
    }
}
