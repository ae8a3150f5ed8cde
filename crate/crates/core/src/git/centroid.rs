use num_traits::Signed;

use super::problem::PairSupport;
use crate::error::{Error, Result};
use crate::kernel::{in_convex_hull, q, Rational};

/// Points `m + t m'` for `m` in the support of `f` and `m'` in the support of `h`.
pub fn pair_points(pair: &PairSupport, t: &Rational) -> Vec<Vec<Rational>> {
    let mut pts = Vec::with_capacity(pair.f_support.len() * pair.h_support.len());
    for m in &pair.f_support {
        for mp in &pair.h_support {
            pts.push(
                m.0.iter()
                    .zip(&mp.0)
                    .map(|(&a, &b)| q(a as i64, 1) + t * q(b as i64, 1))
                    .collect(),
            );
        }
    }
    pts
}

/// The point `((d + t e)/(n + 1)) (1, ..., 1)`.
pub fn centroid(pair: &PairSupport, t: &Rational) -> Vec<Rational> {
    let z = (q(pair.d as i64, 1) + t * q(pair.e as i64, 1)) / q(pair.n as i64 + 1, 1);
    vec![z; pair.n + 1]
}

/// Torus semistability: the centroid lies in the convex hull of the pair's weight points.
pub fn centroid_semistable(pair: &PairSupport, t: &Rational) -> Result<bool> {
    if t.is_negative() {
        return Err(Error::Domain(format!("slope t = {t} is negative")));
    }
    in_convex_hull(&pair_points(pair, t), &centroid(pair, t))
}
