//! Exact planar geometry: polygons as vertex sets and half-plane intersections.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{q, serde_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(q(x, 1), q(y, 1))
    }

    pub fn dot(&self, v: [i64; 2]) -> Rational {
        &self.x * q(v[0], 1) + &self.y * q(v[1], 1)
    }
}

/// `a x + b y >= c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl HalfPlane {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        HalfPlane { a, b, c }
    }

    pub fn contains(&self, p: &Point) -> bool {
        &self.a * &p.x + &self.b * &p.y >= self.c
    }

    pub fn slack(&self, p: &Point) -> Rational {
        &self.a * &p.x + &self.b * &p.y - &self.c
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

/// Vertices sorted counter-clockwise around their centroid, duplicates removed.
pub fn sort_ccw(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let n = q(pts.len() as i64, 1);
    let cx: Rational = pts.iter().map(|p| p.x.clone()).sum::<Rational>() / &n;
    let cy: Rational = pts.iter().map(|p| p.y.clone()).sum::<Rational>() / &n;
    let centre = Point::new(cx, cy);
    let half = |p: &Point| {
        let dy = &p.y - &centre.y;
        let dx = &p.x - &centre.x;
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    pts.sort_by(|a, b| {
        half(a).cmp(&half(b)).then_with(|| {
            let c = cross(&centre, a, b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
    pts
}

/// Area of the convex polygon with the given vertex set (in any order).
pub fn polygon_area(points: &[Point]) -> Rational {
    let pts = sort_ccw(points);
    if pts.len() < 3 {
        return Rational::zero();
    }
    let mut twice = Rational::zero();
    for i in 0..pts.len() {
        let a = &pts[i];
        let b = &pts[(i + 1) % pts.len()];
        twice += &a.x * &b.y - &a.y * &b.x;
    }
    twice.abs() / q(2, 1)
}

/// Vertices of the bounded region cut out by the half-planes (empty if infeasible).
pub fn halfplane_vertices(hps: &[HalfPlane]) -> Vec<Point> {
    let mut out = Vec::new();
    for i in 0..hps.len() {
        for j in i + 1..hps.len() {
            let (h, k) = (&hps[i], &hps[j]);
            let det = &h.a * &k.b - &h.b * &k.a;
            if det.is_zero() {
                continue;
            }
            let x = (&h.c * &k.b - &h.b * &k.c) / &det;
            let y = (&h.a * &k.c - &h.c * &k.a) / &det;
            let p = Point::new(x, y);
            if hps.iter().all(|g| g.contains(&p)) {
                out.push(p);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_and_square() {
        let tri = [Point::int(-1, -1), Point::int(2, -1), Point::int(-1, 2)];
        assert_eq!(polygon_area(&tri), q(9, 2));
        let sq = [
            Point::int(1, 1),
            Point::int(0, 0),
            Point::int(1, 0),
            Point::int(0, 1),
        ];
        assert_eq!(polygon_area(&sq), q(1, 1));
    }

    #[test]
    fn anticanonical_polygon_of_p2() {
        let hps: Vec<HalfPlane> = [[1, 0], [0, 1], [-1, -1]]
            .iter()
            .map(|v| HalfPlane::new(q(v[0], 1), q(v[1], 1), q(-1, 1)))
            .collect();
        let v = halfplane_vertices(&hps);
        assert_eq!(v.len(), 3);
        assert_eq!(polygon_area(&v) * q(2, 1), q(9, 1));
    }
}
