//! Complete toric surfaces given by their rays, and volumes of torus-invariant divisors.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ns::{NegativeCurve, NsSurface};
use crate::error::{check_len, Error, Result};
use crate::kernel::lattice::primitive;
use crate::kernel::linalg::solve;
use crate::kernel::{
    halfplane_vertices, polygon_area, qi, HalfPlane, PiecewiseQuadratic, Point, QuadPiece, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricSurface {
    pub name: String,
    /// Primitive rays in counter-clockwise order.
    pub rays: Vec<[i64; 2]>,
    pub labels: Vec<String>,
}

pub fn det(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn angle_cmp(a: [i64; 2], b: [i64; 2]) -> Ordering {
    let half = |v: [i64; 2]| if v[1] > 0 || (v[1] == 0 && v[0] > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&det(a, b)))
}

/// Validates and sorts the rays of a complete fan.
pub fn build_toric(name: &str, rays: &[[i64; 2]], labels: Option<Vec<String>>) -> Result<ToricSurface> {
    let labels = labels.unwrap_or_else(|| (0..rays.len()).map(|i| format!("D{i}")).collect());
    check_len(rays.len(), labels.len())?;
    if rays.len() < 3 {
        return Err(Error::Fan(format!(
            "{} rays cannot span a complete fan",
            rays.len()
        )));
    }
    for r in rays {
        if primitive(r) != r.to_vec() || *r == [0, 0] {
            return Err(Error::Fan(format!("ray ({}, {}) is not primitive", r[0], r[1])));
        }
    }
    let mut pairs: Vec<([i64; 2], String)> = rays.iter().copied().zip(labels).collect();
    pairs.sort_by(|a, b| angle_cmp(a.0, b.0));
    for w in pairs.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::Fan(format!("ray ({}, {}) repeated", w[0].0[0], w[0].0[1])));
        }
    }
    let names: BTreeSet<&String> = pairs.iter().map(|p| &p.1).collect();
    if names.len() != pairs.len() {
        return Err(Error::Fan("ray labels must be distinct".into()));
    }
    let k = pairs.len();
    for i in 0..k {
        let (a, b) = (pairs[i].0, pairs[(i + 1) % k].0);
        if det(a, b) <= 0 {
            return Err(Error::Fan(format!(
                "rays ({}, {}) and ({}, {}) do not bound a strictly convex cone",
                a[0], a[1], b[0], b[1]
            )));
        }
    }
    let (rays, labels) = pairs.into_iter().unzip();
    Ok(ToricSurface {
        name: name.to_string(),
        rays,
        labels,
    })
}

/// Location of a lattice vector in the fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePosition {
    pub i: usize,
    pub j: usize,
    /// `v = a u_i + b u_j` with `a, b >= 0`.
    pub a: Rational,
    pub b: Rational,
}

impl ToricSurface {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Fan(format!("no ray labelled {label:?} on {}", self.name)))
    }

    pub fn ray_index(&self, v: [i64; 2]) -> Option<usize> {
        self.rays.iter().position(|&r| r == v)
    }

    fn next(&self, i: usize) -> usize {
        (i + 1) % self.len()
    }

    fn prev(&self, i: usize) -> usize {
        (i + self.len() - 1) % self.len()
    }

    pub fn cone_of(&self, v: [i64; 2]) -> Result<ConePosition> {
        if v == [0, 0] {
            return Err(Error::Degenerate("zero vector has no cone".into()));
        }
        for i in 0..self.len() {
            let j = self.next(i);
            let (ui, uj) = (self.rays[i], self.rays[j]);
            if det(ui, v) >= 0 && det(v, uj) >= 0 {
                let d = qi(det(ui, uj));
                return Ok(ConePosition {
                    i,
                    j,
                    a: qi(det(v, uj)) / &d,
                    b: qi(det(ui, v)) / &d,
                });
            }
        }
        unreachable!("a complete fan covers the plane")
    }

    /// Log discrepancy of the toric valuation `v` over the surface (with zero boundary).
    pub fn log_discrepancy(&self, v: [i64; 2]) -> Result<Rational> {
        let c = self.cone_of(v)?;
        Ok(c.a + c.b)
    }

    /// Orders of vanishing of the boundary divisors `D_rho` along `v`.
    pub fn divisor_orders(&self, v: [i64; 2]) -> Result<Vec<Rational>> {
        let c = self.cone_of(v)?;
        let mut out = vec![Rational::zero(); self.len()];
        out[c.i] = c.a;
        out[c.j] += c.b;
        Ok(out)
    }

    pub fn anticanonical(&self) -> Vec<Rational> {
        vec![Rational::one(); self.len()]
    }

    fn halfplanes(&self, d: &[Rational]) -> Vec<HalfPlane> {
        self.rays
            .iter()
            .zip(d)
            .map(|(u, a)| HalfPlane::new(qi(u[0]), qi(u[1]), -a))
            .collect()
    }

    /// Vertices of `P_D = { m : <m, u_rho> >= -a_rho }`.
    pub fn polytope(&self, d: &[Rational]) -> Result<Vec<Point>> {
        check_len(self.len(), d.len())?;
        Ok(halfplane_vertices(&self.halfplanes(d)))
    }

    /// `vol(D) = 2 area(P_D)`.
    pub fn volume(&self, d: &[Rational]) -> Result<Rational> {
        Ok(polygon_area(&self.polytope(d)?) * qi(2))
    }

    /// Intersection number `D_i . D_j`.
    pub fn intersection(&self, i: usize, j: usize) -> Rational {
        let k = self.len();
        if i == j {
            let (u, v, w) = (self.rays[self.prev(i)], self.rays[i], self.rays[self.next(i)]);
            -qi(det(u, w)) / (qi(det(u, v)) * qi(det(v, w)))
        } else if j == (i + 1) % k {
            Rational::one() / qi(det(self.rays[i], self.rays[j]))
        } else if i == (j + 1) % k {
            Rational::one() / qi(det(self.rays[j], self.rays[i]))
        } else {
            Rational::zero()
        }
    }

    pub fn intersect(&self, a: &[Rational], b: &[Rational]) -> Result<Rational> {
        check_len(self.len(), a.len())?;
        check_len(self.len(), b.len())?;
        let mut s = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    s += ai * bj * self.intersection(i, j);
                }
            }
        }
        Ok(s)
    }

    /// Nef toric divisors are exactly those whose facet inequalities are all tight on `P_D`.
    pub fn is_nef(&self, d: &[Rational]) -> Result<bool> {
        let poly = self.polytope(d)?;
        if poly.is_empty() {
            return Ok(d.iter().all(Zero::is_zero));
        }
        Ok(self
            .rays
            .iter()
            .zip(d)
            .all(|(u, a)| poly.iter().map(|p| p.dot(*u)).min().unwrap() == -a))
    }

    /// Coefficient of the exceptional divisor `E_v` in the pullback of `d`.
    pub fn pullback_coefficient(&self, d: &[Rational], v: [i64; 2]) -> Result<Rational> {
        check_len(self.len(), d.len())?;
        let c = self.cone_of(v)?;
        Ok(c.a * &d[c.i] + c.b * &d[c.j])
    }

    /// Blow-up of the fixed point of the cone `(i, j)` inserting `w1 u_i + w2 u_j`.
    /// Returns the new surface and the index of the exceptional ray.
    pub fn weighted_blowup(&self, i: usize, j: usize, w1: i64, w2: i64) -> Result<(ToricSurface, usize)> {
        let k = self.len();
        if i >= k || j >= k {
            return Err(Error::Fan("ray index out of range".into()));
        }
        if w1 < 1 || w2 < 1 {
            return Err(Error::Fan("blow-up weights must be positive".into()));
        }
        if self.next(i) != j && self.next(j) != i {
            return Err(Error::Fan(format!(
                "{} and {} do not span a cone",
                self.labels[i], self.labels[j]
            )));
        }
        let (ui, uj) = (self.rays[i], self.rays[j]);
        let v = [w1 * ui[0] + w2 * uj[0], w1 * ui[1] + w2 * uj[1]];
        if primitive(&v) != v.to_vec() {
            return Err(Error::Fan(format!(
                "weights ({w1}, {w2}) give the non-primitive vector ({}, {})",
                v[0], v[1]
            )));
        }
        let label = format!("E({},{})", v[0], v[1]);
        self.insert_ray(v, &label)
    }

    /// Subdivides the cone containing `v` by the primitive vector `v`.
    pub fn insert_ray(&self, v: [i64; 2], label: &str) -> Result<(ToricSurface, usize)> {
        if self.ray_index(v).is_some() {
            return Err(Error::Fan(format!("({}, {}) is already a ray", v[0], v[1])));
        }
        let mut rays = self.rays.clone();
        let mut labels = self.labels.clone();
        rays.push(v);
        labels.push(label.to_string());
        let y = build_toric(
            &format!("{} blown up at ({}, {})", self.name, v[0], v[1]),
            &rays,
            Some(labels),
        )?;
        let idx = y.ray_index(v).expect("inserted ray");
        Ok((y, idx))
    }

    /// `vol(d - x D_idx)` as a function of `x`, for any effective torus-invariant `d`.
    pub fn class_volume_profile(&self, d: &[Rational], e: &[Rational]) -> Result<PiecewiseQuadratic> {
        check_len(self.len(), d.len())?;
        check_len(self.len(), e.len())?;
        let at = |x: &Rational| -> Result<Rational> {
            let dx: Vec<Rational> = d.iter().zip(e).map(|(a, b)| a - x * b).collect();
            self.volume(&dx)
        };
        // Combinatorial changes happen where three facet lines meet or two opposite facets collide.
        let k = self.len();
        let line = |r: usize| (qi(self.rays[r][0]), qi(self.rays[r][1]), -&d[r], e[r].clone());
        let mut cands: BTreeSet<Rational> = BTreeSet::new();
        for a in 0..k {
            for b in a + 1..k {
                let (ua, ub) = (self.rays[a], self.rays[b]);
                if det(ua, ub) == 0 {
                    // opposite rays: <m,u_a> >= c_a and <m,-u_a> >= c_b collide when c_a + c_b = 0
                    let (_, _, ca, sa) = line(a);
                    let (_, _, cb, sb) = line(b);
                    let slope = &sa + &sb;
                    if !slope.is_zero() {
                        cands.insert(-(ca + cb) / slope);
                    }
                }
                for c in b + 1..k {
                    // det [[u, c0 + x s]] over three rows, linear in x
                    let rows = [line(a), line(b), line(c)];
                    let d3 = |col: &dyn Fn(&(Rational, Rational, Rational, Rational)) -> Rational| {
                        let m: Vec<[Rational; 3]> =
                            rows.iter().map(|r| [r.0.clone(), r.1.clone(), col(r)]).collect();
                        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
                    };
                    let c0 = d3(&|r| r.2.clone());
                    let c1 = d3(&|r| r.3.clone());
                    if !c1.is_zero() {
                        cands.insert(-c0 / c1);
                    }
                }
            }
        }
        let v0 = at(&Rational::zero())?;
        if v0.is_zero() {
            return Err(Error::Domain("divisor is not big".into()));
        }
        let mut pts: Vec<Rational> = vec![Rational::zero()];
        pts.extend(cands.into_iter().filter(|x| x.is_positive()));
        let mut tau = None;
        for x in &pts[1..] {
            if at(x)?.is_zero() {
                tau = Some(x.clone());
                break;
            }
        }
        let tau = tau.ok_or_else(|| Error::Domain("volume never vanishes along this direction".into()))?;
        pts.retain(|x| x <= &tau);
        let mut pieces = Vec::new();
        for w in pts.windows(2) {
            let (lo, hi) = (w[0].clone(), w[1].clone());
            let span = &hi - &lo;
            let nodes = [lo.clone(), &lo + &span / qi(2), hi.clone()];
            let samples = [
                (nodes[0].clone(), at(&nodes[0])?),
                (nodes[1].clone(), at(&nodes[1])?),
                (nodes[2].clone(), at(&nodes[2])?),
            ];
            let piece = QuadPiece::through(lo.clone(), hi.clone(), samples)?;
            let probe = &lo + &span / qi(4);
            if piece.eval(&probe) != at(&probe)? {
                return Err(Error::Model(format!("volume is not quadratic on [{lo}, {hi}]")));
            }
            pieces.push(piece);
        }
        PiecewiseQuadratic::new(pieces)
    }

    /// `vol(pi^* d - x E_v)` for a primitive `v`, on the blow-up inserting `v` if it is not a ray.
    pub fn volume_profile(&self, d: &[Rational], v: [i64; 2]) -> Result<PiecewiseQuadratic> {
        check_len(self.len(), d.len())?;
        if let Some(i) = self.ray_index(v) {
            let mut e = vec![Rational::zero(); self.len()];
            e[i] = Rational::one();
            return self.class_volume_profile(d, &e);
        }
        let coeff = self.pullback_coefficient(d, v)?;
        let (y, idx) = self.insert_ray(v, "E")?;
        let mut dy = Vec::with_capacity(y.len());
        let mut e = vec![Rational::zero(); y.len()];
        e[idx] = Rational::one();
        for (k, r) in y.rays.iter().enumerate() {
            dy.push(if k == idx {
                coeff.clone()
            } else {
                d[self.ray_index(*r).expect("old ray")].clone()
            });
        }
        y.class_volume_profile(&dy, &e)
    }

    /// Same profile as [`ToricSurface::volume_profile`] for nef `d`, computed by slicing `P_d`
    /// with the level sets of `<m, v>`.
    pub fn slice_profile(&self, d: &[Rational], v: [i64; 2]) -> Result<PiecewiseQuadratic> {
        if !self.is_nef(d)? {
            return Err(Error::Domain("slicing needs a nef divisor".into()));
        }
        let poly = self.polytope(d)?;
        let vals: BTreeSet<Rational> = poly.iter().map(|p| p.dot(v)).collect();
        let lo = vals
            .iter()
            .next()
            .cloned()
            .ok_or_else(|| Error::Domain("empty polytope".into()))?;
        let hps = self.halfplanes(d);
        let at = |x: &Rational| {
            let mut h = hps.clone();
            h.push(HalfPlane::new(qi(v[0]), qi(v[1]), &lo + x));
            polygon_area(&halfplane_vertices(&h)) * qi(2)
        };
        let breaks: Vec<Rational> = vals.iter().map(|x| x - &lo).collect();
        let mut pieces = Vec::new();
        for w in breaks.windows(2) {
            let (a, b) = (w[0].clone(), w[1].clone());
            let m = (&a + &b) / qi(2);
            let s = [(a.clone(), at(&a)), (m.clone(), at(&m)), (b.clone(), at(&b))];
            pieces.push(QuadPiece::through(a, b, s)?);
        }
        PiecewiseQuadratic::new(pieces)
    }

    /// Expected vanishing order `S(d; v)` of a toric valuation.
    pub fn s_invariant(&self, d: &[Rational], v: [i64; 2]) -> Result<Rational> {
        let vol = self.volume(d)?;
        if vol.is_zero() {
            return Err(Error::Domain("divisor is not big".into()));
        }
        Ok(self.volume_profile(d, v)?.integrate() / vol)
    }

    /// Coefficients `<m, u_rho>` of the principal divisor of the character `m`.
    pub fn character_divisor(&self, m: [Rational; 2]) -> Vec<Rational> {
        self.rays
            .iter()
            .map(|u| &m[0] * qi(u[0]) + &m[1] * qi(u[1]))
            .collect()
    }

    /// Whether two torus-invariant divisors differ by a principal divisor.
    pub fn linearly_equivalent(&self, a: &[Rational], b: &[Rational]) -> Result<bool> {
        check_len(self.len(), a.len())?;
        check_len(self.len(), b.len())?;
        let diff: Vec<Rational> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        let (i, j) = self.independent_pair();
        let mat = vec![
            vec![qi(self.rays[i][0]), qi(self.rays[i][1])],
            vec![qi(self.rays[j][0]), qi(self.rays[j][1])],
        ];
        let m = solve(&mat, &[diff[i].clone(), diff[j].clone()]).expect("independent rays");
        Ok(self.character_divisor([m[0].clone(), m[1].clone()]) == diff)
    }

    fn independent_pair(&self) -> (usize, usize) {
        // Consecutive rays of a complete fan always span the plane.
        (0, 1)
    }

    /// Neron-Severi model: basis `D_rho` for all rays but the first two, with every `D_rho` of
    /// negative self-intersection listed as a negative curve.
    pub fn to_ns_model(&self) -> Result<NsSurface> {
        let basis: Vec<usize> = (2..self.len()).collect();
        let gram = basis
            .iter()
            .map(|&i| basis.iter().map(|&j| self.intersection(i, j)).collect())
            .collect();
        let conv = |d: &[Rational]| self.to_ns_class(d);
        let mut curves = Vec::new();
        for i in 0..self.len() {
            let s = self.intersection(i, i);
            if s.is_negative() {
                let mut e = vec![Rational::zero(); self.len()];
                e[i] = Rational::one();
                curves.push(NegativeCurve {
                    label: self.labels[i].clone(),
                    class: conv(&e),
                    self_intersection: s,
                    log_discrepancy: Rational::one(),
                });
            }
        }
        NsSurface::new(&self.name, gram, conv(&self.anticanonical()), curves)
    }

    /// Coordinates of a torus-invariant divisor in the basis used by [`ToricSurface::to_ns_model`].
    pub fn to_ns_class(&self, d: &[Rational]) -> Vec<Rational> {
        let (i, j) = self.independent_pair();
        let mat = vec![
            vec![qi(self.rays[i][0]), qi(self.rays[i][1])],
            vec![qi(self.rays[j][0]), qi(self.rays[j][1])],
        ];
        let m = solve(&mat, &[d[i].clone(), d[j].clone()]).expect("independent rays");
        let p = self.character_divisor([m[0].clone(), m[1].clone()]);
        (2..self.len()).map(|k| &d[k] - &p[k]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;

    fn p2() -> ToricSurface {
        build_toric("P2", &[[1, 0], [0, 1], [-1, -1]], None).unwrap()
    }

    #[test]
    fn fan_validation() {
        assert!(matches!(
            build_toric("bad", &[[1, 0], [0, 1]], None),
            Err(Error::Fan(_))
        ));
        assert!(matches!(
            build_toric("bad", &[[1, 0], [0, 1], [-1, 0]], None),
            Err(Error::Fan(_))
        ));
        assert!(matches!(
            build_toric("bad", &[[2, 0], [0, 1], [-1, -1]], None),
            Err(Error::Fan(_))
        ));
        let x = p2();
        assert!(matches!(x.weighted_blowup(0, 1, 2, 2), Err(Error::Fan(_))));
    }

    #[test]
    fn p2_volumes_and_blowups() {
        let x = p2();
        assert_eq!(x.volume(&x.anticanonical()).unwrap(), qi(9));
        assert_eq!(x.intersection(0, 0), qi(1));
        let (y, e) = x.weighted_blowup(0, 1, 3, 1).unwrap();
        assert_eq!(y.intersection(e, e), q(-1, 3));
        assert_eq!(x.log_discrepancy([3, 1]).unwrap(), qi(4));
    }

    #[test]
    fn slicing_agrees_with_blow_up() {
        let x = p2();
        let l = x.anticanonical();
        for v in [[1, 1], [3, 1], [2, 5], [-1, 0], [1, 0]] {
            assert_eq!(
                x.volume_profile(&l, v).unwrap().integrate(),
                x.slice_profile(&l, v).unwrap().integrate()
            );
        }
    }

    #[test]
    fn ns_model_of_p2() {
        let x = p2();
        let ns = x.to_ns_model().unwrap();
        assert_eq!(ns.rank(), 1);
        assert_eq!(ns.dot(&ns.anti_k, &ns.anti_k), qi(9));
    }
}
