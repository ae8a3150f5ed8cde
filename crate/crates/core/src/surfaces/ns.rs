//! Surfaces described by their Neron-Severi lattice and a complete list of negative curves.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::kernel::linalg::{bilinear, signature, solve, Matrix};
use crate::kernel::rational::{rational_sqrt, serde_rational, serde_rational_matrix, serde_rational_vec};
use crate::kernel::{qi, PiecewiseQuadratic, QuadPiece, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeCurve {
    pub label: String,
    #[serde(with = "serde_rational_vec")]
    pub class: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub self_intersection: Rational,
    /// Log discrepancy of the curve as a divisor over the surface (1 for curves on it).
    #[serde(with = "serde_rational")]
    pub log_discrepancy: Rational,
}

/// Construct through [`NsSurface::new`], which checks the lattice and the curve list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NsSurface {
    pub name: String,
    #[serde(rename = "gram", with = "serde_rational_matrix")]
    g: Matrix,
    #[serde(with = "serde_rational_vec")]
    pub anti_k: Vec<Rational>,
    pub negative_curves: Vec<NegativeCurve>,
}

/// Zariski decomposition `D = P + sum a_C C` with `P` nef and orthogonal to every `C` in the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zariski {
    pub positive: Vec<Rational>,
    /// `(curve index, coefficient)` for the curves in the negative part.
    pub negative: Vec<(usize, Rational)>,
}

impl NsSurface {
    pub fn new(name: &str, gram: Matrix, anti_k: Vec<Rational>, curves: Vec<NegativeCurve>) -> Result<Self> {
        let r = gram.len();
        for row in &gram {
            check_len(r, row.len())?;
        }
        for i in 0..r {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Model(format!("Gram matrix of {name} is not symmetric")));
                }
            }
        }
        let (pos, neg, zero) = signature(&gram);
        if pos != 1 || neg + 1 != r || zero != 0 {
            return Err(Error::Model(format!(
                "{name}: intersection form has signature ({pos}, {neg}) with {zero} null directions"
            )));
        }
        check_len(r, anti_k.len())?;
        for c in &curves {
            check_len(r, c.class.len())?;
            let s = bilinear(&gram, &c.class, &c.class);
            if s != c.self_intersection {
                return Err(Error::Model(format!(
                    "{name}: curve {} has self-intersection {s}, listed as {}",
                    c.label, c.self_intersection
                )));
            }
            if !s.is_negative() {
                return Err(Error::Model(format!("{name}: curve {} is not negative", c.label)));
            }
        }
        Ok(NsSurface {
            name: name.to_string(),
            g: gram,
            anti_k,
            negative_curves: curves,
        })
    }

    pub fn gram(&self) -> &Matrix {
        &self.g
    }

    pub fn rank(&self) -> usize {
        self.g.len()
    }

    pub fn dot(&self, a: &[Rational], b: &[Rational]) -> Rational {
        bilinear(&self.g, a, b)
    }

    pub fn curve(&self, label: &str) -> Result<usize> {
        self.negative_curves
            .iter()
            .position(|c| c.label == label)
            .ok_or_else(|| Error::Model(format!("{} lists no curve {label:?}", self.name)))
    }

    fn support_solution(&self, support: &[usize], rhs: &[Rational]) -> Result<Vec<Rational>> {
        let gs: Matrix = support
            .iter()
            .map(|&i| {
                support
                    .iter()
                    .map(|&j| self.dot(&self.negative_curves[i].class, &self.negative_curves[j].class))
                    .collect()
            })
            .collect();
        let (_, neg, _) = signature(&gs);
        if neg != support.len() {
            let names: Vec<&str> = support
                .iter()
                .map(|&i| self.negative_curves[i].label.as_str())
                .collect();
            return Err(Error::Model(format!(
                "{}: curves {names:?} have a Gram matrix that is not negative definite",
                self.name
            )));
        }
        Ok(solve(&gs, rhs).expect("negative definite matrices are invertible"))
    }

    fn subtract(&self, d: &[Rational], support: &[usize], coeffs: &[Rational]) -> Vec<Rational> {
        let mut p = d.to_vec();
        for (&i, a) in support.iter().zip(coeffs) {
            for (x, c) in p.iter_mut().zip(&self.negative_curves[i].class) {
                *x -= a * c;
            }
        }
        p
    }

    /// Fujita's algorithm over the listed negative curves.
    pub fn zariski(&self, d: &[Rational]) -> Result<Zariski> {
        check_len(self.rank(), d.len())?;
        let mut support: Vec<usize> = Vec::new();
        loop {
            let rhs: Vec<Rational> = support
                .iter()
                .map(|&i| self.dot(d, &self.negative_curves[i].class))
                .collect();
            let coeffs = if support.is_empty() {
                vec![]
            } else {
                self.support_solution(&support, &rhs)?
            };
            let p = self.subtract(d, &support, &coeffs);
            let fresh: Vec<usize> = (0..self.negative_curves.len())
                .filter(|i| !support.contains(i))
                .filter(|&i| self.dot(&p, &self.negative_curves[i].class).is_negative())
                .collect();
            if fresh.is_empty() {
                if self.dot(&p, &p).is_negative() {
                    return Err(Error::Model(format!(
                        "{}: positive part has negative square; the curve list is incomplete",
                        self.name
                    )));
                }
                return Ok(Zariski {
                    positive: p,
                    negative: support.into_iter().zip(coeffs).collect(),
                });
            }
            support.extend(fresh);
        }
    }

    pub fn volume(&self, d: &[Rational]) -> Result<Rational> {
        let z = self.zariski(d)?;
        Ok(self.dot(&z.positive, &z.positive))
    }

    /// `vol(l - x e)` for `x` from 0 up to the pseudo-effective threshold.
    pub fn volume_profile(&self, l: &[Rational], e: &[Rational]) -> Result<PiecewiseQuadratic> {
        check_len(self.rank(), l.len())?;
        check_len(self.rank(), e.len())?;
        let curves = &self.negative_curves;
        let mut support: Vec<usize> = self.zariski(l)?.negative.iter().map(|(i, _)| *i).collect();
        let mut x0 = Rational::zero();
        let mut pieces = Vec::new();
        for _ in 0..4 * curves.len() + 4 {
            // P(x) = p0 + x p1 keeps P . C = 0 on the support.
            let (p0, p1) = if support.is_empty() {
                (l.to_vec(), e.iter().map(|x| -x).collect::<Vec<_>>())
            } else {
                let a: Vec<Rational> = support.iter().map(|&i| self.dot(l, &curves[i].class)).collect();
                let b: Vec<Rational> = support.iter().map(|&i| -self.dot(e, &curves[i].class)).collect();
                let alpha = self.support_solution(&support, &a)?;
                let beta = self.support_solution(&support, &b)?;
                let neg_e: Vec<Rational> = e.iter().map(|x| -x).collect();
                (
                    self.subtract(l, &support, &alpha),
                    self.subtract(&neg_e, &support, &beta),
                )
            };
            let mut grew = false;
            let mut event: Option<Rational> = None;
            for (i, c) in curves.iter().enumerate() {
                if support.contains(&i) {
                    continue;
                }
                let (a, b) = (self.dot(&p0, &c.class), self.dot(&p1, &c.class));
                let here = &a + &b * &x0;
                if here.is_negative() || (here.is_zero() && b.is_negative()) {
                    support.push(i);
                    grew = true;
                } else if b.is_negative() {
                    let t = -a / b;
                    if event.as_ref().is_none_or(|e| &t < e) {
                        event = Some(t);
                    }
                }
            }
            if grew {
                continue;
            }
            let q2 = self.dot(&p1, &p1);
            let q1 = self.dot(&p0, &p1) * qi(2);
            let q0 = self.dot(&p0, &p0);
            let root = first_root_after(&q2, &q1, &q0, &x0, event.as_ref()).map_err(|e| match e {
                Error::Domain(m) => Error::Domain(format!("{}: {m}", self.name)),
                other => other,
            })?;
            let piece = |lo: &Rational, hi: &Rational| QuadPiece {
                lo: lo.clone(),
                hi: hi.clone(),
                q2: q2.clone(),
                q1: q1.clone(),
                q0: q0.clone(),
            };
            let stop_at_root = match (&root, &event) {
                (Some(r), Some(ev)) => r <= ev,
                (Some(_), None) => true,
                (None, _) => false,
            };
            if stop_at_root {
                let r = root.expect("checked");
                if r > x0 {
                    pieces.push(piece(&x0, &r));
                }
                return PiecewiseQuadratic::new(pieces);
            }
            let Some(ev) = event else {
                return Err(Error::Model(format!(
                    "{}: volume never vanishes; the curve list is incomplete",
                    self.name
                )));
            };
            if ev > x0 {
                pieces.push(piece(&x0, &ev));
            }
            x0 = ev;
        }
        Err(Error::Model(format!(
            "{}: Zariski chambers did not stabilize",
            self.name
        )))
    }

    /// `S(l; e) = (1/vol l) * integral of vol(l - x e)`.
    pub fn s_invariant(&self, l: &[Rational], e: &[Rational]) -> Result<Rational> {
        let vol = self.volume(l)?;
        if vol.is_zero() {
            return Err(Error::Domain(format!("{}: divisor is not big", self.name)));
        }
        Ok(self.volume_profile(l, e)?.integrate() / vol)
    }
}

/// Smallest root of `q2 x^2 + q1 x + q0` that is `>= x0` (the value at `x0` is assumed `>= 0`).
/// First zero of `q2 x^2 + q1 x + q0` at or after `x0`, ignoring zeros past `limit`. The volume
/// is nonincreasing in `x`, so a positive value at `limit` rules out any zero before it.
fn first_root_after(
    q2: &Rational,
    q1: &Rational,
    q0: &Rational,
    x0: &Rational,
    limit: Option<&Rational>,
) -> Result<Option<Rational>> {
    if let Some(x) = limit {
        if (q2 * x * x + q1 * x + q0).is_positive() {
            return Ok(None);
        }
    }
    let mut roots = Vec::new();
    if q2.is_zero() {
        if !q1.is_zero() {
            roots.push(-q0 / q1);
        }
    } else {
        let disc = q1 * q1 - qi(4) * q2 * q0;
        if disc.is_negative() {
            return Ok(None);
        }
        let s = rational_sqrt(&disc)
            .ok_or_else(|| Error::Domain(format!("threshold is irrational (discriminant {disc})")))?;
        let two_a = qi(2) * q2;
        roots.push((-q1 - &s) / &two_a);
        roots.push((-q1 + s) / two_a);
    }
    Ok(roots.into_iter().filter(|r| r >= x0).min())
}
