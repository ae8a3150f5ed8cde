use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::rational::{q, serde_rational, Rational};
use crate::error::{Error, Result};

/// `q2 x^2 + q1 x + q0` on the closed interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadPiece {
    #[serde(with = "serde_rational")]
    pub lo: Rational,
    #[serde(with = "serde_rational")]
    pub hi: Rational,
    #[serde(with = "serde_rational")]
    pub q2: Rational,
    #[serde(with = "serde_rational")]
    pub q1: Rational,
    #[serde(with = "serde_rational")]
    pub q0: Rational,
}

impl QuadPiece {
    pub fn eval(&self, x: &Rational) -> Rational {
        (&self.q2 * x + &self.q1) * x + &self.q0
    }

    /// Antiderivative vanishing at 0.
    fn primitive(&self, x: &Rational) -> Rational {
        let x2 = x * x;
        &self.q2 * &x2 * x / q(3, 1) + &self.q1 * &x2 / q(2, 1) + &self.q0 * x
    }

    pub fn integral(&self) -> Rational {
        self.primitive(&self.hi) - self.primitive(&self.lo)
    }

    pub fn derivative(&self, x: &Rational) -> Rational {
        q(2, 1) * &self.q2 * x + &self.q1
    }

    /// Quadratic through three samples with distinct abscissae (Lagrange form).
    pub fn through(lo: Rational, hi: Rational, pts: [(Rational, Rational); 3]) -> Result<Self> {
        let [(x0, y0), (x1, y1), (x2, y2)] = pts;
        if x0 == x1 || x1 == x2 || x0 == x2 {
            return Err(Error::Degenerate("interpolation nodes coincide".into()));
        }
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (xi, yi, xa, xb) in [(&x0, &y0, &x1, &x2), (&x1, &y1, &x0, &x2), (&x2, &y2, &x0, &x1)] {
            let w = yi / ((xi - xa) * (xi - xb));
            c[0] += &w * xa * xb;
            c[1] -= &w * (xa + xb);
            c[2] += &w;
        }
        let [q0, q1, q2] = c;
        Ok(QuadPiece { lo, hi, q2, q1, q0 })
    }
}

/// Piecewise quadratic on a union of closed intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewiseQuadratic {
    pub pieces: Vec<QuadPiece>,
}

impl PiecewiseQuadratic {
    /// Pieces are sorted by left endpoint; overlaps are rejected.
    pub fn new(mut pieces: Vec<QuadPiece>) -> Result<Self> {
        for p in &pieces {
            if p.lo > p.hi {
                return Err(Error::Domain(format!("empty interval [{}, {}]", p.lo, p.hi)));
            }
        }
        pieces.sort_by(|a, b| a.lo.cmp(&b.lo));
        for w in pieces.windows(2) {
            if w[0].hi > w[1].lo {
                return Err(Error::Domain(format!(
                    "intervals [{}, {}] and [{}, {}] overlap",
                    w[0].lo, w[0].hi, w[1].lo, w[1].hi
                )));
            }
        }
        Ok(PiecewiseQuadratic { pieces })
    }

    pub fn integrate(&self) -> Rational {
        self.pieces.iter().map(QuadPiece::integral).sum()
    }

    /// Left end of the first piece and right end of the last.
    pub fn support(&self) -> Option<(Rational, Rational)> {
        Some((self.pieces.first()?.lo.clone(), self.pieces.last()?.hi.clone()))
    }

    /// Right end of the support (the pseudo-effective threshold for a volume profile).
    pub fn tau(&self) -> Rational {
        self.pieces
            .last()
            .map(|p| p.hi.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.pieces.iter().map(|p| p.lo.clone()).collect();
        if let Some(p) = self.pieces.last() {
            v.push(p.hi.clone());
        }
        v.dedup();
        v
    }

    /// Value at `x`; at a shared endpoint the left piece is used.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        self.pieces
            .iter()
            .find(|p| &p.lo <= x && x <= &p.hi)
            .map(|p| p.eval(x))
    }

    /// True when adjacent pieces share endpoints and agree there.
    pub fn is_continuous(&self) -> bool {
        self.pieces
            .windows(2)
            .all(|w| w[0].hi == w[1].lo && w[0].eval(&w[0].hi) == w[1].eval(&w[1].lo))
    }

    /// Splits the piece containing `x` in its interior.
    pub fn split_at(&self, x: &Rational) -> PiecewiseQuadratic {
        let mut pieces = Vec::with_capacity(self.pieces.len() + 1);
        for p in &self.pieces {
            if &p.lo < x && x < &p.hi {
                pieces.push(QuadPiece {
                    hi: x.clone(),
                    ..p.clone()
                });
                pieces.push(QuadPiece {
                    lo: x.clone(),
                    ..p.clone()
                });
            } else {
                pieces.push(p.clone());
            }
        }
        PiecewiseQuadratic { pieces }
    }
}

impl fmt::Display for PiecewiseQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "[{}, {}]: {}x^2 + {}x + {}", p.lo, p.hi, p.q2, p.q1, p.q0)?;
        }
        Ok(())
    }
}
