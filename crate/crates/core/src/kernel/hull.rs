//! Exact convex-hull membership by a phase-one simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{check_len, Error, Result};

/// Whether `target` is a convex combination of `points`.
pub fn in_convex_hull(points: &[Vec<Rational>], target: &[Rational]) -> Result<bool> {
    Ok(convex_weights(points, target)?.is_some())
}

/// Convex weights expressing `target` in terms of `points`, if any exist.
pub fn convex_weights(points: &[Vec<Rational>], target: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if points.is_empty() {
        return Err(Error::Degenerate("empty point set".into()));
    }
    let dim = target.len();
    for p in points {
        check_len(dim, p.len())?;
    }
    let k = points.len();
    let m = dim + 1;
    // Rows: coordinates, then sum of weights = 1. Columns: k weights, m artificials, rhs.
    let cols = k + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for r in 0..m {
        let mut row = vec![Rational::zero(); cols];
        for (j, p) in points.iter().enumerate() {
            row[j] = if r < dim { p[r].clone() } else { Rational::one() };
        }
        let mut rhs = if r < dim {
            target[r].clone()
        } else {
            Rational::one()
        };
        if rhs.is_negative() {
            for x in row.iter_mut().take(k) {
                *x = -x.clone();
            }
            rhs = -rhs;
        }
        row[k + r] = Rational::one();
        row[cols - 1] = rhs;
        t.push(row);
    }
    // Objective row: minimize the sum of artificials, written as reduced costs.
    let mut obj = vec![Rational::zero(); cols];
    for row in &t {
        for j in 0..k {
            obj[j] -= &row[j];
        }
        obj[cols - 1] -= &row[cols - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (k..k + m).collect();

    loop {
        let obj = &t[m];
        let Some(enter) = (0..k + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            if t[r][enter].is_positive() {
                let ratio = &t[r][cols - 1] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Phase one is bounded below by zero, so this cannot happen.
            return Err(Error::Degenerate("unbounded phase-one program".into()));
        };
        let piv = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x /= &piv;
        }
        let prow = t[pr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == pr || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        basis[pr] = enter;
    }

    if !t[m][cols - 1].is_zero() {
        return Ok(None);
    }
    let mut w = vec![Rational::zero(); k];
    for (r, &b) in basis.iter().enumerate() {
        if b < k {
            w[b] = t[r][cols - 1].clone();
        }
    }
    Ok(Some(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::q;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn inside_outside_and_boundary() {
        let tri = vec![pt(&[0, 0]), pt(&[2, 0]), pt(&[0, 2])];
        assert!(in_convex_hull(&tri, &pt(&[1, 1])).unwrap());
        assert!(in_convex_hull(&tri, &[q(1, 2), q(1, 3)]).unwrap());
        assert!(!in_convex_hull(&tri, &[q(3, 2), q(3, 2)]).unwrap());
        assert!(in_convex_hull(&tri, &pt(&[0, 0])).unwrap());
    }

    #[test]
    fn weights_reproduce_target() {
        let pts = vec![pt(&[3, 0, 0]), pt(&[0, 3, 0]), pt(&[0, 0, 3]), pt(&[1, 1, 1])];
        let w = convex_weights(&pts, &pt(&[1, 1, 1])).unwrap().unwrap();
        let mut s = vec![q(0, 1); 3];
        for (p, wi) in pts.iter().zip(&w) {
            for i in 0..3 {
                s[i] += &p[i] * wi;
            }
        }
        assert_eq!(s, pt(&[1, 1, 1]));
    }
}
