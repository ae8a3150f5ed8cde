//! Exact dense linear algebra over the rationals.

use num_traits::{Signed, Zero};

use super::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Unique solution of `a x = b` for square `a`, or `None` if `a` is singular.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, p);
        let piv = m[k][k].clone();
        for x in m[k].iter_mut() {
            *x /= &piv;
        }
        let prow = m[k].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != k && !row[k].is_zero() {
                let f = row[k].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Numbers of positive, negative and zero entries after congruence diagonalization.
pub fn signature(a: &Matrix) -> (usize, usize, usize) {
    let n = a.len();
    let mut m = a.clone();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // Replace e_k by e_k + e_j; the new diagonal entry is 2 m[k][j].
                for c in 0..n {
                    let v = m[j][c].clone();
                    m[k][c] += v;
                }
                for r in 0..n {
                    let v = m[r][j].clone();
                    m[r][k] += v;
                }
            }
        }
        if m[k][k].is_zero() {
            zero += 1;
            continue;
        }
        if m[k][k].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        let piv = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &piv;
            for c in 0..n {
                let v = &f * &m[k][c];
                m[i][c] -= v;
            }
            for r in 0..n {
                let v = &f * &m[r][k];
                m[r][i] -= v;
            }
        }
    }
    (pos, neg, zero)
}

pub fn bilinear(g: &Matrix, a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            s += ai * &g[i][j] * bj;
        }
    }
    s
}
