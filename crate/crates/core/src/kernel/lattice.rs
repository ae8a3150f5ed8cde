//! Small integer linear algebra: primitive vectors, determinants, kernels of corank one.

use num_integer::Integer;

/// Divide by the gcd of the entries. The zero vector is returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

/// Primitive, with first nonzero entry positive.
pub fn normalize_direction(v: &[i64]) -> Vec<i64> {
    let mut p = primitive(v);
    if p.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in p.iter_mut() {
            *x = -*x;
        }
    }
    p
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Generator of the kernel of an `(m - 1) x m` integer matrix, if that kernel is a line.
///
/// Uses signed maximal minors (the generalized cross product), then makes the result primitive.
pub fn kernel_line(rows: &[Vec<i64>]) -> Option<Vec<i64>> {
    let m = rows.len() + 1;
    debug_assert!(rows.iter().all(|r| r.len() == m));
    let mut out = Vec::with_capacity(m);
    for skip in 0..m {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &x)| x as i128)
                    .collect()
            })
            .collect();
        let d = det(minor);
        out.push(if skip % 2 == 0 { d } else { -d });
    }
    if out.iter().all(|&x| x == 0) {
        return None;
    }
    let g = out.iter().fold(0i128, |g, &x| g.gcd(&x));
    out.iter().map(|&x| i64::try_from(x / g).ok()).collect()
}
