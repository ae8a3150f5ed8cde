//! Oracles and property checks shared by the acceptance runner and the regular test targets.
//! Each check returns `Err` with a description of the first counterexample.

#![allow(dead_code)]

use std::collections::BTreeMap;

use kmoduli::atlas::{c_of_t, cm_slope, t_of_c, FamilyKey};
use kmoduli::binary::{binary_pair_status, BinaryForm, StabilityStatus};
use kmoduli::git::family::{destabilizing_family, Pivot, Relation};
use kmoduli::git::{centroid_semistable, mu_t, GitProblem, PairSupport};
use kmoduli::kernel::{monomials, q, qi, ExponentVector, OnePS, Rational};
use kmoduli::kinv::{beta, complexity_one_check, config_names, load_config, log_discrepancy, s_invariant};
use kmoduli::surfaces::models::load_model;
use kmoduli::surfaces::Surface;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Check = Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------------------------
// Binary forms: direct evaluation from a known factorization.

/// Normalized point `(x : y)` of `P^1` where `a x + b y` vanishes.
fn root_of(a: i64, b: i64) -> (i64, i64) {
    let (mut x, mut y) = (-b, a);
    let g = x.gcd(&y);
    x /= g;
    y /= g;
    if y < 0 || (y == 0 && x < 0) {
        x = -x;
        y = -y;
    }
    (x, y)
}

fn random_factors<R: Rng>(rng: &mut R, deg: u32, pool: &[(i64, i64)]) -> Vec<((i64, i64), u32)> {
    let mut out = Vec::new();
    let mut left = deg;
    while left > 0 {
        let cap = if rng.gen_bool(0.3) { left } else { left.min(2) };
        let k = rng.gen_range(1..=cap);
        out.push((*pool.choose(rng).unwrap(), k));
        left -= k;
    }
    out
}

fn multiplicities(factors: &[((i64, i64), u32)]) -> BTreeMap<(i64, i64), u32> {
    let mut m = BTreeMap::new();
    for &((a, b), k) in factors {
        *m.entry(root_of(a, b)).or_insert(0) += k;
    }
    m
}

/// Status from `max_p (mult_p f + t mult_p g)` against `(d + t e)/2`.
fn binary_oracle(
    ff: &[((i64, i64), u32)],
    gf: &[((i64, i64), u32)],
    d: u32,
    e: u32,
    t: &Rational,
) -> StabilityStatus {
    let (mf, mg) = (multiplicities(ff), multiplicities(gf));
    let worst = mf
        .keys()
        .chain(mg.keys())
        .map(|p| qi(*mf.get(p).unwrap_or(&0) as i64) + t * qi(*mg.get(p).unwrap_or(&0) as i64))
        .max()
        .unwrap();
    let half = (qi(d as i64) + t * qi(e as i64)) / qi(2);
    match worst.cmp(&half) {
        std::cmp::Ordering::Less => StabilityStatus::Stable,
        std::cmp::Ordering::Equal => StabilityStatus::StrictlySemistable,
        std::cmp::Ordering::Greater => StabilityStatus::Unstable,
    }
}

/// Random pairs of binary forms built from linear factors over a small pool of points, so that
/// roots collide often. Returns the number of cases of each status seen.
pub fn binary_suite<R: Rng>(rng: &mut R, cases: usize) -> Result<BTreeMap<String, usize>, String> {
    let pool: Vec<(i64, i64)> = (-2..=2)
        .flat_map(|a| (-2..=2).map(move |b| (a, b)))
        .filter(|&(a, b)| (a, b) != (0, 0))
        .collect();
    let mut seen = BTreeMap::new();
    for i in 0..cases {
        let d = rng.gen_range(2..=8u32);
        let e = rng.gen_range(1..=2u32);
        let ff = random_factors(rng, d, &pool);
        let gf = random_factors(rng, e, &pool);
        let f = BinaryForm::from_linear_factors(&ff).map_err(|x| x.to_string())?;
        let g = BinaryForm::from_linear_factors(&gf).map_err(|x| x.to_string())?;
        let t = q(rng.gen_range(1..=16), rng.gen_range(1..=4));
        let got = binary_pair_status(&f, &g, &t).map_err(|x| x.to_string())?;
        let want = binary_oracle(&ff, &gf, d, e, &t);
        ensure(got == want, || {
            format!("case {i}: f = {ff:?}, g = {gf:?}, t = {t}: got {got}, oracle {want}")
        })?;
        *seen.entry(want.to_string()).or_insert(0) += 1;
    }
    Ok(seen)
}

// ---------------------------------------------------------------------------------------------
// Centroid criterion against exhaustive Caratheodory search in the plane.

type P2 = (Rational, Rational);

fn cross(o: &P2, a: &P2, b: &P2) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn on_segment(a: &P2, b: &P2, z: &P2) -> bool {
    cross(a, b, z).is_zero()
        && z.0 >= a.0.clone().min(b.0.clone())
        && z.0 <= a.0.clone().max(b.0.clone())
        && z.1 >= a.1.clone().min(b.1.clone())
        && z.1 <= a.1.clone().max(b.1.clone())
}

fn in_triangle(a: &P2, b: &P2, c: &P2, z: &P2) -> bool {
    let s = [cross(a, b, z), cross(b, c, z), cross(c, a, z)];
    s.iter().all(|x| !x.is_negative()) || s.iter().all(|x| !x.is_positive())
}

/// Point-in-hull in dimension 2: a point, a segment or a triangle of the set contains `z`.
pub fn planar_hull_contains(pts: &[P2], z: &P2) -> bool {
    let n = pts.len();
    for i in 0..n {
        if &pts[i] == z {
            return true;
        }
        for j in i + 1..n {
            if on_segment(&pts[i], &pts[j], z) {
                return true;
            }
            for k in j + 1..n {
                if !cross(&pts[i], &pts[j], &pts[k]).is_zero() && in_triangle(&pts[i], &pts[j], &pts[k], z) {
                    return true;
                }
            }
        }
    }
    false
}

/// Centroid oracle for a pair on `P^2`: the weight points `m + t m'` all have coordinate sum
/// `d + t e`, so dropping the last coordinate is an affine chart of their plane.
pub fn centroid_oracle(pair: &PairSupport, t: &Rational) -> bool {
    let mut pts = Vec::new();
    for m in &pair.f_support {
        for h in &pair.h_support {
            pts.push((
                qi(m.0[0] as i64) + t * qi(h.0[0] as i64),
                qi(m.0[1] as i64) + t * qi(h.0[1] as i64),
            ));
        }
    }
    let z = (qi(pair.d as i64) + t * qi(pair.e as i64)) / qi(3);
    planar_hull_contains(&pts, &(z.clone(), z))
}

pub fn random_support<R: Rng>(rng: &mut R, n: usize, d: u32, e: u32, max_total: usize) -> PairSupport {
    let md = monomials(n, d);
    let me = monomials(n, e);
    let hf = rng.gen_range(1..=me.len().min(max_total - 1).min(2));
    let nf = rng.gen_range(1..=max_total - hf);
    let f: Vec<ExponentVector> = md.choose_multiple(rng, nf).cloned().collect();
    let h: Vec<ExponentVector> = me.choose_multiple(rng, hf).cloned().collect();
    PairSupport::new(n, d, e, f, h).unwrap()
}

pub fn centroid_suite<R: Rng>(rng: &mut R, cases: usize) -> Result<(usize, usize), String> {
    let ts = [q(1, 3), qi(1), q(3, 2)];
    let (mut yes, mut no) = (0, 0);
    for i in 0..cases {
        let pair = random_support(rng, 2, 4, 1, 8);
        let t = &ts[i % 3];
        let got = centroid_semistable(&pair, t).map_err(|x| x.to_string())?;
        let want = centroid_oracle(&pair, t);
        ensure(got == want, || {
            format!(
                "case {i}: f = {:?}, h = {:?}, t = {t}: got {got}, oracle {want}",
                pair.f_support.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                pair.h_support.iter().map(|m| m.to_string()).collect::<Vec<_>>()
            )
        })?;
        if want {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok((yes, no))
}

// ---------------------------------------------------------------------------------------------
// Properties of the Hilbert-Mumford weight and destabilized sets.

/// Supports of a plane quartic and a line.
pub fn support_strategy() -> impl Strategy<Value = PairSupport> {
    (
        proptest::sample::subsequence(monomials(2, 4), 1..8),
        proptest::sample::subsequence(monomials(2, 1), 1..3),
    )
        .prop_map(|(f, h)| PairSupport::new(2, 4, 1, f, h).unwrap())
}

pub fn slope_strategy() -> impl Strategy<Value = Rational> {
    (0i64..40, 1i64..12).prop_map(|(a, b)| q(a, b))
}

pub fn raw_weights() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-6i64..=6, 3)
}

fn raw_mu(pair: &PairSupport, r: &[i64], t: &Rational) -> Rational {
    let w = |m: &ExponentVector| m.0.iter().zip(r).map(|(&a, &x)| a as i64 * x).sum::<i64>();
    let a = pair.f_support.iter().map(w).max().unwrap();
    let b = pair.h_support.iter().map(w).max().unwrap();
    qi(a) + t * qi(b)
}

/// `mu_t` scales with the subgroup, and the dual subgroup measures the reversed pair from below.
pub fn check_mu_homogeneity_and_duality(pair: &PairSupport, raw: &[i64], k: i64, t: &Rational) -> Check {
    let Ok(lam) = OnePS::new(raw) else { return Ok(()) };
    let r = lam.weights();
    // Relabel the pair so that the sorted weights act on the same coordinates.
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| raw[b].cmp(&raw[a]).then(a.cmp(&b)));
    let mut perm = vec![0; raw.len()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let p = pair.permuted(&perm).map_err(|e| e.to_string())?;
    let mu = mu_t(&p, &lam, t).map_err(|e| e.to_string())?;
    let scaled: Vec<i64> = r.iter().map(|x| x * k).collect();
    ensure(raw_mu(&p, &scaled, t) == qi(k) * &mu, || {
        format!("homogeneity fails for {lam} * {k}")
    })?;

    let rev: Vec<usize> = (0..r.len()).rev().collect();
    let flipped = p.permuted(&rev).map_err(|e| e.to_string())?;
    let dual = mu_t(&flipped, &lam.dual(), t).map_err(|e| e.to_string())?;
    let w = |m: &ExponentVector| m.0.iter().zip(r).map(|(&a, &x)| a as i64 * x).sum::<i64>();
    let lo = qi(p.f_support.iter().map(w).min().unwrap()) + t * qi(p.h_support.iter().map(w).min().unwrap());
    ensure(dual == -&lo, || {
        format!("duality fails for {lam}: {dual} vs -({lo})")
    })
}

/// As `t` grows the strict set `N(lambda, x_p)` shrinks when `r_p > 0`, grows when `r_p < 0`
/// and stays put when `r_p = 0`.
pub fn check_nset_monotonicity(
    problem: &GitProblem,
    raw: &[i64],
    p: usize,
    t1: &Rational,
    t2: &Rational,
) -> Check {
    let Ok(lam) = OnePS::new(raw) else { return Ok(()) };
    let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
    let fam = |t: &Rational| destabilizing_family(problem, &lam, &Pivot::Coordinate(p), t, Relation::Strict);
    let a = fam(lo).map_err(|e| e.to_string())?;
    let b = fam(hi).map_err(|e| e.to_string())?;
    let sub = |x: &[ExponentVector], y: &[ExponentVector]| x.iter().all(|m| y.contains(m));
    let rp = lam.weights()[p];
    let ok = match rp.signum() {
        1 => sub(&b.f_monomials, &a.f_monomials),
        -1 => sub(&a.f_monomials, &b.f_monomials),
        _ => a.f_monomials == b.f_monomials,
    };
    ensure(ok, || {
        format!("{lam}, pivot x{p}: sets at {lo} and {hi} are not nested as sign({rp}) predicts")
    })
}

// ---------------------------------------------------------------------------------------------
// Surfaces.

pub const TORIC_MODELS: [&str; 10] = [
    "p2",
    "p1xp1",
    "f4",
    "p114",
    "p123",
    "sigma7",
    "sigma8",
    "x7-prime",
    "x6-11",
    "x6-1-prime",
];

pub const NS_MODELS: [&str; 5] = ["sigma7-ns", "x7-prime-ns", "x6-1-ns", "x6-1-prime-ns", "x6-11-ns"];

/// Volume profile of `-K` along a weighted blow-up at a smooth torus-fixed point: continuous,
/// starts at `(-K)^2`, and when `-K` is ample its first piece is `(-K)^2 - x^2/(w1 w2)`.
pub fn check_profile(model: &str, cone: usize, w1: i64, w2: i64) -> Check {
    let Surface::Toric(t) = load_model(model).map_err(|e| e.to_string())? else {
        return Err(format!("{model} is not toric"));
    };
    let k = cone % t.rays.len();
    let (i, j) = (k, (k + 1) % t.rays.len());
    let (a, b) = (t.rays[i], t.rays[j]);
    if (a[0] * b[1] - a[1] * b[0]).abs() != 1 || w1.gcd(&w2) != 1 {
        return Ok(());
    }
    let v = [w1 * a[0] + w2 * b[0], w1 * a[1] + w2 * b[1]];
    let l = t.anticanonical();
    // The torus-fixed point is a vertex of the polytope only when -K is ample.
    for r in 0..t.rays.len() {
        let mut e = vec![Rational::zero(); t.rays.len()];
        e[r] = Rational::one();
        if !t.intersect(&l, &e).map_err(|e| e.to_string())?.is_positive() {
            return Ok(());
        }
    }
    let prof = t.volume_profile(&l, v).map_err(|e| e.to_string())?;
    let vol = t.volume(&l).map_err(|e| e.to_string())?;
    ensure(prof.is_continuous(), || {
        format!("{model} {v:?}: profile is discontinuous")
    })?;
    ensure(prof.eval(&Rational::zero()) == Some(vol.clone()), || {
        format!("{model} {v:?}: vol(0) != L^2")
    })?;
    let first = &prof.pieces[0];
    ensure(first.q1.is_zero() && first.q2 == -q(1, w1 * w2), || {
        format!(
            "{model} {v:?}: first piece {}x^2 + {}x, expected -x^2/{}",
            first.q2,
            first.q1,
            w1 * w2
        )
    })
}

/// `P . C = 0` for every curve in the negative part, whose Gram matrix is negative definite.
pub fn check_zariski(model: &str, coeffs: &[i64]) -> Check {
    let Surface::Ns(s) = load_model(model).map_err(|e| e.to_string())? else {
        return Err(format!("{model} is not a lattice model"));
    };
    // -K plus a nonnegative combination of negative curves is big.
    let mut d = s.anti_k.clone();
    for (c, &k) in s.negative_curves.iter().zip(coeffs) {
        for (x, y) in d.iter_mut().zip(&c.class) {
            *x += qi(k) * y;
        }
    }
    let z = s.zariski(&d).map_err(|e| e.to_string())?;
    for (i, a) in &z.negative {
        let c = &s.negative_curves[*i];
        ensure(a.is_positive(), || {
            format!("{model}: coefficient of {} is {a}", c.label)
        })?;
        ensure(s.dot(&z.positive, &c.class).is_zero(), || {
            format!("{model}: P . {} != 0", c.label)
        })?;
    }
    let support: Vec<_> = z
        .negative
        .iter()
        .map(|(i, _)| &s.negative_curves[*i].class)
        .collect();
    ensure(negative_definite(&support, |a, b| s.dot(a, b)), || {
        format!("{model}: negative part is not negative definite")
    })?;
    for c in &s.negative_curves {
        ensure(!s.dot(&z.positive, &c.class).is_negative(), || {
            format!("{model}: P is not nef on {}", c.label)
        })?;
    }
    Ok(())
}

/// Sylvester's criterion on `-G`.
fn negative_definite(v: &[&Vec<Rational>], dot: impl Fn(&[Rational], &[Rational]) -> Rational) -> bool {
    let n = v.len();
    let g: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| -dot(v[i], v[j])).collect())
        .collect();
    (1..=n).all(|k| det(&g[..k].iter().map(|r| r[..k].to_vec()).collect::<Vec<_>>()).is_positive())
}

fn det(m: &[Vec<Rational>]) -> Rational {
    let mut a = m.to_vec();
    let n = a.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for r in c + 1..n {
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let x = &f * &a[c][k];
                a[r][k] -= x;
            }
        }
    }
    d
}

// ---------------------------------------------------------------------------------------------
// Beta-invariants over every bundled configuration.

pub fn check_beta_identities() -> Result<usize, String> {
    let mut n = 0;
    for name in config_names() {
        let cfg = load_config(&name).map_err(|e| format!("{name}: {e}"))?;
        for v in &cfg.valuations {
            let r = beta(&cfg.pair, v).map_err(|e| format!("{name}/{}: {e}", v.label))?;
            let a = log_discrepancy(&cfg.pair, v).map_err(|e| e.to_string())?;
            let s = s_invariant(&cfg.pair, v).map_err(|e| e.to_string())?;
            ensure(r.beta == &a - &s, || format!("{name}/{}: beta != A - S", v.label))?;
            n += 1;
        }
    }
    Ok(n)
}

/// `beta(E+) + beta(E-) = 0` identically in `c` on every complexity-one configuration.
pub fn check_fixed_point_antisymmetry() -> Result<usize, String> {
    let mut n = 0;
    for name in config_names() {
        let cfg = load_config(&name).map_err(|e| format!("{name}: {e}"))?;
        let Some(data) = &cfg.complexity_one else { continue };
        let rep = complexity_one_check(&cfg.pair, data, &q(1, 2)).map_err(|e| format!("{name}: {e}"))?;
        ensure((&rep.plus.beta + &rep.minus.beta).is_zero(), || {
            format!("{name}: fixed-point betas do not cancel")
        })?;
        n += 1;
    }
    Ok(n)
}

// ---------------------------------------------------------------------------------------------
// Atlas maps.

pub fn check_t_c_inverse(family: FamilyKey, c: &Rational) -> Check {
    let t = t_of_c(family, c).map_err(|e| e.to_string())?;
    let back = c_of_t(family, &t).map_err(|e| e.to_string())?;
    ensure(&back == c, || format!("{family}: c = {c} -> t = {t} -> {back}"))
}

pub fn check_cm_ratio(family: FamilyKey, c: &Rational) -> Check {
    let (a, b) = cm_slope(family, c).map_err(|e| e.to_string())?;
    let t = t_of_c(family, c).map_err(|e| e.to_string())?;
    ensure(a.is_positive() && b / a == t, || {
        format!("{family}: CM ratio differs from t at c = {c}")
    })
}

/// Rational in (0, 1) from two integers.
pub fn unit_rational(num: u32, den: u32) -> Rational {
    let den = den.max(2) as i64;
    q(1 + (num as i64 % (den - 1)), den)
}
