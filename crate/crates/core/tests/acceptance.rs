//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{ensure, raw_weights, slope_strategy, support_strategy};
use kmoduli::atlas::gorenstein::{deg2_plane_index_bound, gorenstein_bound};
use kmoduli::atlas::{
    chamber_midpoints, golden, golden_kwalls, kwalls, FamilyKey, Provenance, DEG8_VARIANTS,
};
use kmoduli::binary::binary_walls;
use kmoduli::git::{enumerate_candidates, wall_chamber_decomposition, GitProblem, DEFAULT_CAP};
use kmoduli::kernel::rational::Q;
use kmoduli::kernel::{q, qi, ExponentVector, LinearInC, OnePS, Rational};
use kmoduli::kinv::{
    beta, complexity_one_check, load_config, log_discrepancy, s_invariant, ValuationKind, Verdict,
};
use kmoduli::surfaces::Surface;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rationals(v: &[Q]) -> Vec<Rational> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn show(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn golden_git(name: &str) -> Result<golden::GitWalls, String> {
    let file: golden::WallsFile = golden::load(golden::WALLS).map_err(err)?;
    file.git
        .into_iter()
        .find(|g| g.name == name)
        .ok_or_else(|| format!("no golden entry {name}"))
}

fn c1_candidates() -> Outcome {
    let start = Instant::now();
    let set = enumerate_candidates(&GitProblem::new(2, 4, 1).map_err(err)?, DEFAULT_CAP).map_err(err)?;
    within(start, Duration::from_secs(5), "enumeration")?;
    let cstar: golden::CstarFile = golden::load(golden::CSTAR).map_err(err)?;
    let mut listed = BTreeSet::new();
    for name in ["lambda1", "lambda2", "lambda3", "lambda4"] {
        let lam = OnePS::new(cstar.weights(name).map_err(err)?).map_err(err)?;
        listed.insert(lam.dual());
        listed.insert(lam);
    }
    let got: BTreeSet<OnePS> = set.candidates.iter().cloned().collect();
    ensure(got == listed, || format!("got {got:?}, listed {listed:?}"))?;
    Ok(format!(
        "{} distinct subgroups (lambda_k and duals; lambda3 is self-dual)",
        got.len()
    ))
}

fn git_case(name: &str, limit: Duration) -> Outcome {
    let g = golden_git(name)?;
    let start = Instant::now();
    let dec = wall_chamber_decomposition(&GitProblem::new(g.n, g.d, g.e).map_err(err)?, DEFAULT_CAP)
        .map_err(err)?;
    within(start, limit, "decomposition")?;
    let want = rationals(&g.walls);
    ensure(dec.walls == want, || {
        format!("walls {{{}}} vs {{{}}}", show(&dec.walls), show(&want))
    })?;
    let t_max = g.t_max.map(|t| t.0);
    ensure(dec.t_max() == t_max.as_ref(), || {
        format!("t_max {:?} vs {t_max:?}", dec.t_max())
    })?;
    Ok(format!(
        "walls {{{}}}, t_max {}",
        show(&dec.walls),
        t_max.map(|t| t.to_string()).unwrap_or_default()
    ))
}

fn c4_binary() -> Outcome {
    let g = golden_git("binary-octic-conic")?;
    let walls = binary_walls(g.d, g.e);
    ensure(walls == rationals(&g.walls), || {
        format!("binary walls {{{}}}", show(&walls))
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let seen = common::binary_suite(&mut rng, 200)?;
    Ok(format!(
        "walls {{{}}}; 200 random pairs agree with the oracle {seen:?}",
        show(&walls)
    ))
}

fn c5_kwalls() -> Outcome {
    let mut notes = Vec::new();
    for d in 2..=9u32 {
        let variants: Vec<Option<&str>> = if d == 8 {
            DEG8_VARIANTS.iter().map(|v| Some(*v)).collect()
        } else {
            vec![None]
        };
        for v in variants {
            let got = kwalls(d, v).map_err(|e| format!("d = {d}: {e}"))?;
            let cs: Vec<Rational> = got.iter().map(|w| w.c.clone()).collect();
            let want = golden_kwalls(d, v).map_err(err)?;
            ensure(cs == want, || {
                format!("d = {d} {v:?}: {{{}}} vs {{{}}}", show(&cs), show(&want))
            })?;
            match d {
                2 | 3 => ensure(
                    got.iter().all(|w| w.provenance == Provenance::ComputedGit),
                    || format!("d = {d}: a wall is not computed from GIT"),
                )?,
                4 => notes.push("d = 4 maps tabulated GIT walls"),
                _ => {}
            }
        }
    }
    let mut msg = "d = 2..9 match; d = 2, 3 computed from GIT via c(t)".to_string();
    for n in notes {
        msg.push_str("; ");
        msg.push_str(n);
    }
    Ok(msg)
}

fn c6_beta() -> Outcome {
    let start = Instant::now();
    let table: golden::KwallTableFile = golden::load(golden::KWALL_TABLE).map_err(err)?;
    for row in &table.row {
        let cfg = load_config(&row.config).map_err(err)?;
        let r = beta(&cfg.pair, cfg.valuation(&row.valuation).map_err(err)?).map_err(err)?;
        let want = LinearInC::parse(&row.beta).map_err(err)?;
        ensure(r.beta == want, || {
            format!("row {}: beta {} vs {}", row.row, r.beta, row.beta)
        })?;
        ensure(r.wall.as_ref() == Some(&row.wall.0), || {
            format!("row {}: wall {:?}", row.row, r.wall)
        })?;
    }

    let demo = &table.demonstration;
    let cfg = load_config(&demo.config).map_err(err)?;
    let v = cfg.valuation(&demo.valuation).map_err(err)?;
    let a = log_discrepancy(&cfg.pair, v).map_err(err)?;
    let s = s_invariant(&cfg.pair, v).map_err(err)?;
    ensure(a == LinearInC::parse(&demo.a).map_err(err)?, || {
        format!("A = {a}")
    })?;
    ensure(s == LinearInC::parse(&demo.s).map_err(err)?, || {
        format!("S = {s}")
    })?;
    let (Surface::Toric(t), ValuationKind::Toric { vector }) = (&cfg.pair.surface, &v.kind) else {
        return Err("demonstration is not toric".into());
    };
    let taus = [q(1, 5), q(1, 2), q(7, 10)]
        .into_iter()
        .map(|c| {
            let prof = t.volume_profile(&cfg.pair.polarization(&c), *vector)?;
            Ok((c, prof.tau()))
        })
        .collect::<kmoduli::Result<Vec<_>>>()
        .map_err(err)?;
    let tau = LinearInC::fit(&taus).map_err(err)?;
    ensure(tau == LinearInC::parse(&demo.tau).map_err(err)?, || {
        format!("tau = {tau}")
    })?;
    let b = &a - &s;
    ensure(b.root() == Some(demo.wall.0.clone()), || format!("beta = {b}"))?;
    let data = cfg
        .complexity_one
        .as_ref()
        .ok_or("demonstration has no torus action")?;
    let at = |c: &Rational| {
        complexity_one_check(&cfg.pair, data, c)
            .map(|r| r.verdict)
            .map_err(err)
    };
    ensure(at(&demo.polystable_at.0)? == Verdict::Polystable, || {
        "not polystable at the wall".into()
    })?;
    ensure(at(&demo.unstable_at.0)? == Verdict::Unstable, || {
        "not unstable below the wall".into()
    })?;
    within(start, Duration::from_secs(10), "beta table")?;
    Ok(format!(
        "{} rows match; demonstration A = {a}, tau = {tau}, S = {s}, wall {}",
        table.row.len(),
        demo.wall.0
    ))
}

fn c7_s_values() -> Outcome {
    let file: golden::SValuesFile = golden::load(golden::S_VALUES).map_err(err)?;
    let mut out = Vec::new();
    for e in &file.entry {
        let cfg = load_config(&e.config).map_err(err)?;
        let s = s_invariant(&cfg.pair, cfg.valuation(&e.valuation).map_err(err)?).map_err(err)?;
        let want = LinearInC::parse(&e.s).map_err(err)?;
        ensure(s == want, || {
            format!("{}/{}: S = {s}, listed {}", e.config, e.valuation, e.s)
        })?;
        out.push(format!("{}/{}", e.config, e.valuation));
    }
    Ok(format!("{} values match ({})", out.len(), out.join(", ")))
}

fn c8_centroid() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let (yes, no) = common::centroid_suite(&mut rng, 500)?;
    within(start, Duration::from_secs(60), "centroid suite")?;
    Ok(format!("500 supports agree ({yes} semistable, {no} unstable)"))
}

fn c9_cstar() -> Outcome {
    let file: golden::CstarFile = golden::load(golden::CSTAR).map_err(err)?;
    let quartic_walls = rationals(&golden_git("quartic-line")?.walls);
    let mut samples = quartic_walls.clone();
    samples.extend(chamber_midpoints(&quartic_walls));
    let ties = |ms: &[Vec<u32>], w: &[i64]| -> Result<Option<i64>, String> {
        let ws = ms
            .iter()
            .map(|m| ExponentVector(m.clone()).weight(w).map_err(err))
            .collect::<Result<BTreeSet<_>, _>>()?;
        Ok(if ws.len() == 1 {
            ws.into_iter().next()
        } else {
            None
        })
    };
    let mut fixed_by_printed = Vec::new();
    for row in &file.row {
        let w = file.weights(&row.lambda).map_err(err)?;
        let (Some(wf), Some(wh)) = (ties(&row.f, w)?, ties(&row.h, w)?) else {
            return Err(format!("row {}: not fixed by {}", row.row, row.lambda));
        };
        let mu = |t: &Rational| qi(wf) + t * qi(wh);
        match &row.mu_zero_at {
            Some(t) => ensure(mu(&t.0).is_zero(), || {
                format!("row {}: mu = {} at {}", row.row, mu(&t.0), t.0)
            })?,
            None => {
                for t in &samples {
                    ensure(mu(t).is_zero(), || {
                        format!("row {}: mu = {} at {t}", row.row, mu(t))
                    })?;
                }
            }
        }
        if row.printed_lambda != row.lambda {
            let p = file.weights(&row.printed_lambda).map_err(err)?;
            if ties(&row.f, p)?.is_some() && ties(&row.h, p)?.is_some() {
                fixed_by_printed.push(row.row);
            }
        }
    }
    ensure(fixed_by_printed.is_empty(), || {
        format!("rows {fixed_by_printed:?} are also fixed by the printed lambda")
    })?;
    Ok(format!(
        "{} pairs fixed with mu_t = 0 at their walls (rows 4, 5 use the corrected lambda)",
        file.row.len()
    ))
}

fn c10_gorenstein() -> Outcome {
    let mut checked = 0;
    for l in 3..=9 {
        for k in 0..10 {
            let c = q(k, 10);
            for ord in [1, 2] {
                let b = gorenstein_bound(l, &c, ord)
                    .map_err(|e| format!("l = {l}, c = {c}, ord = {ord}: {e}"))?;
                ensure(b.gorenstein, || {
                    format!("l = {l}, c = {c}, ord = {ord}: survivors {:?}", b.survivors)
                })?;
                checked += 1;
            }
        }
    }
    for k in 1..10 {
        let c = q(k, 10);
        let b = deg2_plane_index_bound(&c).map_err(err)?;
        ensure(b.index <= 2, || {
            format!("degree-2 plane index {} at c = {c}", b.index)
        })?;
    }
    Ok(format!(
        "{checked} (l, c, ord) cases Gorenstein for l >= 3; degree-2 plane index <= 2"
    ))
}

fn c11_properties() -> Outcome {
    let config = Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    };
    let fail = |s: String| TestCaseError::fail(s);
    let mut runner = TestRunner::new(config.clone());
    runner
        .run(
            &(support_strategy(), raw_weights(), 1i64..5, slope_strategy()),
            |(pair, raw, k, t)| common::check_mu_homogeneity_and_duality(&pair, &raw, k, &t).map_err(fail),
        )
        .map_err(|e| format!("mu homogeneity/duality: {e}"))?;
    let problem = GitProblem::new(2, 4, 1).map_err(err)?;
    runner
        .run(
            &(raw_weights(), 0usize..3, slope_strategy(), slope_strategy()),
            |(raw, p, t1, t2)| common::check_nset_monotonicity(&problem, &raw, p, &t1, &t2).map_err(fail),
        )
        .map_err(|e| format!("N-set monotonicity: {e}"))?;
    runner
        .run(
            &(
                prop::sample::select(common::TORIC_MODELS.to_vec()),
                0usize..8,
                1i64..5,
                1i64..5,
            ),
            |(m, cone, w1, w2)| common::check_profile(m, cone, w1, w2).map_err(fail),
        )
        .map_err(|e| format!("volume profile: {e}"))?;
    runner
        .run(
            &(
                prop::sample::select(common::NS_MODELS.to_vec()),
                prop::collection::vec(0i64..3, 6),
            ),
            |(m, coeffs)| common::check_zariski(m, &coeffs).map_err(fail),
        )
        .map_err(|e| format!("Zariski: {e}"))?;
    runner
        .run(
            &(
                prop::sample::select(FamilyKey::GIT.to_vec()),
                0u32..1000,
                2u32..60,
            ),
            |(f, n, d)| {
                let c = common::unit_rational(n, d);
                common::check_t_c_inverse(f, &c).map_err(fail)?;
                common::check_cm_ratio(f, &c).map_err(fail)
            },
        )
        .map_err(|e| format!("t/c maps: {e}"))?;
    let nb = common::check_beta_identities()?;
    let nc = common::check_fixed_point_antisymmetry()?;
    Ok(format!(
        "5 proptest suites x {} cases; beta = A - S on {nb} valuations; fixed-point betas cancel on {nc} configurations",
        config.cases
    ))
}

#[cfg(feature = "grassmannian")]
fn c12_grassmannian() -> Outcome {
    let g = golden_git("quadric-pencil")?;
    let walls = kmoduli::git::grassmann::quadric_pencil_walls().map_err(err)?;
    let want = rationals(&g.walls);
    ensure(walls == want, || {
        format!("walls {{{}}} vs {{{}}}", show(&walls), show(&want))
    })?;
    Ok(format!("walls {{{}}}", show(&walls)))
}

fn main() -> ExitCode {
    #[allow(unused_mut)]
    let mut criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome>)> = vec![
        (
            1,
            "candidate subgroups for plane quartics",
            Box::new(c1_candidates),
        ),
        (
            2,
            "quartic + line walls",
            Box::new(|| git_case("quartic-line", Duration::from_secs(30))),
        ),
        (
            3,
            "cubic surface walls",
            Box::new(|| git_case("cubic-surface", Duration::from_secs(600))),
        ),
        (4, "binary walls and stability", Box::new(c4_binary)),
        (5, "K-moduli wall assembly", Box::new(c5_kwalls)),
        (6, "beta reproduction", Box::new(c6_beta)),
        (7, "lattice-model S values", Box::new(c7_s_values)),
        (8, "centroid vs brute force", Box::new(c8_centroid)),
        (9, "C*-invariant quartic pairs", Box::new(c9_cstar)),
        (10, "Gorenstein bounds", Box::new(c10_gorenstein)),
        (11, "property suites", Box::new(c11_properties)),
    ];
    #[cfg(feature = "grassmannian")]
    criteria.push((12, "degree-4 Grassmannian walls", Box::new(c12_grassmannian)));

    let mut failed = 0;
    for (n, name, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("criterion {n}: PASS {name} [{ms} ms]: {detail}"),
            Err(e) if *n == 12 => {
                println!("criterion {n}: FAIL {name} [{ms} ms]: {e} (optional, not gating)")
            }
            Err(e) => {
                failed += 1;
                println!("criterion {n}: FAIL {name} [{ms} ms]: {e}");
            }
        }
    }
    #[cfg(not(feature = "grassmannian"))]
    println!("criterion 12: SKIP degree-4 Grassmannian walls (optional, needs --features grassmannian)");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
