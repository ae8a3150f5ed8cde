//! Command orchestration and rendering. Every command produces a JSON value with sorted keys and
//! a Markdown rendering of the same data; timings go to the run manifest only, so the primary
//! output is a pure function of the inputs.

use std::fmt::Write as _;

use itertools::Itertools;
use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::atlas::kwalls_with_cap;
use crate::binary::{binary_pair_status, max_weighted_multiplicity};
use crate::error::{Error, Result};
use crate::git::centroid::{centroid, pair_points};
use crate::git::{centroid_semistable, enumerate_candidates, mu_t, wall_chamber_decomposition, ProblemFile};
use crate::kernel::{OnePS, Rational};
use crate::kinv::{beta, complexity_one_check, KConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Md,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Md),
            _ => Err(Error::Parse(format!("unknown format {s:?} (json or md)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub json: Value,
    pub markdown: String,
}

impl Rendered {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Md => self.markdown.clone(),
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn rationals(v: &[Rational]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.iter().join(", ")
    }
}

pub fn walls(file: &ProblemFile, cap: usize) -> Result<Rendered> {
    let problem = file.problem()?;
    let dec = wall_chamber_decomposition(&problem, cap)?;
    let mut md = String::new();
    let _ = writeln!(
        md,
        "# Walls for {} (n = {}, d = {}, e = {})\n",
        file.name, problem.n, problem.d, problem.e
    );
    let _ = writeln!(md, "- walls: {}", rationals(&dec.walls));
    if let Some(t) = dec.t_max() {
        let _ = writeln!(md, "- t_max: {t} (nothing is semistable beyond it)");
    }
    let _ = writeln!(
        md,
        "- candidates: {} after pruning, {} from the tie systems\n",
        dec.candidates.candidates.len(),
        dec.candidates.raw_count
    );
    let _ = writeln!(md, "| chamber | maximal families | subgroups |");
    let _ = writeln!(md, "|---|---|---|");
    for ch in &dec.chambers {
        let lams = ch
            .families
            .iter()
            .map(|f| f.lambda.to_string())
            .unique()
            .join(" ");
        let _ = writeln!(md, "| {} | {} | {} |", ch.interval, ch.families.len(), lams);
    }
    Ok(Rendered {
        json: json!({ "command": "walls", "input": file.name, "result": to_value(&dec) }),
        markdown: md,
    })
}

pub fn candidates(file: &ProblemFile, cap: usize) -> Result<Rendered> {
    let set = enumerate_candidates(&file.problem()?, cap)?;
    let mut md = format!(
        "# Candidate subgroups for {}\n\n{} candidates ({} before pruning)\n\n",
        file.name,
        set.candidates.len(),
        set.raw_count
    );
    for l in &set.candidates {
        let _ = writeln!(md, "- {l}");
    }
    Ok(Rendered {
        json: json!({ "command": "candidates", "input": file.name, "result": to_value(&set) }),
        markdown: md,
    })
}

/// Torus-level stability of the descriptor's sample at slope `t`. Binary samples use the
/// multiplicity criterion; monomial supports use the centroid test in the given frame, with
/// the worst candidate subgroup (over coordinate permutations) as a witness.
pub fn stability(file: &ProblemFile, t: &Rational, cap: usize) -> Result<Rendered> {
    if t.is_negative() {
        return Err(Error::Domain(format!("slope t = {t} is negative")));
    }
    if let Some((f, g)) = file.binary_pair()? {
        let status = binary_pair_status(&f, &g, t)?;
        let worst = max_weighted_multiplicity(&f, &g, t)?;
        let md = format!(
            "# Stability of {} at t = {t}\n\n- worst weighted multiplicity: {worst}\n- status: {status}\n",
            file.name
        );
        return Ok(Rendered {
            json: json!({
                "command": "stability",
                "input": file.name,
                "t": t.to_string(),
                "result": { "worst_multiplicity": worst.to_string(), "status": to_value(&status) },
            }),
            markdown: md,
        });
    }
    let pair = file
        .support()?
        .ok_or_else(|| Error::Parse(format!("{}: no [pair] or [binary] sample to test", file.name)))?;
    let semistable = centroid_semistable(&pair, t)?;
    let set = enumerate_candidates(&file.problem()?, cap)?;
    let mut worst: Option<(Rational, OnePS, Vec<usize>)> = None;
    for lam in &set.candidates {
        for perm in (0..=pair.n).permutations(pair.n + 1) {
            let mu = mu_t(&pair.permuted(&perm)?, lam, t)?;
            if worst.as_ref().is_none_or(|(w, _, _)| &mu < w) {
                worst = Some((mu, lam.clone(), perm));
            }
        }
    }
    let (mu, lam, perm) = worst.expect("candidate list is nonempty");
    let md = format!(
        "# Stability of {} at t = {t}\n\n- torus semistable: {semistable}\n- smallest candidate weight: mu = {mu} for {lam} under coordinate order {perm:?}\n",
        file.name
    );
    Ok(Rendered {
        json: json!({
            "command": "stability",
            "input": file.name,
            "t": t.to_string(),
            "result": {
                "semistable": semistable,
                "witness": { "mu": mu.to_string(), "lambda": to_value(&lam), "permutation": perm },
            },
        }),
        markdown: md,
    })
}

pub fn centroid_cmd(file: &ProblemFile, t: &Rational) -> Result<Rendered> {
    let pair = file
        .support()?
        .ok_or_else(|| Error::Parse(format!("{}: no [pair] sample", file.name)))?;
    let ok = centroid_semistable(&pair, t)?;
    let z = centroid(&pair, t);
    let pts = pair_points(&pair, t);
    let fmt_pt = |p: &[Rational]| format!("({})", p.iter().join(", "));
    let mut md = format!(
        "# Centroid test for {} at t = {t}\n\n- centroid: {}\n- in the convex hull: {ok}\n\nPoints:\n\n",
        file.name,
        fmt_pt(&z)
    );
    for p in &pts {
        let _ = writeln!(md, "- {}", fmt_pt(p));
    }
    let strs = |p: &[Rational]| p.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    Ok(Rendered {
        json: json!({
            "command": "centroid",
            "input": file.name,
            "t": t.to_string(),
            "result": {
                "centroid": strs(&z),
                "points": pts.iter().map(|p| strs(p)).collect::<Vec<_>>(),
                "semistable": ok,
            },
        }),
        markdown: md,
    })
}

pub fn beta_cmd(cfg: &KConfig, at: Option<&Rational>) -> Result<Rendered> {
    let reports = cfg
        .valuations
        .iter()
        .map(|v| beta(&cfg.pair, v))
        .collect::<Result<Vec<_>>>()?;
    let mut md = format!("# Beta-invariants for {}\n\n", cfg.name);
    if !cfg.description.is_empty() {
        let _ = writeln!(md, "{}\n", cfg.description);
    }
    let _ = write!(md, "| valuation | A(c) | S(c) | beta(c) | wall |");
    if at.is_some() {
        md.push_str(" beta at c |");
    }
    md.push_str("\n|---|---|---|---|---|");
    if at.is_some() {
        md.push_str("---|");
    }
    md.push('\n');
    for r in &reports {
        let wall = r.wall.as_ref().map_or("none".to_string(), |w| w.to_string());
        let _ = write!(
            md,
            "| {} | {} | {} | {} | {wall} |",
            r.valuation, r.a, r.s, r.beta
        );
        if let Some(c) = at {
            let _ = write!(md, " {} |", r.at(c));
        }
        md.push('\n');
    }
    let mut result = json!({ "valuations": to_value(&reports) });
    if let Some(c) = at {
        result["at"] = json!({
            "c": c.to_string(),
            "beta": reports.iter().map(|r| (r.valuation.clone(), Value::from(r.at(c).to_string()))).collect::<serde_json::Map<_, _>>(),
        });
        if let Some(data) = &cfg.complexity_one {
            let rep = complexity_one_check(&cfg.pair, data, c)?;
            let _ = writeln!(
                md,
                "\nTorus action with lambda_N = ({}, {}): beta(E+) = {}, beta(E-) = {}; verdict at c = {c}: {}",
                rep.lambda_n[0],
                rep.lambda_n[1],
                rep.plus.beta,
                rep.minus.beta,
                to_value(&rep.verdict).as_str().unwrap_or_default()
            );
            result["complexity_one"] = to_value(&rep);
        }
    }
    Ok(Rendered {
        json: json!({ "command": "beta", "input": cfg.name, "result": result }),
        markdown: md,
    })
}

pub fn kwalls_cmd(d: u32, variant: Option<&str>, cap: usize) -> Result<Rendered> {
    let walls = kwalls_with_cap(d, variant, cap)?;
    let title = match variant {
        Some(v) => format!("degree {d} ({v})"),
        None => format!("degree {d}"),
    };
    let mut md = format!("# K-moduli walls, {title}\n\n");
    if walls.is_empty() {
        md.push_str("There are no walls and only one chamber.\n");
    } else {
        let _ = writeln!(
            md,
            "{} walls: c = {}\n",
            walls.len(),
            walls.iter().map(|w| &w.c).join(", ")
        );
        md.push_str("| c | provenance | source |\n|---|---|---|\n");
        for w in &walls {
            let _ = writeln!(md, "| {} | {} | {} |", w.c, w.provenance, w.sources.join("; "));
        }
    }
    Ok(Rendered {
        json: json!({ "command": "kwalls", "degree": d, "variant": variant, "result": to_value(&walls) }),
        markdown: md,
    })
}

/// Provenance record for one run. Only the primary output is deterministic.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub input_digest: String,
    pub tool_version: String,
    pub timings_ms: u128,
    pub output_paths: Vec<String>,
}

/// SHA-256 over the inputs, each prefixed by its length.
pub fn input_digest(inputs: &[&str]) -> String {
    let mut h = Sha256::new();
    for s in inputs {
        h.update((s.len() as u64).to_le_bytes());
        h.update(s.as_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl RunManifest {
    pub fn new(
        command: &str,
        inputs: &[&str],
        elapsed: std::time::Duration,
        output_paths: Vec<String>,
    ) -> Self {
        RunManifest {
            command: command.to_string(),
            input_digest: input_digest(inputs),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timings_ms: elapsed.as_millis(),
            output_paths,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::git::load_problem;
    use crate::kernel::q;
    use crate::kinv::load_config;

    #[test]
    fn beta_report_is_deterministic() {
        let cfg = load_config("kwall-row8").unwrap();
        let a = beta_cmd(&cfg, Some(&q(7, 10))).unwrap().render(Format::Json);
        let b = beta_cmd(&cfg, Some(&q(7, 10))).unwrap().render(Format::Json);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["result"]["at"]["beta"]["E"], "0");
        assert_eq!(v["result"]["complexity_one"]["verdict"], "polystable");
    }

    #[test]
    fn binary_stability() {
        let file = load_problem("binary-octic-conic").unwrap();
        let r = stability(&file, &q(1, 2), 8).unwrap();
        assert_eq!(r.json["result"]["status"], "stable");
    }

    #[test]
    fn digest_separates_inputs() {
        assert_ne!(input_digest(&["ab", "c"]), input_digest(&["a", "bc"]));
        assert_eq!(input_digest(&["x"]).len(), 64);
    }

    #[test]
    fn nine_has_no_walls() {
        let r = kwalls_cmd(9, None, 8).unwrap();
        assert!(r.markdown.contains("no walls"));
        assert_eq!(r.json["result"], json!([]));
    }
}
