use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use kmoduli::git::{load_problem, DEFAULT_CAP};
use kmoduli::kernel::parse_rational;
use kmoduli::kinv::load_config;
use kmoduli::report::{self, Format, Rendered, RunManifest};
use kmoduli::{data, Error, Result};

/// Exact VGIT walls, beta-invariants and K-moduli wall tables.
///
/// Inputs name a bundled file under `configs/` or a path ending in `.toml`. Set
/// KMODULI_DATA_DIR to read bundled data from another directory.
#[derive(Parser)]
#[command(name = "kmoduli", version)]
struct Cli {
    /// Output format: json or md.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Budget on the number of candidate subgroups.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write a run manifest (digest, version, timing) as JSON.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Walls and chambers of a GIT problem.
    Walls { problem: String },
    /// Stability of a problem's sample pair at slope t.
    Stability {
        problem: String,
        #[arg(long)]
        at: String,
    },
    /// A, S and beta of every valuation in a pair configuration.
    Beta {
        config: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// K-moduli walls for a degree from 2 to 9.
    Kwalls {
        degree: u32,
        /// Degree 8 only: p1xp1 or blp.
        #[arg(long)]
        variant: Option<String>,
    },
    /// Candidate destabilizing subgroups of a GIT problem.
    Candidates { problem: String },
    /// Centroid criterion for a problem's sample pair at slope t.
    Centroid {
        problem: String,
        #[arg(long)]
        at: String,
    },
}

fn input_text(name: &str) -> Result<String> {
    if name.ends_with(".toml") {
        std::fs::read_to_string(name).map_err(|e| Error::Parse(format!("cannot read {name}: {e}")))
    } else {
        data::read(&format!("configs/{name}.toml"))
    }
}

fn run(cli: &Cli) -> Result<(&'static str, Vec<String>, Rendered)> {
    Ok(match &cli.command {
        Command::Walls { problem } => (
            "walls",
            vec![input_text(problem)?],
            report::walls(&load_problem(problem)?, cli.cap)?,
        ),
        Command::Candidates { problem } => (
            "candidates",
            vec![input_text(problem)?],
            report::candidates(&load_problem(problem)?, cli.cap)?,
        ),
        Command::Stability { problem, at } => (
            "stability",
            vec![input_text(problem)?, at.clone()],
            report::stability(&load_problem(problem)?, &parse_rational(at)?, cli.cap)?,
        ),
        Command::Centroid { problem, at } => (
            "centroid",
            vec![input_text(problem)?, at.clone()],
            report::centroid_cmd(&load_problem(problem)?, &parse_rational(at)?)?,
        ),
        Command::Beta { config, at } => {
            let c = at.as_deref().map(parse_rational).transpose()?;
            (
                "beta",
                vec![input_text(config)?, at.clone().unwrap_or_default()],
                report::beta_cmd(&load_config(config)?, c.as_ref())?,
            )
        }
        Command::Kwalls { degree, variant } => (
            "kwalls",
            vec![degree.to_string(), variant.clone().unwrap_or_default()],
            report::kwalls_cmd(*degree, variant.as_deref(), cli.cap)?,
        ),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = cli.format.parse::<Format>().and_then(|format| {
        let (name, inputs, rendered) = run(&cli)?;
        let text = rendered.render(format);
        let mut outputs = Vec::new();
        match &cli.out {
            Some(path) => {
                std::fs::write(path, &text)
                    .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
                outputs.push(path.display().to_string());
            }
            None => print!("{text}"),
        }
        if let Some(path) = &cli.manifest {
            let refs: Vec<&str> = inputs.iter().map(String::as_str).collect();
            let m = RunManifest::new(name, &refs, start.elapsed(), outputs);
            let json = serde_json::to_string_pretty(&m).expect("manifest serializes") + "\n";
            std::fs::write(path, json)
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
