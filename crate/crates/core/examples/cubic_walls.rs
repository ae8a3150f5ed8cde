//! Walls for cubic surfaces with a hyperplane section.

use kmoduli::atlas::{c_of_t, FamilyKey};
use kmoduli::git::{wall_chamber_decomposition, GitProblem, DEFAULT_CAP};

pub fn run_example() -> kmoduli::Result<()> {
    let dec = wall_chamber_decomposition(&GitProblem::new(3, 3, 1)?, DEFAULT_CAP)?;
    println!(
        "{} candidates, t_max = {}",
        dec.candidates.candidates.len(),
        dec.t_max()
            .map(|t| t.to_string())
            .unwrap_or_else(|| "none".into())
    );
    for t in &dec.walls {
        println!("  t = {t:<5} c = {}", c_of_t(FamilyKey::Deg3Cubic, t)?);
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
