//! Walls and chambers for plane quartics with a line, printed with their K-moduli slopes.

use kmoduli::atlas::{c_of_t, FamilyKey};
use kmoduli::git::{wall_chamber_decomposition, GitProblem, DEFAULT_CAP};

pub fn run_example() -> kmoduli::Result<()> {
    let dec = wall_chamber_decomposition(&GitProblem::new(2, 4, 1)?, DEFAULT_CAP)?;
    println!(
        "{} candidate walls, {} genuine",
        dec.candidate_walls.len(),
        dec.walls.len()
    );
    for t in &dec.walls {
        println!("  t = {t:<5} c = {}", c_of_t(FamilyKey::Deg2Plane, t)?);
    }
    for ch in &dec.chambers {
        println!(
            "  chamber {}: {} maximal families",
            ch.interval,
            ch.families.len()
        );
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
