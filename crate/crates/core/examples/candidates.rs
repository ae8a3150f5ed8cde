//! Candidate destabilizing subgroups for plane quartics with a line.

use kmoduli::git::{enumerate_candidates, GitProblem, DEFAULT_CAP};

pub fn run_example() -> kmoduli::Result<()> {
    let problem = GitProblem::new(2, 4, 1)?;
    let set = enumerate_candidates(&problem, DEFAULT_CAP)?;
    println!(
        "{} tie solutions, {} after pruning",
        set.raw_count,
        set.candidates.len()
    );
    for lam in &set.candidates {
        let self_dual = if lam.dual() == *lam { "  (self-dual)" } else { "" };
        println!("  {lam}{self_dual}");
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
