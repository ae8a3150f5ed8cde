//! Stability of binary octics with a quadric, across the walls.

use std::collections::BTreeSet;

use kmoduli::atlas::chamber_midpoints;
use kmoduli::binary::{binary_pair_status, binary_walls, max_weighted_multiplicity, BinaryForm};
use kmoduli::kernel::{q, Rational};

pub fn run_example() -> kmoduli::Result<()> {
    let walls = binary_walls(8, 2);
    println!(
        "walls: {}",
        walls.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
    );

    // A fivefold root of f is unstable until t = 1; the double root of g away from f takes over past t = 4.
    let f = BinaryForm::from_linear_factors(&[((1, 0), 5), ((1, -1), 1), ((1, 1), 1), ((1, -2), 1)])?;
    let g = BinaryForm::from_linear_factors(&[((1, -3), 2)])?;
    println!("f = {f}\ng = {g}");
    let mut samples: BTreeSet<Rational> = walls.iter().cloned().collect();
    samples.extend(chamber_midpoints(&walls));
    samples.insert(q(5, 1));
    for t in &samples {
        println!(
            "  t = {t:<4} max(k + t m) = {:<5} {}",
            max_weighted_multiplicity(&f, &g, t)?,
            binary_pair_status(&f, &g, t)?
        );
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
