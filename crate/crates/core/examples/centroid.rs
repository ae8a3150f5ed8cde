//! Centroid criterion for the sample quartic pair, which is semistable only at its wall 7/5.

use kmoduli::git::centroid::centroid;
use kmoduli::git::{centroid_semistable, load_problem};
use kmoduli::kernel::q;

pub fn run_example() -> kmoduli::Result<()> {
    let file = load_problem("quartic-line")?;
    let pair = file.support()?.expect("quartic-line carries a sample pair");
    for t in [q(1, 4), q(1, 2), q(3, 4), q(1, 1), q(7, 5), q(3, 2), q(2, 1)] {
        let z: Vec<String> = centroid(&pair, &t).iter().map(|x| x.to_string()).collect();
        println!(
            "  t = {t:<4} centroid ({}) semistable: {}",
            z.join(", "),
            centroid_semistable(&pair, &t)?
        );
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
