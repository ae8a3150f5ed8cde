//! Index bounds for degenerations and the CM slope behind each conversion map.

use kmoduli::atlas::{cm_slope, deg2_plane_index_bound, gorenstein_bound, t_of_c, FamilyKey};
use kmoduli::kernel::q;

pub fn run_example() -> kmoduli::Result<()> {
    for l in [3, 5, 9] {
        for ord in [1, 2] {
            let b = gorenstein_bound(l, &q(1, 2), ord)?;
            println!(
                "l = {l}, ord = {ord}: dn^2 <= {}, max index {}, Gorenstein {}",
                b.max_dn2, b.max_index, b.gorenstein
            );
        }
    }
    let d2 = deg2_plane_index_bound(&q(1, 2))?;
    println!(
        "degree-2 plane: index <= {} before excluding 3, {} after",
        d2.raw_index, d2.index
    );

    let c = q(1, 3);
    for f in FamilyKey::GIT {
        let (a, b) = cm_slope(f, &c)?;
        println!("{f}: CM slope ({a}, {b}) at c = {c}, t(c) = {}", t_of_c(f, &c)?);
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
