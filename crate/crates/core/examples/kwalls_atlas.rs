//! K-moduli walls in every degree with where each value comes from.

use kmoduli::atlas::{kwalls, DEG8_VARIANTS};

pub fn run_example() -> kmoduli::Result<()> {
    for d in 2..=9u32 {
        let variants: Vec<Option<&str>> = if d == 8 {
            DEG8_VARIANTS.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        for v in variants {
            let walls = kwalls(d, v)?;
            let list: Vec<String> = walls
                .iter()
                .map(|w| format!("{} ({})", w.c, w.provenance))
                .collect();
            let list = if list.is_empty() {
                "none".to_string()
            } else {
                list.join(", ")
            };
            println!(
                "d = {d}{}: {list}",
                v.map(|v| format!(" [{v}]")).unwrap_or_default()
            );
        }
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
