//! S-invariants on Neron-Severi lattice models via Zariski decomposition.

use kmoduli::kernel::q;
use kmoduli::kinv::{load_config, s_invariant};
use kmoduli::surfaces::Surface;

pub fn run_example() -> kmoduli::Result<()> {
    for (config, label) in [("deg7-line", "l"), ("deg6-two-a1-ns", "F")] {
        let cfg = load_config(config)?;
        let s = s_invariant(&cfg.pair, cfg.valuation(label)?)?;
        println!("{config}/{label}: S = {s}");
        if let Surface::Ns(ns) = &cfg.pair.surface {
            let l = cfg.pair.polarization(&q(1, 2));
            let z = ns.zariski(&l)?;
            let neg: Vec<String> = z
                .negative
                .iter()
                .map(|(i, a)| format!("{a} {}", ns.negative_curves[*i].label))
                .collect();
            println!(
                "  at c = 1/2: vol = {}, negative part [{}]",
                ns.volume(&l)?,
                neg.join(", ")
            );
        }
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
