//! A, S and beta on a toric degeneration, with the complexity-one verdict around its wall.

use kmoduli::kernel::q;
use kmoduli::kinv::{beta, complexity_one_check, load_config};

pub fn run_example() -> kmoduli::Result<()> {
    let cfg = load_config("kwall-row8")?;
    println!("{}: {}", cfg.name, cfg.description);
    for v in &cfg.valuations {
        let r = beta(&cfg.pair, v)?;
        let wall = r.wall.map(|w| w.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "  {:<6} A = {:<12} S = {:<12} beta = {:<12} wall {wall}",
            r.valuation, r.a, r.s, r.beta
        );
    }
    if let Some(data) = &cfg.complexity_one {
        for c in [q(1, 2), q(7, 10), q(4, 5)] {
            let r = complexity_one_check(&cfg.pair, data, &c)?;
            println!("  c = {c:<5} lambda_N = {:?} {:?}", r.lambda_n, r.verdict);
        }
    }
    Ok(())
}

fn main() -> kmoduli::Result<()> {
    run_example()
}
