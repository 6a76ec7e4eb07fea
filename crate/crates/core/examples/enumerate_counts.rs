//! Counts consistent SSP presentations by class.
//!
//! `cargo run --release --example enumerate_counts -- 3 8`

use ssp_groups::enumerate::{enumerate, EnumerationOptions};
use ssp_groups::PrimeModulus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(Ok(3), |s| s.parse())?;
    let n_max: usize = args.next().map_or(Ok(6), |s| s.parse())?;
    let prune = args.next().is_some_and(|s| s == "prune");
    let options = EnumerationOptions {
        prune,
        ..Default::default()
    };
    let report = enumerate(PrimeModulus::new(p)?, n_max, &options);
    print!("{}", report.to_csv(true));
    println!("# candidates examined: {}", report.stats.consistency_tests);
    println!("# order-only failures: {}", report.order_failures.len());
    Ok(())
}
