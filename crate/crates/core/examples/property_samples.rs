//! Seeded property samples: the f-equation in `Z_p^n` and the homomorphism
//! property of the shift.
//!
//! `cargo run --release --example property_samples`

use ssp_groups::enumerate::{enumerate_with, EnumerationOptions};
use ssp_groups::invariants::{apply_f_homomorphism_failures, f_equation_counterexamples};
use ssp_groups::{PcPresentation, PrimeModulus};

fn main() -> ssp_groups::Result<()> {
    for (p, n) in [(3, 8), (5, 6)] {
        let bad = f_equation_counterexamples(PrimeModulus::new(p)?, n, 100_000, 42);
        println!("f-equation p = {p}, n = {n}: {bad} counterexamples in 100000 samples");
    }
    let mut groups = 0;
    let mut failures = 0;
    enumerate_with(PrimeModulus::new(3)?, 6, &EnumerationOptions::default(), |n, gs| {
        if n == 6 {
            for (i, g) in gs.iter().enumerate().step_by(25) {
                let pres = PcPresentation::compile(&g.chain);
                failures += apply_f_homomorphism_failures(&pres, 10_000, i as u64);
                groups += 1;
            }
        }
    })?;
    println!("apply_f: {failures} failures over {groups} groups x 10000 pairs");
    Ok(())
}
