//! Runs every structural check on each enumerated group and tallies outcomes.
//!
//! `cargo run --release --example structural_sweep -- 3 6`

use std::collections::BTreeMap;

use ssp_groups::enumerate::{enumerate_with, EnumerationOptions};
use ssp_groups::invariants::{analyze, AnalysisLimits, Check};
use ssp_groups::PrimeModulus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let p: u64 = args.next().map_or(Ok(3), |s| s.parse())?;
    let n_max: usize = args.next().map_or(Ok(6), |s| s.parse())?;
    let limits = AnalysisLimits::default();
    let mut tally: BTreeMap<String, [u64; 4]> = BTreeMap::new();
    let mut first_failure = None;
    enumerate_with(
        PrimeModulus::new(p)?,
        n_max,
        &EnumerationOptions::default(),
        |_, groups| {
            for g in groups {
                let report = analyze(&g.chain, &limits).expect("consistent chain");
                for (name, c) in &report.checks {
                    let slot = match c {
                        Check::Pass => 0,
                        Check::Fail(_) => 1,
                        Check::NotApplicable(_) => 2,
                        Check::Capacity(_) => 3,
                    };
                    tally.entry(name.clone()).or_default()[slot] += 1;
                    if c.failed() && first_failure.is_none() {
                        first_failure = Some(format!("{}\n{}", g.chain, report.to_text()));
                    }
                }
            }
        },
    )?;
    println!("{:<24}{:>8}{:>8}{:>8}{:>9}", "check", "pass", "fail", "n/a", "capacity");
    for (name, [pass, fail, na, cap]) in &tally {
        println!("{name:<24}{pass:>8}{fail:>8}{na:>8}{cap:>9}");
    }
    if let Some(f) = first_failure {
        println!("\nfirst failure:\n{f}");
        std::process::exit(1);
    }
    Ok(())
}
