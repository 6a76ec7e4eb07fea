//! Structural report for a presentation file, as text and JSON.
//!
//! `cargo run --example analyze_group -- data/class3_p3_n6.json`

use ssp_groups::invariants::{analyze, AnalysisLimits};
use ssp_groups::PresentationFile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/class3_p3_n6.json").into());
    let file = PresentationFile::parse(&std::fs::read_to_string(&path)?)?;
    let report = analyze(&file.chain, &AnalysisLimits::default())?;
    print!("{}", report.to_text());
    println!("violations: {:?}", report.violations());
    print!("{}", report.to_json());
    Ok(())
}
