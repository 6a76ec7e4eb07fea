//! Reading and writing presentation files.
//!
//! `cargo run --example presentation_file -- data/heisenberg_p3.json`

use ssp_groups::subgroups::center;
use ssp_groups::{PcPresentation, PresentationFile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/heisenberg_p3.json").into());
    let mut file = PresentationFile::parse(&std::fs::read_to_string(&path)?)?;
    println!("{path}: {}", file.chain);
    for (name, gens) in &file.subgroups {
        let shown: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        println!("  subgroup {name}: <{}>", shown.join(", "));
    }

    // recompute the center and write the canonical form back out
    let pres = PcPresentation::compile(&file.chain);
    file.subgroups
        .insert("center".into(), center(&pres, 1_000_000)?.elements());
    print!("{}", file.to_text());

    match PresentationFile::parse("{\"chain\": [[3]], \"n\": 3, \"p\": 3}") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
