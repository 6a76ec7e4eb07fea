//! Affine matrix representation of a class-2 group, verified exhaustively.
//!
//! `cargo run --example matrix_rep -- data/heisenberg_power_p3_k2.json`

use ssp_groups::matrep::{build_affine_rep, verify_representation, verify_shifted_relations};
use ssp_groups::PresentationFile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/data/heisenberg_power_p3_k2.json").into()
    });
    let file = PresentationFile::parse(&std::fs::read_to_string(&path)?)?;
    let rep = build_affine_rep(&file.chain)?;
    print!("{}", rep.to_text());
    for k in 1..=rep.n - rep.cutoff {
        println!("B_{k} = {:?}", rep.block(k));
    }
    let verdict = verify_representation(&file.chain, &rep, 1_000_000);
    println!("homomorphism {}, faithful {} ({:?})", verdict.homomorphism, verdict.faithful, verdict.faithfulness);
    println!("shifted relations hold: {}", verify_shifted_relations(&file.chain, &rep));

    let mut broken = rep.clone();
    let c = broken.cutoff;
    for i in 1..=broken.w_rank {
        for k in broken.w_rank + 1..=c {
            broken.generators[c].set(i, k, 0);
        }
    }
    let bad = verify_representation(&file.chain, &broken, 1_000_000);
    println!("with B_1 zeroed: homomorphism {}, {:?}", bad.homomorphism, bad.failures);
    Ok(())
}
