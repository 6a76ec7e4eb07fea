//! Deciding consistency by extending automorphisms, checked against the
//! associativity of collection.
//!
//! `cargo run --example consistency_check`

use ssp_groups::consistency::{associativity_oracle, build_alpha, is_consistent, OracleMode};
use ssp_groups::enumerate::extend_all;
use ssp_groups::{EssentialChain, PcPresentation, PrimeModulus};

fn main() -> ssp_groups::Result<()> {
    let p = PrimeModulus::new(3)?;
    let base_chain = EssentialChain::abelian(p, 3);
    let base = PcPresentation::compile(&base_chain);

    // [g1, g4] = g2^x g3^y extends the base iff the map g_i -> g_i [g_i, g_4]
    // is an automorphism of order dividing p
    for a in [[0u16, 0], [0, 1], [1, 0], [1, 1], [2, 2]] {
        let alpha = build_alpha(&base, &a)?;
        let images: Vec<String> = alpha.images().iter().map(|x| x.to_string()).collect();
        let chain = base_chain.extended(&a)?;
        println!(
            "a = {a:?}: images [{}], automorphism {}, consistent {}, oracle {}",
            images.join(", "),
            alpha.is_automorphism(),
            is_consistent(&chain),
            associativity_oracle(&chain, OracleMode::exhaustive())?,
        );
    }

    let kids = extend_all(&base_chain);
    println!("consistent extensions of the abelian group of rank 3: {}", kids.len());
    for k in kids {
        println!("  {k}");
    }

    // two bases on 5 generators: one lifts in every way, one in none; the
    // sampled oracle can only refute, so count what it catches
    for top in [vec![0, 1, 0], vec![1, 1, 0]] {
        let base_chain = EssentialChain::new(p, 5, &[vec![0], vec![0, 0], top])?;
        let base = PcPresentation::compile(&base_chain);
        let mut consistent = 0;
        let mut refuted = 0;
        for x in 0..81u16 {
            let a = [x / 27, (x / 9) % 3, (x / 3) % 3, x % 3];
            let chain = base_chain.extended(&a)?;
            let ours = build_alpha(&base, &a)?.is_automorphism();
            let mode = OracleMode::Sampled { triples: 2000, seed: x as u64 };
            let oracle = associativity_oracle(&chain, mode)?;
            assert!(oracle || !ours, "a consistent presentation is associative");
            consistent += u32::from(ours);
            refuted += u32::from(!oracle);
        }
        println!(
            "extensions of {base_chain}: {consistent} of 81 consistent, sampled oracle refutes {refuted} of the other {}",
            81 - consistent
        );
    }
    let heisenberg = EssentialChain::new(p, 3, &[vec![1]])?;
    println!("consistent extensions of the Heisenberg group: {}", extend_all(&heisenberg).len());
    Ok(())
}
