//! Arithmetic by collection in the Heisenberg group of order 27.
//!
//! `cargo run --example collection`

use ssp_groups::{EssentialChain, GroupWord, PcPresentation, PrimeModulus};

fn main() -> ssp_groups::Result<()> {
    let p = PrimeModulus::new(3)?;
    // [g1, g3] = g2, every other commutator trivial
    let chain = EssentialChain::new(p, 3, &[vec![1]])?;
    let h = PcPresentation::compile(&chain);
    let (g1, g2, g3) = (h.generator(0), h.generator(1), h.generator(2));

    println!("g3 g1 = {}", h.multiply(&g3, &g1)?);
    println!("[g1, g3] = {}", h.commutator(&g1, &g3)?);
    let x = h.multiply(&g1, &g3)?;
    println!("(g1 g3)^-1 = {}", h.inverse(&x)?);
    println!("(g1 g3)^3 = {}", h.power(&x, 3)?);
    println!("g2 is central: {}", h.mul(&g2, &g3) == h.mul(&g3, &g2));

    let word = GroupWord::new(vec![(2, 1), (0, 2), (2, -1)]);
    println!("g3 g1^2 g3^-1 = {}", h.evaluate(&word)?);

    // the shift g_i -> g_{i+1} is defined on <g1, g2>
    println!("f(g1 g2^2) = {}", h.apply_f(&h.mul(&g1, &h.pow(&g2, 2)))?);
    match h.apply_f(&g3) {
        Ok(_) => unreachable!(),
        Err(e) => println!("f(g3): {e}"),
    }
    Ok(())
}
