//! The groups P_k of type G(3k, 2k) and the fact that they do not lift.
//!
//! `cargo run --example heisenberg_powers`

use ssp_groups::consistency::is_consistent;
use ssp_groups::enumerate::extend_all;
use ssp_groups::invariants::{build_heisenberg_power, cutoff, triple_factors};
use ssp_groups::subgroups::nilpotency_class;
use ssp_groups::{PcPresentation, PrimeModulus};

fn main() -> ssp_groups::Result<()> {
    for p in [2, 3, 5] {
        let p = PrimeModulus::new(p)?;
        for k in 1..=3 {
            let chain = build_heisenberg_power(p, k)?;
            let class = nilpotency_class(&PcPresentation::compile(&chain))?;
            let factors = triple_factors(&chain).expect("cut-off fits");
            println!(
                "p = {}, k = {k}: n = {}, cut-off {}, class {class}, consistent {}, factors {:?}, lifts {}",
                p.get(),
                chain.n(),
                cutoff(&chain),
                is_consistent(&chain),
                factors,
                extend_all(&chain).len()
            );
        }
    }
    Ok(())
}
