//! Subgroup computations: closures, membership, derived and lower central series.
//!
//! `cargo run --example subgroups`

use ssp_groups::invariants::build_heisenberg_power;
use ssp_groups::subgroups::{
    center, closure, derived_subgroup, is_metabelian, lower_central_series, normal_closure,
};
use ssp_groups::{EssentialChain, PcPresentation, PrimeModulus};

fn depths(d: Vec<usize>) -> String {
    let g: Vec<String> = d.iter().map(|i| format!("g{}", i + 1)).collect();
    format!("<{}>", g.join(", "))
}

fn main() -> ssp_groups::Result<()> {
    let p = PrimeModulus::new(3)?;
    // class 3 group on 6 generators: [g1, g5] = g3, [g1, g6] = g2
    let chain = EssentialChain::new(p, 6, &[vec![0], vec![0, 0], vec![0, 1, 0], vec![1, 0, 0, 0]])?;
    let g = PcPresentation::compile(&chain);

    let s = closure(&g, &[g.generator(0), g.generator(4)]);
    println!("<g1, g5> has order {} with depths {}", s.order(&g), depths(s.depths()));
    let x = g.mul(&g.generator(0), &g.generator(2));
    println!("g1 g3 in <g1, g5>: {}", s.contains(&g, &x));
    println!("normal closure of g1: {}", depths(normal_closure(&g, &[g.generator(0)]).depths()));
    println!("derived subgroup: {}", depths(derived_subgroup(&g).depths()));
    println!("metabelian: {}", is_metabelian(&g));
    for (k, term) in lower_central_series(&g)?.iter().enumerate() {
        println!("gamma_{}: {}", k + 1, depths(term.depths()));
    }
    println!("center: {}", depths(center(&g, 1_000_000)?.depths()));

    let p2 = PcPresentation::compile(&build_heisenberg_power(p, 2)?);
    println!("P_2 center: {}", depths(center(&p2, 1_000_000)?.depths()));
    Ok(())
}
