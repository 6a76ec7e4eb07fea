//! Collection checked against naive rewriting of letter words straight from
//! the defining relations.

use proptest::prelude::*;
use ssp_groups::consistency::is_consistent;
use ssp_groups::{EssentialChain, ExponentVector, PcPresentation, PrimeModulus};

/// Rewrites a word of single generators to normal form using only
/// `g_j g_i = g_i g_j [g_i, g_j]^{-1}` for `i < j` and `g^p = 1`.
fn rewrite(pres: &PcPresentation, mut w: Vec<usize>) -> ExponentVector {
    let p = pres.p().get() as usize;
    loop {
        if let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1]) {
            let (j, i) = (w[k], w[k + 1]);
            let c = pres.relation(i, j);
            // c^{-1}: letters of c reversed, each inverted to p - 1 copies
            let mut inv = Vec::new();
            for t in (0..pres.n()).rev() {
                for _ in 0..(c.get(t) as usize) * (p - 1) {
                    inv.push(t);
                }
            }
            let mut repl = vec![i, j];
            repl.extend(inv);
            w.splice(k..k + 2, repl);
            continue;
        }
        if let Some(k) = (0..w.len().saturating_sub(p - 1)).find(|&k| w[k..k + p].iter().all(|&g| g == w[k])) {
            w.drain(k..k + p);
            continue;
        }
        break;
    }
    let mut out = ExponentVector::identity(pres.n());
    for g in w {
        out.set(g, out.get(g) + 1);
    }
    out
}

fn letters(x: &ExponentVector) -> Vec<usize> {
    x.as_slice()
        .iter()
        .enumerate()
        .flat_map(|(g, &e)| std::iter::repeat(g).take(e as usize))
        .collect()
}

fn chains(p: u64, n: usize) -> Vec<EssentialChain> {
    let p = PrimeModulus::new(p).unwrap();
    let mut out = vec![EssentialChain::abelian(p, 2)];
    for _ in 3..=n {
        out = out
            .iter()
            .flat_map(ssp_groups::enumerate::extend_all)
            .collect();
    }
    out
}

#[test]
fn heisenberg_normal_forms() {
    let p = PrimeModulus::new(3).unwrap();
    let h = PcPresentation::compile(&EssentialChain::new(p, 3, &[vec![1]]).unwrap());
    for x in h.elements() {
        for y in h.elements() {
            let mut w = letters(&x);
            w.extend(letters(&y));
            assert_eq!(h.mul(&x, &y), rewrite(&h, w), "{x} * {y}");
        }
    }
}

#[test]
fn rewriting_agrees_on_all_small_groups() {
    for (p, n) in [(2, 5), (3, 4)] {
        for chain in chains(p, n) {
            assert!(is_consistent(&chain));
            let pres = PcPresentation::compile(&chain);
            let xs: Vec<_> = pres.elements().step_by(5).collect();
            for x in &xs {
                for y in &xs {
                    let mut w = letters(x);
                    w.extend(letters(y));
                    assert_eq!(pres.mul(x, y), rewrite(&pres, w), "{chain}: {x} * {y}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewriting_agrees_p3_n6(idx in 0usize..243, a in prop::collection::vec(0u16..3, 6), b in prop::collection::vec(0u16..3, 6)) {
        let all = chains(3, 6);
        let chain = &all[idx % all.len()];
        let pres = PcPresentation::compile(chain);
        let p = pres.p();
        let x = ExponentVector::from_slice(p, &a).unwrap();
        let y = ExponentVector::from_slice(p, &b).unwrap();
        let mut w = letters(&x);
        w.extend(letters(&y));
        prop_assert_eq!(pres.mul(&x, &y), rewrite(&pres, w));
    }
}
