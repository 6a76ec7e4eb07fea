//! Subgroups as induced generating sequences: echelonized generating sets
//! with strictly increasing depths and leading exponent 1.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::pc::{ExponentVector, PcPresentation, MAX_GENERATORS};

/// Default element limit for brute-force computations.
pub const DEFAULT_BRUTE_FORCE_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSequence {
    n: usize,
    // powers[d] = [s, s^2, ..., s^{p-1}] for the element s of depth d
    slots: Vec<Option<Vec<ExponentVector>>>,
}

impl InducedSequence {
    pub fn trivial(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS);
        InducedSequence {
            n,
            slots: vec![None; n],
        }
    }

    /// The whole group: the generators themselves.
    pub fn whole(pres: &PcPresentation) -> Self {
        let mut seq = Self::trivial(pres.n());
        for i in 0..pres.n() {
            seq.insert_normalized(pres, pres.generator(i));
        }
        seq
    }

    /// `<g_{lo+1}, ..., g_{hi}>` for 0-based half-open `lo..hi`, assuming it is a subgroup.
    pub fn span(pres: &PcPresentation, range: std::ops::Range<usize>) -> Self {
        closure(pres, &range.map(|i| pres.generator(i)).collect::<Vec<_>>())
    }

    fn insert_normalized(&mut self, pres: &PcPresentation, s: ExponentVector) {
        let d = s.depth().expect("identity has no depth");
        debug_assert_eq!(s.get(d), 1);
        let pm1 = pres.p().get() as usize - 1;
        let mut powers = Vec::with_capacity(pm1);
        let mut acc = s;
        powers.push(acc);
        for _ in 1..pm1 {
            acc = pres.mul(&acc, &s);
            powers.push(acc);
        }
        self.slots[d] = Some(powers);
    }

    /// Number of elements; the subgroup has order `p^len`.
    pub fn len(&self) -> usize {
        self.slots.iter().filter(|s| s.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.is_empty()
    }

    pub fn order(&self, pres: &PcPresentation) -> u128 {
        (pres.p().get() as u128).pow(self.len() as u32)
    }

    /// The sequence elements in order of increasing depth.
    pub fn elements(&self) -> Vec<ExponentVector> {
        self.slots.iter().flatten().map(|pw| pw[0]).collect()
    }

    /// 0-based leading indices.
    pub fn depths(&self) -> Vec<usize> {
        (0..self.n).filter(|&d| self.slots[d].is_some()).collect()
    }

    /// Residue after cancelling leading terms; trivial iff `x` is a member.
    pub fn sift(&self, pres: &PcPresentation, x: &ExponentVector) -> ExponentVector {
        let p = pres.p();
        let mut r = *x;
        for d in 0..self.n {
            let e = r.get(d);
            if e == 0 {
                continue;
            }
            match &self.slots[d] {
                Some(powers) => {
                    let m = p.neg(e);
                    r = pres.mul(&powers[m as usize - 1], &r);
                }
                None => return r,
            }
        }
        r
    }

    pub fn contains(&self, pres: &PcPresentation, x: &ExponentVector) -> bool {
        self.sift(pres, x).is_identity()
    }

    pub fn is_subgroup_of(&self, pres: &PcPresentation, other: &InducedSequence) -> bool {
        self.elements().iter().all(|x| other.contains(pres, x))
    }

    pub fn same_subgroup(&self, pres: &PcPresentation, other: &InducedSequence) -> bool {
        self.len() == other.len() && self.is_subgroup_of(pres, other)
    }

    /// Whether the sequence elements pairwise commute.
    pub fn is_abelian(&self, pres: &PcPresentation) -> bool {
        let els = self.elements();
        els.iter().enumerate().all(|(i, x)| {
            els[i + 1..]
                .iter()
                .all(|y| pres.mul(x, y) == pres.mul(y, x))
        })
    }
}

/// Residue of `x` modulo the subgroup generated by `seq`.
pub fn sift(pres: &PcPresentation, seq: &InducedSequence, x: &ExponentVector) -> ExponentVector {
    seq.sift(pres, x)
}

fn close(
    pres: &PcPresentation,
    generators: &[ExponentVector],
    normalizers: &[ExponentVector],
    start: InducedSequence,
) -> InducedSequence {
    let p = pres.p();
    let mut seq = start;
    let mut queue: VecDeque<ExponentVector> = generators.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        let r = seq.sift(pres, &x);
        let Some(d) = r.depth() else { continue };
        let s = pres.pow(&r, p.inv(r.get(d)) as i64);
        let existing = seq.elements();
        seq.insert_normalized(pres, s);
        queue.push_back(pres.pow(&s, p.get() as i64));
        for t in existing {
            queue.push_back(pres.comm(&s, &t));
        }
        for g in normalizers {
            queue.push_back(pres.conj(&s, g));
        }
    }
    seq
}

/// The subgroup generated by `generators`.
pub fn closure(pres: &PcPresentation, generators: &[ExponentVector]) -> InducedSequence {
    close(pres, generators, &[], InducedSequence::trivial(pres.n()))
}

/// The closure of `generators` under products and conjugation by `normalizers`.
pub fn normal_closure_under(
    pres: &PcPresentation,
    generators: &[ExponentVector],
    normalizers: &[ExponentVector],
) -> InducedSequence {
    close(pres, generators, normalizers, InducedSequence::trivial(pres.n()))
}

/// The smallest normal subgroup of the whole group containing `generators`.
pub fn normal_closure(pres: &PcPresentation, generators: &[ExponentVector]) -> InducedSequence {
    let gens: Vec<_> = (0..pres.n()).map(|i| pres.generator(i)).collect();
    normal_closure_under(pres, generators, &gens)
}

/// `closure` with an explicit normal-closure flag.
pub fn closure_with(
    pres: &PcPresentation,
    generators: &[ExponentVector],
    normal: bool,
) -> InducedSequence {
    if normal {
        normal_closure(pres, generators)
    } else {
        closure(pres, generators)
    }
}

/// `[G, G]`, the normal closure of the generator commutators.
pub fn derived_subgroup(pres: &PcPresentation) -> InducedSequence {
    let n = pres.n();
    let mut comms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            comms.push(*pres.relation(i, j));
        }
    }
    normal_closure(pres, &comms)
}

/// `[H, H]` for a subgroup `H`.
pub fn derived_of(pres: &PcPresentation, seq: &InducedSequence) -> InducedSequence {
    let els = seq.elements();
    let mut comms = Vec::new();
    for (i, x) in els.iter().enumerate() {
        for y in &els[i + 1..] {
            comms.push(pres.comm(x, y));
        }
    }
    normal_closure_under(pres, &comms, &els)
}

/// Whether the derived subgroup is abelian.
pub fn is_metabelian(pres: &PcPresentation) -> bool {
    derived_subgroup(pres).is_abelian(pres)
}

/// `gamma_1 = G, gamma_{k+1} = [gamma_k, G]`, ending with the trivial subgroup.
///
/// Fails if the series stops decreasing, which can only happen for an
/// inconsistent table.
pub fn lower_central_series(pres: &PcPresentation) -> Result<Vec<InducedSequence>> {
    let n = pres.n();
    let gens: Vec<_> = (0..n).map(|i| pres.generator(i)).collect();
    let mut series = vec![InducedSequence::whole(pres)];
    loop {
        let last = series.last().unwrap();
        if last.is_trivial() {
            return Ok(series);
        }
        let mut comms = Vec::new();
        for x in last.elements() {
            for g in &gens {
                let c = pres.comm(&x, g);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        let next = normal_closure_under(pres, &comms, &gens);
        if next.len() >= last.len() {
            return Err(Error::NotApplicable(
                "lower central series does not terminate (is the presentation consistent?)".into(),
            ));
        }
        series.push(next);
    }
}

/// Length of the lower central series before it reaches the trivial group.
pub fn nilpotency_class(pres: &PcPresentation) -> Result<usize> {
    Ok(lower_central_series(pres)?.len() - 1)
}

/// The center, by filtering every element against the generators.
pub fn center(pres: &PcPresentation, limit: u128) -> Result<InducedSequence> {
    let needed = pres.order_bound();
    if needed > limit {
        return Err(Error::Capacity {
            what: "center",
            needed,
            limit,
        });
    }
    let gens: Vec<_> = (0..pres.n()).map(|i| pres.generator(i)).collect();
    let central: Vec<_> = pres
        .elements()
        .filter(|x| gens.iter().all(|g| pres.mul(x, g) == pres.mul(g, x)))
        .collect();
    let seq = closure(pres, &central);
    debug_assert_eq!(seq.order(pres), central.len() as u128);
    Ok(seq)
}
