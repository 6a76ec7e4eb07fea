//! Affine matrix representations over `Z_p` of class-2 groups.
//!
//! With cut-off `c`, `V = <g_1..g_c>` is elementary abelian and normal and
//! `K = <g_{c+1}..g_n>` complements it. The group acts on row vectors
//! `(1, x)`, `x` in `V`, by `x -> (x + a) A_k` for the element `a k`, where
//! `A_k` is conjugation by `k` on `V`. In the `W + Z` split of `V` every
//! `A_k` is `[[I, B_k], [0, I]]`.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{cutoff, cutoff_params, rank_mod_p, triple_factors};
use crate::pc::{EssentialChain, ExponentVector, PcPresentation, PrimeModulus};
use crate::subgroups::{nilpotency_class, DEFAULT_BRUTE_FORCE_LIMIT};

/// A square matrix `[[1, v], [0, K]]` over `Z_p`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMatrix {
    p: PrimeModulus,
    dim: usize,
    data: Vec<u16>,
}

impl AffineMatrix {
    pub fn identity(p: PrimeModulus, dim: usize) -> Self {
        let mut data = vec![0u16; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1;
        }
        AffineMatrix { p, dim, data }
    }

    /// `[[1, v], [0, k]]`.
    pub fn from_blocks(p: PrimeModulus, v: &[u16], k: &[Vec<u16>]) -> Self {
        let d = v.len() + 1;
        let mut m = Self::identity(p, d);
        m.data[1..d].copy_from_slice(v);
        for (i, row) in k.iter().enumerate() {
            m.data[(i + 1) * d + 1..(i + 2) * d].copy_from_slice(row);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<u16>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn get(&self, i: usize, k: usize) -> u16 {
        self.data[i * self.dim + k]
    }

    pub fn set(&mut self, i: usize, k: usize, e: u16) {
        self.data[i * self.dim + k] = e % self.p.get() as u16;
    }

    /// The translation row `v`.
    pub fn translation(&self) -> &[u16] {
        &self.row(0)[1..]
    }

    /// The linear block `K`.
    pub fn linear_part(&self) -> Vec<Vec<u16>> {
        (1..self.dim).map(|i| self.row(i)[1..].to_vec()).collect()
    }

    /// First column `(1, 0, ..., 0)`.
    pub fn is_affine(&self) -> bool {
        (0..self.dim).all(|i| self.get(i, 0) == u16::from(i == 0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dim;
        let p = self.p.get() as u64;
        let mut data = vec![0u16; d * d];
        for i in 0..d {
            let a = self.row(i);
            for k in 0..d {
                let s: u64 = (0..d)
                    .map(|m| a[m] as u64 * other.data[m * d + k] as u64)
                    .sum();
                data[i * d + k] = (s % p) as u16;
            }
        }
        AffineMatrix { p: self.p, dim: d, data }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.p, self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p, self.dim)
    }

    fn grid(&self) -> String {
        let mut s = String::new();
        for i in 0..self.dim {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            let _ = writeln!(s, "  {}", cells.join(" "));
        }
        s
    }
}

/// Serializes as the row-major grid.
impl Serialize for AffineMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// Generator images; the fields are public so that a broken representation
/// can be constructed for testing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineRepresentation {
    pub p: u32,
    pub n: usize,
    pub cutoff: usize,
    /// Rank of `W`; `V = W + Z` with `Z` of rank `cutoff - w_rank`.
    pub w_rank: usize,
    pub generators: Vec<AffineMatrix>,
}

impl AffineRepresentation {
    fn prime(&self) -> PrimeModulus {
        PrimeModulus::new(self.p as u64).expect("stored prime")
    }

    pub fn dim(&self) -> usize {
        self.cutoff + 1
    }

    /// Image of the normal form `g_1^{e_1} ... g_n^{e_n}`.
    pub fn image(&self, x: &ExponentVector) -> AffineMatrix {
        let mut acc = AffineMatrix::identity(self.prime(), self.dim());
        for (k, &e) in x.as_slice().iter().enumerate() {
            if e != 0 {
                acc = acc.mul(&self.generators[k].pow(e as u64));
            }
        }
        acc
    }

    /// The block `B_k` of the image of `g_{c+k}`, `k >= 1`.
    pub fn block(&self, k: usize) -> Vec<Vec<u16>> {
        let m = &self.generators[self.cutoff + k - 1];
        (1..=self.w_rank)
            .map(|i| m.row(i)[self.w_rank + 1..].to_vec())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("representation serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "p = {}, n = {}, dimension {}, V = W + Z with ranks {} + {}\n",
            self.p,
            self.n,
            self.dim(),
            self.w_rank,
            self.cutoff - self.w_rank
        );
        for (i, m) in self.generators.iter().enumerate() {
            let _ = writeln!(s, "g{}:", i + 1);
            s.push_str(&m.grid());
        }
        s
    }
}

/// Builds the representation of a consistent chain of class at most 2.
pub fn build_affine_rep(chain: &EssentialChain) -> Result<AffineRepresentation> {
    let pres = PcPresentation::compile(chain);
    let class = nilpotency_class(&pres)?;
    if class > 2 {
        return Err(Error::NotApplicable(format!(
            "class {class}: affine representations are built for class at most 2"
        )));
    }
    let n = chain.n();
    let c = cutoff(chain);
    if c < n {
        cutoff_params(n, c)?;
    }
    let w_rank = triple_factors(chain).map_or(0, |[w, _, _]| w.len());
    let p = chain.p();
    let mut generators = Vec::with_capacity(n);
    for i in 0..c {
        let mut v = vec![0u16; c];
        v[i] = 1;
        generators.push(AffineMatrix::from_blocks(p, &v, &identity_rows(c)));
    }
    for k in c..n {
        let mut a = identity_rows(c);
        for (i, row) in a.iter_mut().enumerate() {
            let t = pres.relation(i, k);
            if let Some(bad) = t.support().find(|&s| s >= c) {
                return Err(Error::NotApplicable(format!(
                    "[g{}, g{}] involves g{}, outside <g1..g{c}>",
                    i + 1,
                    k + 1,
                    bad + 1
                )));
            }
            for (slot, &e) in row.iter_mut().zip(t.as_slice()) {
                *slot = p.add(*slot, e);
            }
        }
        generators.push(AffineMatrix::from_blocks(p, &vec![0; c], &a));
    }
    Ok(AffineRepresentation {
        p: p.get(),
        n,
        cutoff: c,
        w_rank,
        generators,
    })
}

fn identity_rows(d: usize) -> Vec<Vec<u16>> {
    (0..d)
        .map(|i| (0..d).map(|k| u16::from(i == k)).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Faithfulness {
    /// All `p^n` normal-form images were compared.
    Exhaustive { distinct_images: u128 },
    /// The `B_k` blocks are linearly independent, so `k -> A_k` is injective.
    Triangular { block_rank: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentationVerdict {
    pub homomorphism: bool,
    pub faithful: bool,
    pub faithfulness: Faithfulness,
    pub failures: Vec<String>,
}

impl RepresentationVerdict {
    pub fn is_faithful_homomorphism(&self) -> bool {
        self.homomorphism && self.faithful
    }
}

fn relation_failures(
    rep: &AffineRepresentation,
    pairs: impl Iterator<Item = (usize, usize, ExponentVector)>,
) -> Vec<String> {
    let gens = &rep.generators;
    let mut out = Vec::new();
    for (i, j, t) in pairs {
        // g_i g_j = g_j g_i [g_i, g_j]
        let lhs = gens[i].mul(&gens[j]);
        let rhs = gens[j].mul(&gens[i]).mul(&rep.image(&t));
        if lhs != rhs {
            out.push(format!("[g{}, g{}] = {t} is not represented", i + 1, j + 1));
        }
    }
    out
}

/// Checks that the generator images satisfy every defining relation and
/// that the representation is injective.
pub fn verify_representation(
    chain: &EssentialChain,
    rep: &AffineRepresentation,
    limit: u128,
) -> RepresentationVerdict {
    let pres = PcPresentation::compile(chain);
    let n = chain.n();
    let p = chain.p().get() as u64;
    let mut failures = Vec::new();
    if rep.n != n || rep.generators.len() != n {
        failures.push(format!("representation has {} generators", rep.generators.len()));
        return RepresentationVerdict {
            homomorphism: false,
            faithful: false,
            faithfulness: Faithfulness::Exhaustive { distinct_images: 0 },
            failures,
        };
    }
    for (i, m) in rep.generators.iter().enumerate() {
        if !m.is_affine() {
            failures.push(format!("image of g{} is not affine", i + 1));
        }
        if !m.pow(p).is_identity() {
            failures.push(format!("image of g{} does not have order dividing {p}", i + 1));
        }
    }
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    failures.extend(relation_failures(
        rep,
        pairs.map(|(i, j)| (i, j, *pres.relation(i, j))),
    ));
    let homomorphism = failures.is_empty();

    let order = pres.order_bound();
    let (faithful, faithfulness) = if order <= limit {
        let seen = distinct_images(rep);
        let distinct = seen as u128;
        (
            distinct == order,
            Faithfulness::Exhaustive {
                distinct_images: distinct,
            },
        )
    } else {
        let prime = chain.p();
        let blocks: Vec<ExponentVector> = (1..=n - rep.cutoff)
            .map(|k| {
                let flat: Vec<u16> = rep.block(k).concat();
                ExponentVector::from_slice(prime, &flat).unwrap_or(ExponentVector::identity(0))
            })
            .collect();
        let rank = if blocks.iter().all(|b| b.len() == blocks[0].len()) {
            rank_mod_p(&blocks, prime)
        } else {
            0
        };
        (
            homomorphism && rank == n - rep.cutoff,
            Faithfulness::Triangular { block_rank: rank },
        )
    };
    if !faithful {
        failures.push("representation is not injective".into());
    }
    RepresentationVerdict {
        homomorphism,
        faithful,
        faithfulness,
        failures,
    }
}

/// Number of distinct images of the `p^n` normal forms, walking them in
/// odometer order and reusing prefix products.
fn distinct_images(rep: &AffineRepresentation) -> usize {
    let p = rep.prime();
    let pv = p.get() as usize;
    let n = rep.n;
    let identity = AffineMatrix::identity(p, rep.dim());
    let powers: Vec<Vec<AffineMatrix>> = rep
        .generators
        .iter()
        .map(|g| {
            let mut v = vec![identity.clone()];
            for e in 1..pv {
                v.push(v[e - 1].mul(g));
            }
            v
        })
        .collect();
    let mut prefix = vec![identity; n + 1];
    let mut exps = vec![0usize; n];
    let mut seen = HashSet::new();
    let mut from = 0;
    loop {
        for k in from..n {
            prefix[k + 1] = if exps[k] == 0 {
                prefix[k].clone()
            } else {
                prefix[k].mul(&powers[k][exps[k]])
            };
        }
        seen.insert(prefix[n].data.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return seen.len();
            }
            k -= 1;
            exps[k] += 1;
            if exps[k] < pv {
                break;
            }
            exps[k] = 0;
        }
        from = k;
    }
}

/// [`verify_representation`] with the default element limit.
pub fn verify_representation_default(
    chain: &EssentialChain,
    rep: &AffineRepresentation,
) -> RepresentationVerdict {
    verify_representation(chain, rep, DEFAULT_BRUTE_FORCE_LIMIT)
}

/// The images of `g_{i+1}, g_{j+1}` satisfy the shifted relation
/// `[g_{i+1}, g_{j+1}] = f([g_i, g_j])` for all `i < j < n`.
pub fn verify_shifted_relations(chain: &EssentialChain, rep: &AffineRepresentation) -> bool {
    let pres = PcPresentation::compile(chain);
    let n = chain.n();
    let pairs = (0..n - 1).flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)));
    let shifted = pairs.filter_map(|(i, j)| {
        pres.relation(i, j)
            .shifted(1)
            .map(|t| (i + 1, j + 1, t))
    });
    let triples: Vec<_> = shifted.collect();
    let expected = (n - 1) * (n.saturating_sub(2)) / 2;
    triples.len() == expected && relation_failures(rep, triples.into_iter()).is_empty()
}
