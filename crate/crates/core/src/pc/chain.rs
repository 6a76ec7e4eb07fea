use std::fmt;

use crate::error::{Error, Result};
use crate::pc::{ExponentVector, PrimeModulus, MAX_GENERATORS};

/// The essential relations `[g_1, g_j] = g_2^{a_2} ... g_{j-1}^{a_{j-1}}` for
/// `j = 3..=n`; `[g_1, g_2]` is always trivial.
///
/// This is the canonical compact form of an SSP presentation: every other
/// commutator relation follows by shifting.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EssentialChain {
    p: PrimeModulus,
    n: usize,
    // a[3] ++ a[4] ++ ... ++ a[n], where a[j] has j - 2 entries
    entries: Vec<u16>,
}

#[inline]
fn offset(j: usize) -> usize {
    (j - 3) * (j - 2) / 2
}

impl EssentialChain {
    /// `vectors[j - 3]` holds the coefficients of `[g_1, g_j]` on `g_2..g_{j-1}`.
    pub fn new(p: PrimeModulus, n: usize, vectors: &[Vec<u16>]) -> Result<Self> {
        if !(2..=MAX_GENERATORS).contains(&n) {
            return Err(Error::GeneratorCount(n));
        }
        if vectors.len() != n - 2 {
            return Err(Error::InvalidChain(format!(
                "expected {} vectors for n = {n}, found {}",
                n - 2,
                vectors.len()
            )));
        }
        let mut entries = Vec::with_capacity(offset(n + 1));
        for (idx, v) in vectors.iter().enumerate() {
            let j = idx + 3;
            if v.len() != j - 2 {
                return Err(Error::InvalidChain(format!(
                    "chain[{idx}] (relation [g1, g{j}]) must have length {}, found {}",
                    j - 2,
                    v.len()
                )));
            }
            for (k, &e) in v.iter().enumerate() {
                if e as u32 >= p.get() {
                    return Err(Error::InvalidChain(format!(
                        "chain[{idx}][{k}] = {e} is not reduced mod {p}"
                    )));
                }
            }
            entries.extend_from_slice(v);
        }
        Ok(EssentialChain { p, n, entries })
    }

    /// The elementary abelian chain on `n` generators.
    pub fn abelian(p: PrimeModulus, n: usize) -> Self {
        assert!((2..=MAX_GENERATORS).contains(&n));
        EssentialChain {
            p,
            n,
            entries: vec![0; offset(n + 1)],
        }
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients of `[g_1, g_j]` on `g_2..g_{j-1}` (`j` is 1-based, `3 <= j <= n`).
    pub fn essential(&self, j: usize) -> &[u16] {
        assert!((3..=self.n).contains(&j), "no essential relation for g{j}");
        &self.entries[offset(j)..offset(j + 1)]
    }

    /// `[g_1, g_j]` as a normal form on all `n` generators; trivial for `j = 2`.
    pub fn essential_vector(&self, j: usize) -> ExponentVector {
        let mut v = ExponentVector::identity(self.n);
        if j >= 3 {
            for (k, &e) in self.essential(j).iter().enumerate() {
                v.set(k + 1, e);
            }
        }
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Restriction to the first `m` generators.
    pub fn prefix(&self, m: usize) -> Self {
        assert!((2..=self.n).contains(&m));
        EssentialChain {
            p: self.p,
            n: m,
            entries: self.entries[..offset(m + 1)].to_vec(),
        }
    }

    /// Adds `g_{n+1}` with `[g_1, g_{n+1}] = g_2^{a_2} ... g_n^{a_n}`.
    pub fn extended(&self, a: &[u16]) -> Result<Self> {
        if self.n + 1 > MAX_GENERATORS {
            return Err(Error::GeneratorCount(self.n + 1));
        }
        if a.len() != self.n - 1 {
            return Err(Error::InvalidChain(format!(
                "extension vector must have length {}, found {}",
                self.n - 1,
                a.len()
            )));
        }
        if let Some(&e) = a.iter().find(|&&e| e as u32 >= self.p.get()) {
            return Err(Error::InvalidChain(format!(
                "extension entry {e} is not reduced mod {}",
                self.p
            )));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + a.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(a);
        Ok(EssentialChain {
            p: self.p,
            n: self.n + 1,
            entries,
        })
    }

    /// The chain as nested vectors, in file-format order.
    pub fn to_vectors(&self) -> Vec<Vec<u16>> {
        (3..=self.n).map(|j| self.essential(j).to_vec()).collect()
    }

    pub(crate) fn top_mut(&mut self) -> &mut [u16] {
        let n = self.n;
        &mut self.entries[offset(n)..offset(n + 1)]
    }
}

impl fmt::Debug for EssentialChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EssentialChain(p={}, n={}, {:?})", self.p, self.n, self.to_vectors())
    }
}

impl fmt::Display for EssentialChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} n={} chain={:?}", self.p, self.n, self.to_vectors())
    }
}
