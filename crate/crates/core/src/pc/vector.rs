use std::fmt;

use crate::error::{Error, Result};
use crate::pc::PrimeModulus;

/// Largest supported number of polycyclic generators.
pub const MAX_GENERATORS: usize = 32;

/// Normal form `g_1^{e_1} ... g_n^{e_n}` of a group element.
///
/// Positions are 0-based: `get(i)` is the exponent of `g_{i+1}`. Entries past
/// `len()` are always zero, so the derived comparisons only see the active part.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    len: u8,
    exps: [u16; MAX_GENERATORS],
}

impl ExponentVector {
    /// The identity element on `n` generators.
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        ExponentVector {
            len: n as u8,
            exps: [0; MAX_GENERATORS],
        }
    }

    /// The generator `g_{i+1}`.
    pub fn generator(n: usize, i: usize) -> Self {
        let mut v = Self::identity(n);
        v.exps[i] = 1;
        v
    }

    /// Builds a vector after checking every entry against `p`.
    pub fn from_slice(p: PrimeModulus, exps: &[u16]) -> Result<Self> {
        if exps.len() > MAX_GENERATORS {
            return Err(Error::GeneratorCount(exps.len()));
        }
        let mut v = Self::identity(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            if e as u32 >= p.get() {
                return Err(Error::Unreduced {
                    index: i,
                    value: e as u64,
                    p: p.get(),
                });
            }
            v.exps[i] = e;
        }
        Ok(v)
    }

    /// Builds a vector reducing arbitrary integers mod `p`.
    pub fn from_ints(p: PrimeModulus, exps: &[i64]) -> Self {
        let mut v = Self::identity(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            v.exps[i] = p.reduce(e);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u16 {
        self.exps[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, e: u16) {
        debug_assert!(i < self.len());
        self.exps[i] = e;
    }

    #[inline]
    pub fn as_slice(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    #[inline]
    pub(crate) fn as_mut_slice(&mut self) -> &mut [u16] {
        &mut self.exps[..self.len as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.as_slice().iter().all(|&e| e == 0)
    }

    /// Index of the first nonzero exponent.
    pub fn depth(&self) -> Option<usize> {
        self.as_slice().iter().position(|&e| e != 0)
    }

    /// Indices of the nonzero exponents.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
    }

    /// Moves every exponent `k` places up, `e_i -> e_{i+k}`. Returns `None` when
    /// a nonzero exponent would fall off the end.
    pub fn shifted(&self, k: usize) -> Option<Self> {
        let n = self.len();
        if self.as_slice()[n.saturating_sub(k)..].iter().any(|&e| e != 0) {
            return None;
        }
        let mut out = Self::identity(n);
        out.exps[k..n].copy_from_slice(&self.exps[..n - k]);
        Some(out)
    }

    /// Componentwise sum mod `p`, the product in an abelian section.
    pub fn add(&self, other: &Self, p: PrimeModulus) -> Self {
        let mut out = *self;
        for i in 0..self.len() {
            out.exps[i] = p.add(self.exps[i], other.exps[i]);
        }
        out
    }

    pub fn scale(&self, s: u16, p: PrimeModulus) -> Self {
        let mut out = *self;
        for e in out.as_mut_slice() {
            *e = p.mul(*e, s);
        }
        out
    }

    /// Restricts or zero-pads to `n` generators.
    pub fn resized(&self, n: usize) -> Self {
        let mut out = Self::identity(n);
        let m = n.min(self.len());
        out.exps[..m].copy_from_slice(&self.exps[..m]);
        out
    }
}

/// Serializes as a plain array of exponents.
impl serde::Serialize for ExponentVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.as_slice())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_slice())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.as_slice().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "g{}", i + 1)?;
            } else {
                write!(f, "g{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "e")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> PrimeModulus {
        PrimeModulus::new(3).unwrap()
    }

    #[test]
    fn shift_and_support() {
        let v = ExponentVector::from_slice(p3(), &[1, 2, 0, 0]).unwrap();
        let s = v.shifted(2).unwrap();
        assert_eq!(s.as_slice(), &[0, 0, 1, 2]);
        assert_eq!(s.depth(), Some(2));
        assert_eq!(s.support().collect::<Vec<_>>(), vec![2, 3]);
        assert!(s.shifted(1).is_none());
    }

    #[test]
    fn rejects_unreduced_entries() {
        assert!(matches!(
            ExponentVector::from_slice(p3(), &[0, 3]),
            Err(Error::Unreduced { index: 1, .. })
        ));
    }

    #[test]
    fn display() {
        let v = ExponentVector::from_slice(p3(), &[1, 2, 0]).unwrap();
        assert_eq!(v.to_string(), "g1 g2^2");
        assert_eq!(ExponentVector::identity(3).to_string(), "e");
    }
}
