use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime modulus `p`, the common order of every polycyclic generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u16::MAX as u64 {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u16, b: u16) -> u16 {
        ((a as u32 + b as u32) % self.0) as u16
    }

    #[inline]
    pub fn neg(self, a: u16) -> u16 {
        if a == 0 {
            0
        } else {
            (self.0 - a as u32) as u16
        }
    }

    #[inline]
    pub fn mul(self, a: u16, b: u16) -> u16 {
        ((a as u32 * b as u32) % self.0) as u16
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u16) -> u16 {
        assert!(a as u32 % self.0 != 0, "zero has no inverse mod {}", self.0);
        // a^(p-2) mod p
        let p = self.0 as u64;
        let mut base = a as u64 % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u16
    }

    /// Reduce an arbitrary integer into `0..p`.
    pub fn reduce(self, a: i64) -> u16 {
        a.rem_euclid(self.0 as i64) as u16
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0 as u64
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_small_values() {
        for n in [0, 1, 4, 9, 15, 65535] {
            assert!(PrimeModulus::new(n).is_err(), "{n}");
        }
        for n in [2, 3, 5, 7, 65521] {
            assert_eq!(PrimeModulus::new(n).unwrap().get() as u64, n);
        }
        assert_eq!(PrimeModulus::new(65537), Err(Error::PrimeTooLarge(65537)));
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 11, 101] {
            let m = PrimeModulus::new(p).unwrap();
            for a in 1..p as u16 {
                assert_eq!(m.mul(a, m.inv(a)), 1);
            }
        }
    }
}
