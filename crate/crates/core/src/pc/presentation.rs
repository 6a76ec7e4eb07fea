use crate::error::{Error, Result};
use crate::pc::{EssentialChain, ExponentVector, GroupWord, PrimeModulus, MAX_GENERATORS};

/// Above this many cached vectors the conjugate-power table is skipped and
/// powers are formed by repeated multiplication instead.
const POWER_TABLE_LIMIT: usize = 1 << 16;

/// A power-commutator presentation with relations `g_i^p = e` and
/// `[g_i, g_j] = c[i][j]` supported strictly between `i` and `j`.
///
/// Multiplication is collection from the left. Before use, the presentation
/// caches the conjugates `g_k^{g_i^e}` (and their powers for small `p`) in
/// normal form; these are computed from the top generator down, so each
/// entry only relies on collection in `<g_{i+1}, ..., g_n>`.
#[derive(Clone, Debug)]
pub struct PcPresentation {
    p: PrimeModulus,
    n: usize,
    relations: Vec<ExponentVector>,
    conj: Vec<ExponentVector>,
    conj_pow: Option<Vec<ExponentVector>>,
}

#[inline]
fn tri(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl PcPresentation {
    /// Expands an essential chain into the full shift-closed relation table.
    pub fn compile(chain: &EssentialChain) -> Self {
        let n = chain.n();
        let mut relations = vec![ExponentVector::identity(n); n * (n - 1) / 2];
        for j in 2..n {
            let top = chain.essential_vector(j + 1);
            for i in 0..n - j {
                relations[tri(n, i, j + i)] = top.shifted(i).expect("support stays below g_n");
            }
        }
        Self::build(chain.p(), n, relations)
    }

    /// A presentation from an explicit table. Pairs not listed have trivial
    /// commutator. Only the support condition is enforced, so tables that are
    /// not shift-closed (or not consistent) are accepted.
    pub fn from_table(
        p: PrimeModulus,
        n: usize,
        table: &[((usize, usize), ExponentVector)],
    ) -> Result<Self> {
        if !(1..=MAX_GENERATORS).contains(&n) {
            return Err(Error::GeneratorCount(n));
        }
        let mut relations = vec![ExponentVector::identity(n); n * (n - 1) / 2];
        for &((i, j), v) in table {
            if !(i < j && j < n) {
                return Err(Error::InvalidTable(format!("pair ({i}, {j}) out of range")));
            }
            if v.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: v.len(),
                });
            }
            if let Some(k) = v.support().find(|&k| k <= i || k >= j) {
                return Err(Error::InvalidTable(format!(
                    "[g{}, g{}] involves g{}, outside g{}..g{}",
                    i + 1,
                    j + 1,
                    k + 1,
                    i + 2,
                    j
                )));
            }
            if v.as_slice().iter().any(|&e| e as u32 >= p.get()) {
                return Err(Error::InvalidTable("exponent not reduced".into()));
            }
            relations[tri(n, i, j)] = v;
        }
        Ok(Self::build(p, n, relations))
    }

    fn build(p: PrimeModulus, n: usize, relations: Vec<ExponentVector>) -> Self {
        let pm1 = p.get() as usize - 1;
        let pairs = relations.len();
        let id = ExponentVector::identity(n);
        let use_table = pairs * pm1 * pm1 <= POWER_TABLE_LIMIT;
        let mut pres = PcPresentation {
            p,
            n,
            relations,
            conj: vec![id; pairs * pm1],
            conj_pow: use_table.then(|| vec![id; pairs * pm1 * pm1]),
        };
        if n < 2 {
            return pres;
        }
        for i in (0..n - 1).rev() {
            // g_i^{-1} g_k g_i = g_k [g_k, g_i] = g_k c[i][k]^{-1}
            for k in i + 1..n {
                let c = pres.relations[tri(n, i, k)];
                let mut v = ExponentVector::generator(n, k);
                let ci = pres.inv(&c);
                pres.mul_assign(&mut v, &ci);
                let slot = pres.conj_index(i, k, 1);
                pres.conj[slot] = v;
            }
            for e in 2..=pm1 as u16 {
                for k in i + 1..n {
                    let prev = pres.conj[pres.conj_index(i, k, e - 1)];
                    let mut img = ExponentVector::identity(n);
                    for l in prev.support() {
                        let base = pres.conj[pres.conj_index(i, l, 1)];
                        let pw = pres.pow_small(&base, prev.get(l));
                        pres.mul_assign(&mut img, &pw);
                    }
                    let slot = pres.conj_index(i, k, e);
                    pres.conj[slot] = img;
                }
            }
            if pres.conj_pow.is_some() {
                for k in i + 1..n {
                    for e in 1..=pm1 as u16 {
                        let base = pres.conj[pres.conj_index(i, k, e)];
                        for m in 1..=pm1 as u16 {
                            let v = pres.pow_small(&base, m);
                            let slot = pres.pow_index(i, k, e, m);
                            pres.conj_pow.as_mut().unwrap()[slot] = v;
                        }
                    }
                }
            }
        }
        pres
    }

    #[inline]
    fn conj_index(&self, i: usize, k: usize, e: u16) -> usize {
        tri(self.n, i, k) * (self.p.get() as usize - 1) + (e as usize - 1)
    }

    #[inline]
    fn pow_index(&self, i: usize, k: usize, e: u16, m: u16) -> usize {
        let pm1 = self.p.get() as usize - 1;
        self.conj_index(i, k, e) * pm1 + (m as usize - 1)
    }

    /// `(g_k^m)^(g_i^e)` in normal form.
    #[inline]
    fn conj_power(&self, i: usize, k: usize, e: u16, m: u16) -> ExponentVector {
        match &self.conj_pow {
            Some(t) => t[self.pow_index(i, k, e, m)],
            None => self.pow_small(&self.conj[self.conj_index(i, k, e)], m),
        }
    }

    fn pow_small(&self, x: &ExponentVector, m: u16) -> ExponentVector {
        let mut acc = ExponentVector::identity(self.n);
        for _ in 0..m {
            self.mul_assign(&mut acc, x);
        }
        acc
    }

    /// `x <- x * g_i^e`.
    #[inline]
    fn mul_gen_pow(&self, x: &mut ExponentVector, i: usize, e: u16) {
        let n = self.n;
        let mut tail = [0u16; MAX_GENERATORS];
        let mut nonzero_tail = false;
        {
            let xs = x.as_mut_slice();
            for k in i + 1..n {
                let t = xs[k];
                if t != 0 {
                    tail[k] = t;
                    xs[k] = 0;
                    nonzero_tail = true;
                }
            }
            xs[i] = self.p.add(xs[i], e);
        }
        if !nonzero_tail {
            return;
        }
        for k in i + 1..n {
            if tail[k] != 0 {
                let v = self.conj_power(i, k, e, tail[k]);
                self.mul_assign(x, &v);
            }
        }
    }

    /// `x <- x * y`.
    #[inline]
    pub fn mul_assign(&self, x: &mut ExponentVector, y: &ExponentVector) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(y.len(), self.n);
        for (i, &e) in y.as_slice().iter().enumerate() {
            if e != 0 {
                self.mul_gen_pow(x, i, e);
            }
        }
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `[g_{i+1}, g_{j+1}]` for `i < j` (0-based positions).
    pub fn relation(&self, i: usize, j: usize) -> &ExponentVector {
        &self.relations[tri(self.n, i, j)]
    }

    pub fn identity(&self) -> ExponentVector {
        ExponentVector::identity(self.n)
    }

    pub fn generator(&self, i: usize) -> ExponentVector {
        ExponentVector::generator(self.n, i)
    }

    /// Order of the group this presentation would define if consistent.
    pub fn order_bound(&self) -> u128 {
        (self.p.get() as u128).pow(self.n as u32)
    }

    fn check(&self, x: &ExponentVector) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// Normal form of `xy`.
    pub fn multiply(&self, x: &ExponentVector, y: &ExponentVector) -> Result<ExponentVector> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked form of [`multiply`](Self::multiply).
    #[inline]
    pub fn mul(&self, x: &ExponentVector, y: &ExponentVector) -> ExponentVector {
        let mut r = *x;
        self.mul_assign(&mut r, y);
        r
    }

    pub fn inverse(&self, x: &ExponentVector) -> Result<ExponentVector> {
        self.check(x)?;
        Ok(self.inv(x))
    }

    /// Collects `g_n^{-e_n} ... g_1^{-e_1}`.
    pub fn inv(&self, x: &ExponentVector) -> ExponentVector {
        let mut r = self.identity();
        for k in (0..self.n).rev() {
            let e = x.get(k);
            if e != 0 {
                self.mul_gen_pow(&mut r, k, self.p.neg(e));
            }
        }
        r
    }

    pub fn power(&self, x: &ExponentVector, m: i64) -> Result<ExponentVector> {
        self.check(x)?;
        Ok(self.pow(x, m))
    }

    pub fn pow(&self, x: &ExponentVector, m: i64) -> ExponentVector {
        let mut base = if m < 0 { self.inv(x) } else { *x };
        let mut k = m.unsigned_abs();
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                self.mul_assign(&mut acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `x^{-1} y^{-1} x y`.
    pub fn commutator(&self, x: &ExponentVector, y: &ExponentVector) -> Result<ExponentVector> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.comm(x, y))
    }

    pub fn comm(&self, x: &ExponentVector, y: &ExponentVector) -> ExponentVector {
        let mut r = self.inv(x);
        self.mul_assign(&mut r, &self.inv(y));
        self.mul_assign(&mut r, x);
        self.mul_assign(&mut r, y);
        r
    }

    /// `y^{-1} x y`.
    pub fn conj(&self, x: &ExponentVector, y: &ExponentVector) -> ExponentVector {
        let mut r = self.inv(y);
        self.mul_assign(&mut r, x);
        self.mul_assign(&mut r, y);
        r
    }

    /// The index shift `g_i -> g_{i+1}` on elements of `<g_1, ..., g_{n-1}>`.
    pub fn apply_f(&self, x: &ExponentVector) -> Result<ExponentVector> {
        self.check(x)?;
        x.shifted(1).ok_or(Error::ShiftDomain(x.get(self.n - 1)))
    }

    /// Collects an arbitrary word in the generators.
    pub fn evaluate(&self, word: &GroupWord) -> Result<ExponentVector> {
        let mut r = self.identity();
        for &(g, e) in word.letters() {
            if g >= self.n {
                return Err(Error::Dimension {
                    expected: self.n,
                    found: g + 1,
                });
            }
            let e = self.p.reduce(e);
            if e != 0 {
                self.mul_gen_pow(&mut r, g, e);
            }
        }
        Ok(r)
    }

    /// Whether `c[i][j]` is the shift of `c[i-1][j-1]` for every `i > 0`.
    pub fn is_shift_closed(&self) -> bool {
        (1..self.n).all(|i| {
            (i + 1..self.n).all(|j| {
                self.relation(i - 1, j - 1).shifted(1).as_ref() == Some(self.relation(i, j))
            })
        })
    }

    /// Recovers the essential chain of a shift-closed table.
    pub fn to_chain(&self) -> Option<EssentialChain> {
        if self.n < 2 || !self.is_shift_closed() {
            return None;
        }
        let vectors: Vec<Vec<u16>> = (2..self.n)
            .map(|j| self.relation(0, j).as_slice()[1..j].to_vec())
            .collect();
        EssentialChain::new(self.p, self.n, &vectors).ok()
    }

    /// Every normal form, in lexicographic order of exponent vectors.
    pub fn elements(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        ElementIter::new(self.p, self.n)
    }
}

/// Odometer over all of `Z_p^n`.
pub(crate) struct ElementIter {
    p: u16,
    cur: Option<ExponentVector>,
}

impl ElementIter {
    pub(crate) fn new(p: PrimeModulus, n: usize) -> Self {
        ElementIter {
            p: p.get() as u16,
            cur: Some(ExponentVector::identity(n)),
        }
    }
}

impl Iterator for ElementIter {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let out = self.cur?;
        let mut next = out;
        let n = next.len();
        let mut k = n;
        loop {
            if k == 0 {
                self.cur = None;
                break;
            }
            k -= 1;
            let e = next.get(k) + 1;
            if e < self.p {
                next.set(k, e);
                self.cur = Some(next);
                break;
            }
            next.set(k, 0);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> PrimeModulus {
        PrimeModulus::new(3).unwrap()
    }

    fn heisenberg() -> PcPresentation {
        PcPresentation::compile(&EssentialChain::new(p3(), 3, &[vec![1]]).unwrap())
    }

    fn v(p: PrimeModulus, e: &[u16]) -> ExponentVector {
        ExponentVector::from_slice(p, e).unwrap()
    }

    #[test]
    fn compile_heisenberg() {
        let h = heisenberg();
        assert_eq!(h.relation(0, 2).as_slice(), &[0, 1, 0]);
        assert!(h.relation(0, 1).is_identity());
        assert!(h.relation(1, 2).is_identity());
    }

    #[test]
    fn compile_shifts_lower_relations() {
        let p = p3();
        let chain = EssentialChain::new(p, 4, &[vec![0], vec![2, 1]]).unwrap();
        let pres = PcPresentation::compile(&chain);
        assert!(pres.relation(1, 3).is_identity());
        assert_eq!(pres.relation(0, 3).as_slice(), &[0, 2, 1, 0]);
        let chain = EssentialChain::new(p, 4, &[vec![1], vec![2, 1]]).unwrap();
        let pres = PcPresentation::compile(&chain);
        assert_eq!(pres.relation(1, 3).as_slice(), &[0, 0, 1, 0]);
        assert!(pres.is_shift_closed());
        assert_eq!(pres.to_chain().unwrap(), chain);
    }

    #[test]
    fn heisenberg_collection() {
        let h = heisenberg();
        let p = p3();
        // a_3 a_1 = a_1 a_3 [a_3, a_1] = a_1 a_3 a_2^{-1}
        assert_eq!(h.mul(&h.generator(2), &h.generator(0)).as_slice(), &[1, 2, 1]);
        assert_eq!(
            h.comm(&v(p, &[1, 0, 0]), &v(p, &[0, 0, 1])).as_slice(),
            &[0, 1, 0]
        );
        assert!(h.pow(&h.generator(0), 3).is_identity());
        assert_eq!(h.pow(&h.generator(0), -1).as_slice(), &[2, 0, 0]);
    }

    #[test]
    fn inverse_matches_search() {
        let h = heisenberg();
        let x = v(p3(), &[1, 0, 1]);
        let found: Vec<_> = h
            .elements()
            .filter(|y| h.mul(&x, y).is_identity())
            .collect();
        assert_eq!(found.len(), 1);
        assert_eq!(h.inv(&x), found[0]);
        // x = a_1 a_3, x^{-1} = a_3^{-1} a_1^{-1} = a_1^2 a_2^2 a_3^2
        assert_eq!(found[0].as_slice(), &[2, 2, 2]);
    }

    #[test]
    fn abelian_is_vector_addition() {
        let p = PrimeModulus::new(5).unwrap();
        let pres = PcPresentation::compile(&EssentialChain::abelian(p, 4));
        let x = v(p, &[1, 4, 2, 3]);
        let y = v(p, &[4, 4, 0, 1]);
        assert_eq!(pres.mul(&x, &y), x.add(&y, p));
        assert_eq!(pres.inv(&x).as_slice(), &[4, 1, 3, 2]);
        assert_eq!(pres.pow(&x, 3), x.scale(3, p));
    }

    #[test]
    fn dimension_and_domain_errors() {
        let h = heisenberg();
        let bad = ExponentVector::identity(4);
        assert!(matches!(h.multiply(&bad, &h.identity()), Err(Error::Dimension { .. })));
        assert!(matches!(h.apply_f(&h.generator(2)), Err(Error::ShiftDomain(1))));
        assert_eq!(h.apply_f(&v(p3(), &[1, 1, 0])).unwrap().as_slice(), &[0, 1, 1]);
    }

    #[test]
    fn table_support_is_enforced() {
        let p = p3();
        let bad = [((0, 2), v(p, &[0, 0, 1]))];
        assert!(PcPresentation::from_table(p, 3, &bad).is_err());
        let ok = [((0, 2), v(p, &[0, 2, 0]))];
        assert!(PcPresentation::from_table(p, 3, &ok).is_ok());
    }

    #[test]
    fn words() {
        let h = heisenberg();
        let w = GroupWord::new(vec![(2, 1), (0, 1)]);
        assert_eq!(h.evaluate(&w).unwrap().as_slice(), &[1, 2, 1]);
        let w = GroupWord::new(vec![(0, -1), (2, -1), (0, 1), (2, 1)]);
        assert_eq!(h.evaluate(&w).unwrap().as_slice(), &[0, 1, 0]);
    }

    #[test]
    fn element_iteration() {
        let h = heisenberg();
        let all: Vec<_> = h.elements().collect();
        assert_eq!(all.len(), 27);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
