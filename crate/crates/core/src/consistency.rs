//! Deciding whether an SSP presentation defines a group of order exactly `p^n`.
//!
//! The inductive test extends a consistent presentation on `n - 1` generators
//! by one generator `g_n`. The extension is consistent iff conjugation by
//! `g_n`, the map `g_i -> g_i w_i` with `w_i = [g_i, g_n]`, is an automorphism
//! of the base group whose `p`-th power is the identity. The associativity
//! oracle is an independent check by brute force.

use std::collections::HashMap;
use std::sync::{Mutex, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::pc::{EssentialChain, ExponentVector, PcPresentation};

/// Default element limit for exhaustive associativity checks (`3^5`).
pub const DEFAULT_ORACLE_LIMIT: u128 = 243;

/// A map `g_i -> g_i w_i` on a base group, with `w_i` supported above `i`.
#[derive(Clone, Debug)]
pub struct CandidateAutomorphism<'a> {
    base: &'a PcPresentation,
    images: Vec<ExponentVector>,
}

/// Outcome of evaluating a candidate map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaVerdict {
    /// Every defining relation of the base group holds at the images.
    pub relations_hold: bool,
    /// The `p`-th iterate fixes every generator.
    pub order_divides_p: bool,
}

impl AlphaVerdict {
    pub fn is_automorphism(&self) -> bool {
        self.relations_hold && self.order_divides_p
    }

    /// Relations hold but the map has order `p^2` or more.
    pub fn order_only_failure(&self) -> bool {
        self.relations_hold && !self.order_divides_p
    }
}

impl<'a> CandidateAutomorphism<'a> {
    /// `tails[i]` is `w_i`; it must be supported on positions `i+1..`.
    pub fn new(base: &'a PcPresentation, tails: &[ExponentVector]) -> Result<Self> {
        let n = base.n();
        if tails.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: tails.len(),
            });
        }
        let mut images = Vec::with_capacity(n);
        for (i, w) in tails.iter().enumerate() {
            if w.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: w.len(),
                });
            }
            if w.support().any(|k| k <= i) {
                return Err(Error::InvalidTable(format!(
                    "w_{} must be supported on g{}..g{}",
                    i + 1,
                    i + 2,
                    n
                )));
            }
            let mut img = *w;
            img.set(i, 1);
            images.push(img);
        }
        Ok(CandidateAutomorphism { base, images })
    }

    pub fn base(&self) -> &PcPresentation {
        self.base
    }

    /// `alpha(g_i) = g_i w_i`.
    pub fn images(&self) -> &[ExponentVector] {
        &self.images
    }

    /// The tails `w_i`.
    pub fn tails(&self) -> Vec<ExponentVector> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let mut w = *img;
                w.set(i, 0);
                w
            })
            .collect()
    }

    /// Image of a normal form: `alpha(g_1)^{e_1} ... alpha(g_n)^{e_n}`.
    pub fn apply(&self, x: &ExponentVector) -> ExponentVector {
        let mut r = self.base.identity();
        for k in x.support() {
            let pw = self.base.pow(&self.images[k], x.get(k) as i64);
            self.base.mul_assign(&mut r, &pw);
        }
        r
    }

    pub fn verdict(&self) -> AlphaVerdict {
        let pres = self.base;
        let n = pres.n();
        let p = pres.p().get() as i64;
        let mut relations_hold = self
            .images
            .iter()
            .all(|img| pres.pow(img, p).is_identity());
        'outer: for i in 0..n {
            if !relations_hold {
                break;
            }
            for j in i + 1..n {
                let lhs = pres.mul(&self.images[i], &self.images[j]);
                let mut rhs = pres.mul(&self.images[j], &self.images[i]);
                pres.mul_assign(&mut rhs, &self.apply(pres.relation(i, j)));
                if lhs != rhs {
                    relations_hold = false;
                    break 'outer;
                }
            }
        }
        let order_divides_p = (0..n).all(|k| {
            let g = pres.generator(k);
            let mut x = g;
            for _ in 0..p {
                x = self.apply(&x);
            }
            x == g
        });
        AlphaVerdict {
            relations_hold,
            order_divides_p,
        }
    }

    /// Whether the map extends to an automorphism of order dividing `p`.
    pub fn is_automorphism(&self) -> bool {
        self.verdict().is_automorphism()
    }
}

/// Conjugation by a new top generator `g_n` on the base presentation on
/// `n - 1` generators, given `[g_1, g_n] = g_2^{a_2} ... g_{n-1}^{a_{n-1}}`.
///
/// `w_1 = a`; for `i > 1`, `w_i = [g_i, g_n]` is the shift of the base
/// relation `[g_{i-1}, g_{n-1}]`.
pub fn build_alpha<'a>(base: &'a PcPresentation, a: &[u16]) -> Result<CandidateAutomorphism<'a>> {
    let m = base.n();
    if a.len() + 1 != m {
        return Err(Error::Dimension {
            expected: m - 1,
            found: a.len(),
        });
    }
    let mut tails = Vec::with_capacity(m);
    let mut w1 = ExponentVector::identity(m);
    for (k, &e) in a.iter().enumerate() {
        if e as u32 >= base.p().get() {
            return Err(Error::InvalidChain(format!("a[{k}] = {e} is not reduced")));
        }
        w1.set(k + 1, e);
    }
    tails.push(w1);
    for i in 1..m {
        let w = base
            .relation(i - 1, m - 1)
            .shifted(1)
            .expect("base relation is supported below the top generator");
        tails.push(w);
    }
    CandidateAutomorphism::new(base, &tails)
}

/// Tests every extension vector of one consistent base presentation, with
/// everything that does not depend on the vector computed once.
///
/// `check(a)` agrees with `build_alpha(base, a)?.verdict()`.
pub struct Extender {
    base: PcPresentation,
    // powers[k][m - 1] = alpha(g_k)^m for k >= 1
    powers: Vec<Vec<ExponentVector>>,
    // alpha([g_1, g_j]) for j >= 1; independent of a
    rhs: Vec<ExponentVector>,
    fixed: AlphaVerdict,
}

impl Extender {
    pub fn new(base: PcPresentation) -> Self {
        let m = base.n();
        let zero = vec![0u16; m - 1];
        let alpha = build_alpha(&base, &zero).expect("valid extension length");
        let pm1 = base.p().get() as usize - 1;
        let powers: Vec<Vec<ExponentVector>> = alpha
            .images()
            .iter()
            .map(|img| {
                let mut acc = *img;
                let mut out = vec![acc];
                for _ in 1..pm1 {
                    acc = base.mul(&acc, img);
                    out.push(acc);
                }
                out
            })
            .collect();
        let p = base.p().get() as i64;
        let images = alpha.images().to_vec();
        let mut relations_hold = images[1..]
            .iter()
            .all(|img| base.pow(img, p).is_identity());
        'outer: for i in 1..m {
            if !relations_hold {
                break;
            }
            for j in i + 1..m {
                let lhs = base.mul(&images[i], &images[j]);
                let mut rhs = base.mul(&images[j], &images[i]);
                base.mul_assign(&mut rhs, &alpha.apply(base.relation(i, j)));
                if lhs != rhs {
                    relations_hold = false;
                    break 'outer;
                }
            }
        }
        let order_divides_p = (1..m).all(|k| {
            let g = base.generator(k);
            let mut x = g;
            for _ in 0..p {
                x = alpha.apply(&x);
            }
            x == g
        });
        let rhs = (0..m)
            .map(|j| {
                if j == 0 {
                    base.identity()
                } else {
                    alpha.apply(base.relation(0, j))
                }
            })
            .collect();
        drop(alpha);
        Extender {
            base,
            powers,
            rhs,
            fixed: AlphaVerdict {
                relations_hold,
                order_divides_p,
            },
        }
    }

    pub fn base(&self) -> &PcPresentation {
        &self.base
    }

    /// Whether some extension vector could possibly pass.
    pub fn any_possible(&self) -> bool {
        self.fixed.relations_hold
    }

    fn apply(&self, first: &[ExponentVector], x: &ExponentVector) -> ExponentVector {
        let mut r = self.base.identity();
        for k in x.support() {
            let m = x.get(k) as usize - 1;
            let pw = if k == 0 { &first[m] } else { &self.powers[k][m] };
            self.base.mul_assign(&mut r, pw);
        }
        r
    }

    pub fn check(&self, a: &[u16]) -> AlphaVerdict {
        let base = &self.base;
        let m = base.n();
        debug_assert_eq!(a.len() + 1, m);
        let mut img = base.generator(0);
        for (k, &e) in a.iter().enumerate() {
            img.set(k + 1, e);
        }
        let pm1 = base.p().get() as usize - 1;
        let mut first = Vec::with_capacity(pm1);
        let mut acc = img;
        first.push(acc);
        for _ in 1..pm1 {
            acc = base.mul(&acc, &img);
            first.push(acc);
        }
        let mut relations_hold = self.fixed.relations_hold && base.mul(&acc, &img).is_identity();
        if relations_hold {
            for j in 1..m {
                let other = &self.powers[j][0];
                let lhs = base.mul(&img, other);
                let mut rhs = base.mul(other, &img);
                base.mul_assign(&mut rhs, &self.rhs[j]);
                if lhs != rhs {
                    relations_hold = false;
                    break;
                }
            }
        }
        let mut order_divides_p = self.fixed.order_divides_p;
        if order_divides_p {
            let g = base.generator(0);
            let mut x = g;
            for _ in 0..=pm1 {
                x = self.apply(&first, &x);
            }
            order_divides_p = x == g;
        }
        AlphaVerdict {
            relations_hold,
            order_divides_p,
        }
    }
}

/// Memoized inductive consistency test.
///
/// Safe for concurrent use; results do not depend on interleaving. Chains
/// where the relations hold at the images but the map has order larger than
/// `p` are logged.
#[derive(Default)]
pub struct ConsistencyChecker {
    cache: RwLock<HashMap<EssentialChain, bool>>,
    order_failures: Mutex<Vec<EssentialChain>>,
}

impl ConsistencyChecker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_consistent(&self, chain: &EssentialChain) -> bool {
        let n = chain.n();
        if n <= 2 {
            return true;
        }
        if let Some(&hit) = self.cache.read().unwrap().get(chain) {
            return hit;
        }
        let prefix = chain.prefix(n - 1);
        let result = self.is_consistent(&prefix) && {
            let base = PcPresentation::compile(&prefix);
            let verdict = build_alpha(&base, chain.essential(n))
                .expect("chain vectors have the right length")
                .verdict();
            if verdict.order_only_failure() {
                self.log_order_failure(chain);
            }
            verdict.is_automorphism()
        };
        self.cache.write().unwrap().insert(chain.clone(), result);
        result
    }

    pub(crate) fn log_order_failure(&self, chain: &EssentialChain) {
        self.order_failures.lock().unwrap().push(chain.clone());
    }

    /// Chains where the relation check passed and the order check failed,
    /// sorted.
    pub fn order_failures(&self) -> Vec<EssentialChain> {
        let mut v = self.order_failures.lock().unwrap().clone();
        v.sort();
        v.dedup();
        v
    }
}

/// Inductive consistency test without a shared cache.
pub fn is_consistent(chain: &EssentialChain) -> bool {
    ConsistencyChecker::new().is_consistent(chain)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// Every triple; refused when the group bound exceeds `limit` elements.
    Exhaustive { limit: u128 },
    /// `triples` uniformly random triples from a seeded generator.
    Sampled { triples: u64, seed: u64 },
}

impl OracleMode {
    pub fn exhaustive() -> Self {
        OracleMode::Exhaustive {
            limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

/// Checks `(xy)z = x(yz)` under collection for the presentation of `chain`.
pub fn associativity_oracle(chain: &EssentialChain, mode: OracleMode) -> Result<bool> {
    associativity_oracle_table(&PcPresentation::compile(chain), mode)
}

/// [`associativity_oracle`] for an arbitrary relation table.
///
/// In exhaustive mode a `true` answer means the presentation is consistent:
/// collection then defines an associative product with identity in which
/// every generator has order dividing `p`, and that group satisfies the
/// defining relations and has `p^n` elements.
pub fn associativity_oracle_table(pres: &PcPresentation, mode: OracleMode) -> Result<bool> {
    match mode {
        OracleMode::Exhaustive { limit } => {
            let size = pres.order_bound();
            if size > limit {
                return Err(Error::Capacity {
                    what: "exhaustive associativity oracle",
                    needed: size,
                    limit,
                });
            }
            let elems: Vec<ExponentVector> = pres.elements().collect();
            let index: HashMap<ExponentVector, usize> =
                elems.iter().enumerate().map(|(i, x)| (*x, i)).collect();
            let m = elems.len();
            let mut table = vec![0usize; m * m];
            for (i, x) in elems.iter().enumerate() {
                for (j, y) in elems.iter().enumerate() {
                    table[i * m + j] = index[&pres.mul(x, y)];
                }
            }
            for x in 0..m {
                for y in 0..m {
                    let xy = table[x * m + y];
                    for z in 0..m {
                        if table[xy * m + z] != table[x * m + table[y * m + z]] {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        OracleMode::Sampled { triples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = pres.p().get() as u16;
            let n = pres.n();
            let random = |rng: &mut ChaCha8Rng| {
                let mut v = pres.identity();
                for i in 0..n {
                    v.set(i, rng.gen_range(0..p));
                }
                v
            };
            for _ in 0..triples {
                let x = random(&mut rng);
                let y = random(&mut rng);
                let z = random(&mut rng);
                if pres.mul(&pres.mul(&x, &y), &z) != pres.mul(&x, &pres.mul(&y, &z)) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}
