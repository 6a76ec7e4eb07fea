//! Structural invariants of consistent SSP groups, each paired with a check
//! that the group actually has the predicted structure.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pc::{EssentialChain, ExponentVector, PcPresentation, PrimeModulus};
use crate::subgroups::{
    center, closure, derived_subgroup, lower_central_series, normal_closure, InducedSequence,
    DEFAULT_BRUTE_FORCE_LIMIT,
};

/// `n = 3q + r` with `0 <= r <= 2` and cut-off `c = 2q + r + j`, `0 <= j <= q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CutoffParams {
    pub n: usize,
    pub q: usize,
    pub r: usize,
    pub j: usize,
    pub c: usize,
}

impl CutoffParams {
    /// The parameters for a given `j`, if in range.
    pub fn for_j(n: usize, j: usize) -> Option<Self> {
        let (q, r) = (n / 3, n % 3);
        (j <= q).then_some(CutoffParams {
            n,
            q,
            r,
            j,
            c: 2 * q + r + j,
        })
    }

    /// 1-based first index of the center window, `q + 1 - j`.
    pub fn center_start(&self) -> usize {
        self.q + 1 - self.j
    }

    /// 1-based last index of the window for `[g_1, g_{c+1}]`, `q + 1 + r + 2j`.
    pub fn commutator_window_end(&self) -> usize {
        self.q + 1 + self.r + 2 * self.j
    }
}

/// Largest `s >= 2` with `[g_1, g_j]` trivial for all `j <= s`; `n` when abelian.
pub fn cutoff(chain: &EssentialChain) -> usize {
    (3..=chain.n())
        .find(|&j| chain.essential(j).iter().any(|&e| e != 0))
        .map_or(chain.n(), |j| j - 1)
}

/// Solves `c = 2q(n) + r(n) + j` for `j`; a `j` outside `0..=q(n)` is reported
/// as a violation of the cut-off formula.
pub fn cutoff_params(n: usize, c: usize) -> Result<CutoffParams> {
    let (q, r) = (n / 3, n % 3);
    let base = 2 * q + r;
    if c < base || c - base > q {
        return Err(Error::NotApplicable(format!(
            "cut-off {c} does not satisfy c = c({n}, j) = {base} + j for any 0 <= j <= {q}"
        )));
    }
    Ok(CutoffParams::for_j(n, c - base).unwrap())
}

/// Whether an extension candidate can be rejected from its cut-off alone.
pub fn prune_predicate(chain: &EssentialChain) -> bool {
    let c = cutoff(chain);
    c < chain.n() && cutoff_params(chain.n(), c).is_err()
}


/// Outcome of one structural check. Violations are values, not errors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Check {
    Pass,
    Fail(String),
    NotApplicable(String),
    Capacity(String),
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self, Check::Fail(_))
    }

    /// `Pass` when `ok`, otherwise `Fail` with the message.
    pub fn from_bool(ok: bool, why: impl FnOnce() -> String) -> Self {
        if ok {
            Check::Pass
        } else {
            Check::Fail(why())
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Check::Pass => "pass",
            Check::Fail(_) => "FAIL",
            Check::NotApplicable(_) => "n/a",
            Check::Capacity(_) => "capacity",
        }
    }

    fn from_capacity(e: Error) -> Self {
        match e {
            Error::Capacity { .. } => Check::Capacity(e.to_string()),
            other => Check::Fail(other.to_string()),
        }
    }
}

/// Rank of a list of vectors over `Z_p`.
pub fn rank_mod_p(vectors: &[ExponentVector], p: PrimeModulus) -> usize {
    let mut rows: Vec<Vec<u16>> = vectors.iter().map(|v| v.as_slice().to_vec()).collect();
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = p.inv(rows[rank][col]);
        for e in rows[rank].iter_mut() {
            *e = p.mul(*e, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let m = row[col];
                for (e, &pe) in row.iter_mut().zip(&pivot_row) {
                    *e = p.add(*e, p.neg(p.mul(m, pe)));
                }
            }
        }
        rank += 1;
    }
    rank
}

fn params_of(chain: &EssentialChain) -> std::result::Result<CutoffParams, Check> {
    if chain.is_abelian() {
        return Err(Check::NotApplicable("abelian".into()));
    }
    cutoff_params(chain.n(), cutoff(chain)).map_err(|e| Check::Fail(e.to_string()))
}

// 1-based window test
fn support_within(v: &ExponentVector, lo: usize, hi: usize) -> bool {
    v.support().all(|t| lo <= t + 1 && t + 1 <= hi)
}

fn window(lo: usize, hi: usize) -> String {
    format!("<g{lo}..g{hi}>")
}

/// The center is `<g_{q+1-j}, ..., g_c>` and has rank at least `n/3`.
pub fn check_center_structure(chain: &EssentialChain, limit: u128) -> Check {
    let pres = PcPresentation::compile(chain);
    let z = match center(&pres, limit) {
        Ok(z) => z,
        Err(e) => return Check::from_capacity(e),
    };
    let n = chain.n();
    let (lo, hi) = if chain.is_abelian() {
        (1, n)
    } else {
        match params_of(chain) {
            Ok(cp) => (cp.center_start(), cp.c),
            Err(c) => return c,
        }
    };
    let predicted = InducedSequence::span(&pres, lo - 1..hi);
    if !z.same_subgroup(&pres, &predicted) {
        return Check::Fail(format!(
            "center has depths {:?}, predicted {}",
            z.depths(),
            window(lo, hi)
        ));
    }
    Check::from_bool(3 * z.len() >= n, || {
        format!("center rank {} is below n/3 = {n}/3", z.len())
    })
}

/// The three factors `<g_1..g_{q-j}>`, `<g_{q+1-j}..g_c>`, `<g_{c+1}..g_n>`
/// as 0-based half-open generator ranges.
pub fn triple_factors(chain: &EssentialChain) -> Option<[std::ops::Range<usize>; 3]> {
    let n = chain.n();
    if chain.is_abelian() {
        return Some([0..0, 0..n, n..n]);
    }
    let cp = cutoff_params(n, cutoff(chain)).ok()?;
    let a = cp.q - cp.j;
    Some([0..a, a..cp.c, cp.c..n])
}

/// Each factor of the triple decomposition is abelian and has the rank of its
/// generator range, and the ranks sum to `n`.
pub fn check_triple_decomposition(chain: &EssentialChain) -> Check {
    let Some(factors) = triple_factors(chain) else {
        return params_of(chain).err().unwrap_or(Check::Fail("no cut-off parameters".into()));
    };
    let pres = PcPresentation::compile(chain);
    let mut total = 0;
    for range in &factors {
        for i in range.clone() {
            for k in i + 1..range.end {
                if !pres.relation(i, k).is_identity() {
                    return Check::Fail(format!("[g{}, g{}] is not trivial", i + 1, k + 1));
                }
            }
        }
        let span = InducedSequence::span(&pres, range.clone());
        if span.len() != range.len() {
            return Check::Fail(format!(
                "{} has rank {}",
                window(range.start + 1, range.end),
                span.len()
            ));
        }
        total += span.len();
    }
    Check::from_bool(total == chain.n(), || format!("factor ranks sum to {total}"))
}

/// `[g_1, g_{c+1}]` is nontrivial and lies in `<g_{q+1-j}..g_{q+1+r+2j}>`.
pub fn check_commutator_membership(chain: &EssentialChain) -> Check {
    let cp = match params_of(chain) {
        Ok(cp) => cp,
        Err(c) => return c,
    };
    let v = chain.essential_vector(cp.c + 1);
    let (lo, hi) = (cp.center_start(), cp.commutator_window_end());
    if v.is_identity() {
        return Check::Fail(format!("[g1, g{}] is trivial", cp.c + 1));
    }
    Check::from_bool(support_within(&v, lo, hi), || {
        format!("[g1, g{}] = {v} is outside {}", cp.c + 1, window(lo, hi))
    })
}

/// The shifts `f^k([g_1, g_{c+1}])`, `0 <= k < q - j`, are linearly
/// independent and lie in the center window.
pub fn check_independence(chain: &EssentialChain) -> Check {
    let cp = match params_of(chain) {
        Ok(cp) => cp,
        Err(c) => return c,
    };
    let v = chain.essential_vector(cp.c + 1);
    let count = cp.q - cp.j;
    let mut shifts = Vec::with_capacity(count);
    for k in 0..count {
        let Some(w) = v.shifted(k) else {
            return Check::Fail(format!("f^{k} of [g1, g{}] is undefined", cp.c + 1));
        };
        if !support_within(&w, cp.center_start(), cp.c) {
            return Check::Fail(format!(
                "f^{k}([g1, g{}]) = {w} is outside {}",
                cp.c + 1,
                window(cp.center_start(), cp.c)
            ));
        }
        shifts.push(w);
    }
    let rank = rank_mod_p(&shifts, chain.p());
    Check::from_bool(rank == count, || format!("{count} shifts have rank {rank}"))
}

fn index_of(x: &ExponentVector, p: u32) -> usize {
    x.as_slice()
        .iter()
        .rev()
        .fold(0usize, |acc, &e| acc * p as usize + e as usize)
}

/// The largest subset of `H = <g_1..g_{n-1}>` closed under conjugation by the
/// generators and under `f`, where `f` returning `None` or leaving `H` drops
/// the element.
pub fn invariant_core<F>(pres: &PcPresentation, limit: u128, f: F) -> Result<Vec<ExponentVector>>
where
    F: Fn(&ExponentVector) -> Option<ExponentVector>,
{
    let n = pres.n();
    let p = pres.p().get();
    let needed = pres.order_bound();
    if needed > limit {
        return Err(Error::Capacity {
            what: "simple-triple fixpoint",
            needed,
            limit,
        });
    }
    let in_h = |x: &ExponentVector| x.get(n - 1) == 0;
    let mut alive = vec![false; needed as usize];
    let mut members: Vec<ExponentVector> = pres.elements().filter(|x| in_h(x)).collect();
    for x in &members {
        alive[index_of(x, p)] = true;
    }
    let gens: Vec<_> = (0..n).map(|i| pres.generator(i)).collect();
    loop {
        let before = members.len();
        members.retain(|x| {
            let keep = f(x).is_some_and(|y| in_h(&y) && alive[index_of(&y, p)])
                && gens.iter().all(|g| alive[index_of(&pres.conj(x, g), p)]);
            if !keep {
                alive[index_of(x, p)] = false;
            }
            keep
        });
        if members.len() == before {
            return Ok(members);
        }
    }
}

/// No nontrivial subset of `H` is invariant under `f` and conjugation.
pub fn verify_simple_triple(chain: &EssentialChain, limit: u128) -> Check {
    let pres = PcPresentation::compile(chain);
    match invariant_core(&pres, limit, |x| pres.apply_f(x).ok()) {
        Ok(core) => Check::from_bool(core.len() == 1, || {
            format!("{} elements survive the fixpoint", core.len())
        }),
        Err(e) => Check::from_capacity(e),
    }
}

/// For a chain on `n + 1` generators whose `n`-generator prefix has class at
/// most 2: the top relation lies in `<g_{q(n)+1-j}..g_{c(n,j)+1}>`, and
/// `gamma_3` is generated by `[g_1, g_{n+1}, g_1]` and `[g_1, g_{n+1}, g_{n+1}]`.
pub fn check_lift_shape(chain: &EssentialChain) -> Check {
    let top = chain.n();
    if top < 3 {
        return Check::NotApplicable("fewer than 3 generators".into());
    }
    let n = top - 1;
    let prefix = chain.prefix(n);
    let ppres = PcPresentation::compile(&prefix);
    let pclass = match lower_central_series(&ppres) {
        Ok(s) => s.len() - 1,
        Err(e) => return Check::Fail(e.to_string()),
    };
    if pclass > 2 {
        return Check::NotApplicable(format!("prefix has class {pclass}"));
    }
    let cp = match cutoff_params(n, cutoff(&prefix)) {
        Ok(cp) => cp,
        Err(e) => return Check::Fail(format!("prefix: {e}")),
    };
    let a = chain.essential_vector(top);
    let (lo, hi) = (cp.center_start(), cp.c + 1);
    if !support_within(&a, lo, hi) {
        return Check::Fail(format!("[g1, g{top}] = {a} is outside {}", window(lo, hi)));
    }
    let pres = PcPresentation::compile(chain);
    let series = match lower_central_series(&pres) {
        Ok(s) => s,
        Err(e) => return Check::Fail(e.to_string()),
    };
    let gamma3 = series
        .get(2)
        .cloned()
        .unwrap_or_else(|| InducedSequence::trivial(top));
    let g1 = pres.generator(0);
    let gt = pres.generator(top - 1);
    let base = pres.comm(&g1, &gt);
    let predicted = closure(&pres, &[pres.comm(&base, &g1), pres.comm(&base, &gt)]);
    if !gamma3.same_subgroup(&pres, &predicted) {
        return Check::Fail(format!(
            "gamma_3 has depths {:?}, the triple commutators generate depths {:?}",
            gamma3.depths(),
            predicted.depths()
        ));
    }
    let class = series.len() - 1;
    Check::from_bool(class <= 3, || format!("class {class}"))
}

/// For class 2: `a[c+1] != 0` and each `a[c+1+k]` lies in
/// `<g_{q+1-j}..g_{q+1+r+2j+k}>`.
pub fn check_class2_presentation_shape(chain: &EssentialChain) -> Check {
    let cp = match params_of(chain) {
        Ok(cp) => cp,
        Err(c) => return c,
    };
    let pres = PcPresentation::compile(chain);
    match lower_central_series(&pres).map(|s| s.len() - 1) {
        Ok(2) => {}
        Ok(c) => return Check::NotApplicable(format!("class {c}")),
        Err(e) => return Check::Fail(e.to_string()),
    }
    if chain.essential_vector(cp.c + 1).is_identity() {
        return Check::Fail(format!("[g1, g{}] is trivial", cp.c + 1));
    }
    for k in 0..chain.n() - cp.c {
        let v = chain.essential_vector(cp.c + 1 + k);
        let hi = cp.commutator_window_end() + k;
        if !support_within(&v, cp.center_start(), hi) {
            return Check::Fail(format!(
                "[g1, g{}] = {v} is outside {}",
                cp.c + 1 + k,
                window(cp.center_start(), hi)
            ));
        }
    }
    Check::Pass
}

/// The chain of `P_k`: `n = 3k` and the only essential relation is
/// `[g_1, g_{2k+1}] = g_{k+1}`.
pub fn build_heisenberg_power(p: PrimeModulus, k: usize) -> Result<EssentialChain> {
    let n = 3 * k;
    if k == 0 || n > crate::MAX_GENERATORS {
        return Err(Error::GeneratorCount(n));
    }
    let mut vectors: Vec<Vec<u16>> = (3..=n).map(|j| vec![0; j - 2]).collect();
    vectors[2 * k + 1 - 3][k - 1] = 1;
    EssentialChain::new(p, n, &vectors)
}

/// Samples of `u w + v f^t(w)` over `Z_p^n` for nontrivial `w` supported on
/// `1..s`, `1 <= t <= n - s` and `(u, v) != (0, 0)`; returns the number of
/// zero results.
pub fn f_equation_counterexamples(p: PrimeModulus, n: usize, trials: u64, seed: u64) -> u64 {
    assert!(n >= 2 && n <= crate::MAX_GENERATORS);
    let pv = p.get() as u16;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..trials {
        let s = rng.gen_range(1..n);
        let mut w = ExponentVector::identity(n);
        while w.is_identity() {
            for i in 0..s {
                w.set(i, rng.gen_range(0..pv));
            }
        }
        let t = rng.gen_range(1..=n - s);
        let (u, v) = loop {
            let uv = (rng.gen_range(0..pv), rng.gen_range(0..pv));
            if uv != (0, 0) {
                break uv;
            }
        };
        let shifted = w.shifted(t).expect("support fits");
        if w.scale(u, p).add(&shifted.scale(v, p), p).is_identity() {
            bad += 1;
        }
    }
    bad
}

/// Whether [`f_equation_counterexamples`] finds none.
pub fn f_equation_property(p: PrimeModulus, n: usize, trials: u64, seed: u64) -> bool {
    f_equation_counterexamples(p, n, trials, seed) == 0
}

/// Random pairs `x, y` in `H` with `f(xy) != f(x) f(y)`; returns the failures.
pub fn apply_f_homomorphism_failures(pres: &PcPresentation, pairs: u64, seed: u64) -> u64 {
    let n = pres.n();
    let pv = pres.p().get() as u16;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_h = |rng: &mut ChaCha8Rng| {
        let mut x = ExponentVector::identity(n);
        for i in 0..n - 1 {
            x.set(i, rng.gen_range(0..pv));
        }
        x
    };
    let mut bad = 0;
    for _ in 0..pairs {
        let x = random_h(&mut rng);
        let y = random_h(&mut rng);
        let lhs = pres.apply_f(&pres.mul(&x, &y));
        let rhs = pres
            .apply_f(&x)
            .and_then(|fx| pres.apply_f(&y).map(|fy| pres.mul(&fx, &fy)));
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => bad += 1,
        }
    }
    bad
}

/// Every `(n, j)` with `c(n, j) = c`.
pub fn cutoff_realizations(c: usize) -> Vec<(usize, usize)> {
    // c >= c(n, 0) >= 2n/3 bounds n by 3c/2 + 1
    (2..=3 * c / 2 + 2)
        .filter_map(|n| {
            let (q, r) = (n / 3, n % 3);
            let j = c.checked_sub(2 * q + r)?;
            (j <= q).then_some((n, j))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    Abelian,
    Cutoff(CutoffParams),
    /// The cut-off fits no `c(n, j)`.
    Violation { c: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct AnalysisLimits {
    pub brute_force_limit: u128,
}

impl Default for AnalysisLimits {
    fn default() -> Self {
        AnalysisLimits {
            brute_force_limit: DEFAULT_BRUTE_FORCE_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureReport {
    pub p: u32,
    pub n: usize,
    pub cutoff: usize,
    pub shape: Shape,
    pub class: usize,
    pub metabelian: bool,
    /// Induced sequence of the center, when within the brute-force limit.
    pub center: Option<Vec<ExponentVector>>,
    /// 1-based generator indices of the three factors.
    pub decomposition: Option<[Vec<usize>; 3]>,
    pub checks: Vec<(String, Check)>,
}

impl StructureReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|(k, _)| k == name).map(|(_, c)| c)
    }

    pub fn violations(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|(_, c)| c.failed())
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn hit_capacity(&self) -> bool {
        self.checks.iter().any(|(_, c)| matches!(c, Check::Capacity(_)))
    }

    pub fn center_rank(&self) -> Option<usize> {
        self.center.as_ref().map(Vec::len)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "p = {}, n = {}", self.p, self.n);
        match self.shape {
            Shape::Abelian => {
                let _ = writeln!(s, "abelian (cut-off {})", self.cutoff);
            }
            Shape::Cutoff(cp) => {
                let _ = writeln!(
                    s,
                    "cut-off {} = c({}, {}) with q = {}, r = {}",
                    cp.c, cp.n, cp.j, cp.q, cp.r
                );
            }
            Shape::Violation { c } => {
                let _ = writeln!(s, "cut-off {c} fits no c(n, j)");
            }
        }
        let _ = writeln!(s, "class {}", self.class);
        let _ = writeln!(s, "metabelian: {}", self.metabelian);
        match &self.center {
            Some(z) => {
                let els: Vec<String> = z.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(s, "center rank {}: <{}>", z.len(), els.join(", "));
            }
            None => s.push_str("center: not computed\n"),
        }
        if let Some(d) = &self.decomposition {
            let parts: Vec<String> = d
                .iter()
                .map(|f| {
                    let g: Vec<String> = f.iter().map(|i| format!("g{i}")).collect();
                    format!("<{}>", g.join(", "))
                })
                .collect();
            let _ = writeln!(s, "decomposition: {}", parts.join(" "));
        }
        for (name, c) in &self.checks {
            match c {
                Check::Pass => {
                    let _ = writeln!(s, "{name}: pass");
                }
                Check::Fail(d) | Check::NotApplicable(d) | Check::Capacity(d) => {
                    let _ = writeln!(s, "{name}: {} ({d})", c.label());
                }
            }
        }
        s
    }
}

/// Runs every applicable check on a consistent chain.
pub fn analyze(chain: &EssentialChain, limits: &AnalysisLimits) -> Result<StructureReport> {
    let pres = PcPresentation::compile(chain);
    let series = lower_central_series(&pres)?;
    let class = series.len() - 1;
    let n = chain.n();
    let c = cutoff(chain);
    let shape = if chain.is_abelian() {
        Shape::Abelian
    } else {
        match cutoff_params(n, c) {
            Ok(cp) => Shape::Cutoff(cp),
            Err(_) => Shape::Violation { c },
        }
    };
    let derived = derived_subgroup(&pres);
    let metabelian = derived.is_abelian(&pres);
    let center_seq = center(&pres, limits.brute_force_limit).ok();
    let limit = limits.brute_force_limit;

    let mut checks: Vec<(String, Check)> = Vec::new();
    let mut add = |name: &str, c: Check| checks.push((name.to_string(), c));
    add(
        "cutoff_formula",
        Check::from_bool(!matches!(shape, Shape::Violation { .. }), || {
            format!("cut-off {c} fits no c({n}, j)")
        }),
    );
    add(
        "metabelian",
        Check::from_bool(metabelian, || "derived subgroup is not abelian".into()),
    );
    let bound = if chain.p().get() == 2 { 2 } else { 3 };
    add(
        "class_bound",
        Check::from_bool(class <= bound, || format!("class {class} exceeds {bound}")),
    );
    add("center_structure", check_center_structure(chain, limit));
    add("triple_decomposition", check_triple_decomposition(chain));
    add("commutator_membership", check_commutator_membership(chain));
    add("independence", check_independence(chain));
    add("simple_triple", verify_simple_triple(chain, limit));
    add("class2_shape", check_class2_presentation_shape(chain));
    add("lift_shape", check_lift_shape(chain));

    Ok(StructureReport {
        p: chain.p().get(),
        n,
        cutoff: c,
        shape,
        class,
        metabelian,
        center: center_seq.map(|z| z.elements()),
        decomposition: triple_factors(chain)
            .map(|fs| fs.map(|r| r.map(|i| i + 1).collect())),
        checks,
    })
}

/// Normal closure of `<g_{lo+1}..g_hi>`, used to confirm a window is normal.
pub fn window_is_normal(pres: &PcPresentation, range: std::ops::Range<usize>) -> bool {
    let gens: Vec<_> = range.clone().map(|i| pres.generator(i)).collect();
    normal_closure(pres, &gens).len() == range.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pc::PrimeModulus;

    #[test]
    fn cutoff_values() {
        let p = PrimeModulus::new(3).unwrap();
        assert_eq!(cutoff(&EssentialChain::new(p, 3, &[vec![1]]).unwrap()), 2);
        assert_eq!(cutoff(&EssentialChain::abelian(p, 5)), 5);
        assert_eq!(cutoff(&EssentialChain::new(p, 4, &[vec![0], vec![1, 0]]).unwrap()), 3);
    }

    #[test]
    fn params() {
        let c = cutoff_params(6, 4).unwrap();
        assert_eq!((c.q, c.r, c.j), (2, 0, 0));
        assert_eq!(cutoff_params(6, 5).unwrap().j, 1);
        assert_eq!(cutoff_params(6, 6).unwrap().j, 2);
        assert!(cutoff_params(5, 3).is_err());
        assert!(cutoff_params(4, 2).is_err());
        assert_eq!(cutoff_params(7, 5).unwrap().j, 0);
        for n in 3..40 {
            let q = n / 3;
            assert_eq!(CutoffParams::for_j(n, q).unwrap().c, n);
        }
    }

    fn chain(p: u64, n: usize, v: &[Vec<u16>]) -> EssentialChain {
        EssentialChain::new(PrimeModulus::new(p).unwrap(), n, v).unwrap()
    }

    #[test]
    fn heisenberg_report() {
        let h = chain(3, 3, &[vec![1]]);
        let r = analyze(&h, &AnalysisLimits::default()).unwrap();
        assert_eq!(r.cutoff, 2);
        assert_eq!(r.class, 2);
        assert_eq!(r.center_rank(), Some(1));
        assert!(r.check("simple_triple").unwrap().passed());
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.decomposition, Some([vec![1], vec![2], vec![3]]));
    }

    #[test]
    fn heisenberg_powers() {
        for p in [2, 3, 5] {
            let p = PrimeModulus::new(p).unwrap();
            let p1 = build_heisenberg_power(p, 1).unwrap();
            assert_eq!(p1.to_vectors(), vec![vec![1]]);
            let p2 = build_heisenberg_power(p, 2).unwrap();
            assert_eq!(p2.essential(5), &[0, 1, 0]);
            assert_eq!(cutoff(&p2), 4);
            let r = analyze(&p2, &AnalysisLimits::default()).unwrap();
            assert_eq!(r.class, 2);
            assert_eq!(r.center_rank(), Some(2));
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn simple_triple_non_example() {
        let a = chain(3, 3, &[vec![0]]);
        assert!(verify_simple_triple(&a, 1000).passed());
        let pres = PcPresentation::compile(&a);
        let g2 = InducedSequence::span(&pres, 1..2);
        let core = invariant_core(&pres, 1000, |x| {
            if g2.contains(&pres, x) {
                Some(*x)
            } else {
                pres.apply_f(x).ok()
            }
        })
        .unwrap();
        // <g2> survives, and so do the powers of g1, which land in it
        assert_eq!(core.len(), 5);
        assert!(core.contains(&pres.generator(1)));
        assert!(matches!(verify_simple_triple(&a, 10), Check::Capacity(_)));
    }

    #[test]
    fn rank_and_f_equation() {
        let p = PrimeModulus::new(3).unwrap();
        let v = |s: &[u16]| ExponentVector::from_slice(p, s).unwrap();
        assert_eq!(rank_mod_p(&[v(&[1, 2, 0]), v(&[2, 1, 0])], p), 1);
        assert_eq!(rank_mod_p(&[v(&[1, 2, 0]), v(&[0, 1, 2])], p), 2);
        assert_eq!(rank_mod_p(&[], p), 0);
        // w = (1,2,0,0), t = 2, (u,v) = (2,1)
        let w = v(&[1, 2, 0, 0]);
        let sum = w.scale(2, p).add(&w.shifted(2).unwrap().scale(1, p), p);
        assert_eq!(sum, v(&[2, 1, 1, 2]));
        assert!(f_equation_property(p, 6, 2000, 7));
    }

    #[test]
    fn realizations_are_finite() {
        assert_eq!(cutoff_realizations(4), vec![(4, 1), (5, 0), (6, 0)]);
        for c in 2..=12 {
            let rs = cutoff_realizations(c);
            assert!(!rs.is_empty());
            assert!(rs.iter().all(|&(n, j)| CutoffParams::for_j(n, j).unwrap().c == c));
        }
    }

    #[test]
    fn pruning() {
        let p = PrimeModulus::new(3).unwrap();
        assert!(prune_predicate(&EssentialChain::new(p, 4, &[vec![1], vec![0, 0]]).unwrap()));
        assert!(!prune_predicate(&EssentialChain::abelian(p, 6)));
        let mut v = vec![vec![0], vec![0, 0], vec![0, 1, 0], vec![0; 4], vec![0; 5]];
        // n = 7, cut-off 4 < c(7, 0) = 5
        assert!(prune_predicate(&EssentialChain::new(p, 7, &v).unwrap()));
        v[2] = vec![0; 3];
        v[3] = vec![0, 0, 1, 0];
        // n = 7, cut-off 5 = c(7, 0)
        assert!(!prune_predicate(&EssentialChain::new(p, 7, &v).unwrap()));
    }
}
