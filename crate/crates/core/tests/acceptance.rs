//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Extended (non-gating) rows run when `SSP_ACCEPTANCE_EXTENDED=1`.

use std::time::Instant;

use ssp_groups::cli::all_chains;
use ssp_groups::consistency::{associativity_oracle, ConsistencyChecker, OracleMode};
use ssp_groups::enumerate::{enumerate, enumerate_with, extend_all, EnumeratedGroup, EnumerationOptions, EnumerationReport};
use ssp_groups::invariants::{
    analyze, apply_f_homomorphism_failures, build_heisenberg_power, check_center_structure,
    check_commutator_membership, check_independence, check_triple_decomposition, cutoff,
    cutoff_params, f_equation_counterexamples, verify_simple_triple, AnalysisLimits, Check,
};
use ssp_groups::matrep::{build_affine_rep, verify_representation, Faithfulness};
use ssp_groups::subgroups::{is_metabelian, DEFAULT_BRUTE_FORCE_LIMIT};
use ssp_groups::{PcPresentation, PrimeModulus};

// Tolerances. Counts are compared exactly; sample sizes are minimums.
const COUNT_TOLERANCE: u64 = 0;
const COUNTS_P3_RUNTIME_BUDGET_SECS: f64 = 600.0;
const F_EQUATION_SAMPLES: u64 = 100_000;
const F_HOMOMORPHISM_PAIRS: u64 = 10_000;
/// Every `F_HOMOMORPHISM_STRIDE`-th enumerated group is sampled.
const F_HOMOMORPHISM_STRIDE: usize = 500;
const SEED: u64 = 20_260_101;

type Row = (usize, u64, u64, u64);

const COUNTS_P3: &[Row] = &[
    (2, 1, 0, 0),
    (3, 1, 2, 0),
    (4, 1, 8, 0),
    (5, 1, 26, 0),
    (6, 1, 98, 144),
    (7, 1, 458, 1728),
    (8, 1, 2834, 16848),
];
const COUNTS_P3_EXTENDED: &[Row] = &[(9, 1, 22112, 159408), (10, 1, 200474, 1551312)];
const COUNTS_P5: &[Row] = &[(2, 1, 0, 0), (3, 1, 4, 0), (4, 1, 24, 0), (5, 1, 124, 0), (6, 1, 724, 2400)];
const COUNTS_P5_EXTENDED: &[Row] = &[(7, 1, 6124, 72000), (8, 1, 93124, 1860000)];
const COUNTS_P7: &[Row] = &[(2, 1, 0, 0), (3, 1, 6, 0), (4, 1, 48, 0), (5, 1, 342, 0)];
const COUNTS_P7_EXTENDED: &[Row] = &[(6, 1, 2694, 14112)];

type Outcome = Result<String, String>;

struct Suite {
    failures: usize,
}

impl Suite {
    fn run(&mut self, id: &str, title: &str, f: impl FnOnce() -> Outcome) {
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS  {id:<4} {title} [{detail}] ({secs:.1} s)"),
            Err(why) => {
                self.failures += 1;
                println!("FAIL  {id:<4} {title} [{why}] ({secs:.1} s)");
            }
        }
    }

    fn skip(&self, id: &str, title: &str, why: &str) {
        println!("SKIP  {id:<4} {title} [{why}]");
    }
}

fn prime(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

struct Run {
    report: EnumerationReport,
    groups: Vec<EnumeratedGroup>,
}

fn run(p: u64, n_max: usize) -> Run {
    let mut groups = Vec::new();
    let report = enumerate_with(prime(p), n_max, &EnumerationOptions::default(), |_, gs| {
        groups.extend_from_slice(gs)
    })
    .unwrap();
    Run { report, groups }
}

fn diff(got: u64, expected: u64) -> u64 {
    got.abs_diff(expected)
}

fn compare_rows(report: &EnumerationReport, expected: &[Row]) -> Outcome {
    let mut bad = Vec::new();
    for &(n, a, b, c) in expected {
        match report.row(n) {
            Some(r)
                if diff(r.class1, a) <= COUNT_TOLERANCE
                    && diff(r.class2, b) <= COUNT_TOLERANCE
                    && diff(r.class3, c) <= COUNT_TOLERANCE
                    && r.class4plus == 0 => {}
            Some(r) => bad.push(format!(
                "n={n}: got ({},{},{},+{}) want ({a},{b},{c})",
                r.class1, r.class2, r.class3, r.class4plus
            )),
            None => bad.push(format!("n={n}: missing")),
        }
    }
    if bad.is_empty() {
        let last = expected.last().unwrap();
        Ok(format!("{} rows exact, n={} -> ({},{},{})", expected.len(), last.0, last.1, last.2, last.3))
    } else {
        Err(bad.join("; "))
    }
}

fn main() {
    let extended = std::env::var("SSP_ACCEPTANCE_EXTENDED").is_ok_and(|v| v == "1");
    let mut suite = Suite { failures: 0 };
    println!("acceptance suite (count tolerance {COUNT_TOLERANCE}, seed {SEED})");

    let t = Instant::now();
    let p3 = run(3, 8);
    let p3_secs = t.elapsed().as_secs_f64();
    let p5 = run(5, 6);
    let p7 = run(7, 5);
    let p2 = run(2, 8);

    suite.run("1", "class counts, p=3, n=2..8", || {
        let detail = compare_rows(&p3.report, COUNTS_P3)?;
        if p3_secs > COUNTS_P3_RUNTIME_BUDGET_SECS {
            return Err(format!("took {p3_secs:.0} s, budget {COUNTS_P3_RUNTIME_BUDGET_SECS} s"));
        }
        Ok(format!("{detail}, enumeration {p3_secs:.1} s"))
    });
    suite.run("2", "class counts, p=5, n=2..6", || compare_rows(&p5.report, COUNTS_P5));
    suite.run("3", "class counts, p=7, n=2..5", || compare_rows(&p7.report, COUNTS_P7));
    let ext: [(&str, u64, usize, &[Row]); 3] = [
        ("1x", 3, 10, COUNTS_P3_EXTENDED),
        ("2x", 5, 8, COUNTS_P5_EXTENDED),
        ("3x", 7, 6, COUNTS_P7_EXTENDED),
    ];
    for (id, p, n, rows) in ext {
        let title = format!("extended rows (non-gating), p={p}, n<={n}");
        if extended {
            let opts = EnumerationOptions {
                prune: true,
                ..Default::default()
            };
            let r = enumerate(prime(p), n, &opts);
            match compare_rows(&r, rows) {
                Ok(d) => println!("PASS  {id:<4} {title} [{d}]"),
                Err(e) => println!("FAIL  {id:<4} {title} [{e}] (non-gating)"),
            }
        } else {
            suite.skip(id, &title, "set SSP_ACCEPTANCE_EXTENDED=1");
        }
    }

    suite.run("4", "oracle equivalence, p=3 n<=4 and p=2 n<=5", || {
        let checker = ConsistencyChecker::new();
        let mut total = 0u64;
        let mut bad = Vec::new();
        for (p, n_max) in [(3u64, 4usize), (2, 5)] {
            for n in 2..=n_max {
                for chain in all_chains(prime(p), n) {
                    total += 1;
                    let ours = checker.is_consistent(&chain);
                    let oracle = associativity_oracle(&chain, OracleMode::exhaustive()).map_err(|e| e.to_string())?;
                    if ours != oracle {
                        bad.push(chain.to_string());
                    }
                }
            }
        }
        if bad.is_empty() {
            Ok(format!("{total} chains, 0 disagreements"))
        } else {
            Err(format!("{} disagreements: {}", bad.len(), bad.join(", ")))
        }
    });

    suite.run("5", "no G(4,2): every non-abelian n=4 group has cut-off 3, p in {2,3,5,7}", || {
        let checker = ConsistencyChecker::new();
        let mut groups = 0;
        for p in [2, 3, 5, 7] {
            for chain in all_chains(prime(p), 4) {
                if chain.is_abelian() || !checker.is_consistent(&chain) {
                    continue;
                }
                groups += 1;
                if cutoff(&chain) != 3 {
                    return Err(format!("{chain} has cut-off {}", cutoff(&chain)));
                }
            }
        }
        Ok(format!("{groups} non-abelian groups, all cut-off 3"))
    });

    let fig_groups = || p3.groups.iter().chain(&p5.groups).chain(&p7.groups);
    suite.run("6", "cut-off arithmetic c = 2q+r+j, 0<=j<=q, on criteria 1-3 groups", || {
        let mut checked = 0;
        for g in fig_groups() {
            if g.chain.is_abelian() {
                continue;
            }
            checked += 1;
            cutoff_params(g.chain.n(), cutoff(&g.chain)).map_err(|e| format!("{}: {e}", g.chain))?;
        }
        Ok(format!("{checked} non-abelian groups, 0 violation flags"))
    });

    suite.run("7", "metabelian and class <= 3; p=2 n<=8 class <= 2", || {
        let mut checked = 0;
        for g in fig_groups() {
            checked += 1;
            if g.class > 3 {
                return Err(format!("{} has class {}", g.chain, g.class));
            }
            if !is_metabelian(&PcPresentation::compile(&g.chain)) {
                return Err(format!("{} is not metabelian", g.chain));
            }
        }
        for g in &p2.groups {
            checked += 1;
            if g.class > 2 || !is_metabelian(&PcPresentation::compile(&g.chain)) {
                return Err(format!("p=2: {} has class {} or is not metabelian", g.chain, g.class));
            }
        }
        Ok(format!("{checked} groups"))
    });

    suite.run("8", "structural suite, p=3 n<=6 full sweep", || {
        let limit = DEFAULT_BRUTE_FORCE_LIMIT;
        let mut checks = 0;
        let small = p3.groups.iter().filter(|g| g.chain.n() <= 6);
        for g in small {
            let c = &g.chain;
            let results = [
                ("center", check_center_structure(c, limit)),
                ("triple decomposition", check_triple_decomposition(c)),
                ("commutator membership", check_commutator_membership(c)),
                ("independence", check_independence(c)),
                ("simple triple", verify_simple_triple(c, limit)),
            ];
            for (name, r) in results {
                checks += 1;
                match r {
                    Check::Pass => {}
                    Check::NotApplicable(_) if c.is_abelian() => {}
                    other => return Err(format!("{c}: {name}: {other:?}")),
                }
            }
        }
        Ok(format!("{checks} checks, 100% pass"))
    });

    suite.run("9", "Heisenberg powers P_k: G(3k,2k), consistent, no lifts, p in {2,3,5}, k in {1,2}", || {
        let checker = ConsistencyChecker::new();
        for p in [2, 3, 5] {
            for k in 1..=2 {
                let chain = build_heisenberg_power(prime(p), k).map_err(|e| e.to_string())?;
                if !checker.is_consistent(&chain) {
                    return Err(format!("P_{k} at p={p} is inconsistent"));
                }
                if chain.n() != 3 * k || cutoff(&chain) != 2 * k {
                    return Err(format!("P_{k} at p={p} has cut-off {}", cutoff(&chain)));
                }
                let lifts = extend_all(&chain).len();
                if lifts != 0 {
                    return Err(format!("P_{k} at p={p} has {lifts} consistent extensions"));
                }
            }
        }
        Ok("6 groups, 0 extensions".into())
    });

    suite.run("10", "matrix representations faithful, every class-2 group p=3 n<=6", || {
        let mut reps = 0;
        for g in p3.groups.iter().filter(|g| g.chain.n() <= 6 && g.class == 2) {
            let rep = build_affine_rep(&g.chain).map_err(|e| format!("{}: {e}", g.chain))?;
            let v = verify_representation(&g.chain, &rep, DEFAULT_BRUTE_FORCE_LIMIT);
            let order = 3u128.pow(g.chain.n() as u32);
            if !v.homomorphism || v.faithfulness != (Faithfulness::Exhaustive { distinct_images: order }) {
                return Err(format!("{}: {:?}", g.chain, v));
            }
            reps += 1;
        }
        Ok(format!("{reps} representations, image size p^n each"))
    });

    suite.run("11", "property suite: f-equation, apply_f homomorphism, determinism", || {
        for (p, n) in [(3, 8), (5, 6)] {
            let bad = f_equation_counterexamples(prime(p), n, F_EQUATION_SAMPLES, SEED);
            if bad > 0 {
                return Err(format!("f-equation: {bad} counterexamples at p={p}, n={n}"));
            }
        }
        let mut sampled = 0;
        for (i, g) in p3.groups.iter().enumerate().step_by(F_HOMOMORPHISM_STRIDE) {
            let pres = PcPresentation::compile(&g.chain);
            let bad = apply_f_homomorphism_failures(&pres, F_HOMOMORPHISM_PAIRS, SEED ^ i as u64);
            if bad > 0 {
                return Err(format!("{}: apply_f fails on {bad} pairs", g.chain));
            }
            sampled += 1;
        }
        let single = EnumerationOptions {
            threads: Some(1),
            ..Default::default()
        };
        let a = enumerate(prime(3), 7, &single).to_json(false);
        let b = enumerate(prime(3), 7, &EnumerationOptions::default()).to_json(false);
        let c = p3.report.to_json(false);
        let c_prefix = enumerate(prime(3), 8, &single).to_json(false);
        if a != b || c != c_prefix {
            return Err("enumeration reports differ between runs".into());
        }
        let limits = AnalysisLimits::default();
        let chain = &p3.groups[p3.groups.len() / 2].chain;
        let r1 = analyze(chain, &limits).map_err(|e| e.to_string())?.to_json();
        let r2 = analyze(chain, &limits).map_err(|e| e.to_string())?.to_json();
        if r1 != r2 {
            return Err("structure reports differ between runs".into());
        }
        if f_equation_counterexamples(prime(3), 8, 1000, SEED) != f_equation_counterexamples(prime(3), 8, 1000, SEED) {
            return Err("sampling is not reproducible".into());
        }
        Ok(format!(
            "{F_EQUATION_SAMPLES} f-equation samples x 2, {F_HOMOMORPHISM_PAIRS} pairs x {sampled} groups, reports byte-identical"
        ))
    });

    for (p, r) in [(2, &p2), (3, &p3), (5, &p5), (7, &p7)] {
        println!(
            "note  p={p}: chains passing the relation check but failing alpha^p = id: {}",
            r.report.order_failures.len()
        );
    }

    if suite.failures > 0 {
        println!("{} criteria failed", suite.failures);
        std::process::exit(1);
    }
    println!("all gating criteria passed");
}
