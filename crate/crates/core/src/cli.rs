//! Command-line front end: `enumerate`, `analyze`, `verify`, `repr` and `oracle`.
//!
//! Exit codes: 0 success, 1 structural or oracle violation, 2 usage or parse
//! error, 3 capacity exceeded.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::consistency::{associativity_oracle, ConsistencyChecker, OracleMode, DEFAULT_ORACLE_LIMIT};
use crate::enumerate::{enumerate_with, EnumeratedGroup, EnumerationOptions, EnumerationReport};
use crate::error::Error;
use crate::golden;
use crate::invariants::{analyze, cutoff, cutoff_params, apply_f_homomorphism_failures, AnalysisLimits, Check};
use crate::matrep::{build_affine_rep, verify_representation};
use crate::pc::{EssentialChain, PcPresentation, PresentationFile, PrimeModulus};
use crate::subgroups::DEFAULT_BRUTE_FORCE_LIMIT;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Largest number of chains the oracle command will sweep at one level.
const ORACLE_SWEEP_LIMIT: u128 = 1 << 20;
/// Random pairs per group for the `apply_f` homomorphism check in `verify`.
const VERIFY_F_PAIRS: u64 = 64;
/// Random triples per chain when the exhaustive oracle is out of range.
const DEFAULT_ORACLE_SAMPLES: u64 = 20_000;

#[derive(Parser, Debug)]
#[command(name = "ssp", version, about = "Self-similar polycyclic p-groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count consistent presentations by nilpotency class.
    Enumerate {
        #[command(flatten)]
        range: RangeArgs,
        /// Stop before a level that would exceed this many candidates.
        #[arg(long)]
        max_candidates: Option<u64>,
        /// Keep frontier levels on disk in this directory.
        #[arg(long)]
        spill_dir: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run every structural check on a presentation file.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the structural checks over a whole enumeration and compare the
    /// counts with the shipped tables.
    Verify {
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Build and verify the affine matrix representation of a class-2 group.
    Repr {
        file: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare the inductive consistency test with the associativity oracle
    /// on every chain.
    Oracle {
        #[command(flatten)]
        range: RangeArgs,
        /// Random triples per chain when exhaustive checking is out of range.
        #[arg(long, default_value_t = DEFAULT_ORACLE_SAMPLES)]
        samples: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RangeArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long = "max-n")]
    pub max_n: usize,
    /// Reject candidates by cut-off arithmetic before testing them.
    #[arg(long)]
    pub prune: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, env = "SSP_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, env = "SSP_BRUTE_FORCE_LIMIT", default_value_t = DEFAULT_BRUTE_FORCE_LIMIT,
          value_parser = positive_u128)]
    pub brute_force_limit: u128,
    #[arg(long, env = "SSP_ORACLE_LIMIT", default_value_t = DEFAULT_ORACLE_LIMIT,
          value_parser = positive_u128)]
    pub oracle_limit: u128,
    #[arg(long, env = "SSP_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Print zero in place of wall-clock timings.
    #[arg(long)]
    pub no_timings: bool,
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Enumerate {
        max_candidates: Option<u64>,
        spill_dir: Option<PathBuf>,
    },
    Analyze(PathBuf),
    Verify,
    Repr(PathBuf),
    Oracle { samples: u64 },
}

/// Fully resolved settings for one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub task: Task,
    pub p: u64,
    pub n_max: usize,
    pub brute_force_limit: u128,
    pub oracle_limit: u128,
    pub threads: Option<usize>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub prune: bool,
    pub seed: u64,
    pub timings: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Self {
        let (task, range, common, default_format) = match cli.command {
            Command::Enumerate {
                range,
                max_candidates,
                spill_dir,
                common,
            } => (
                Task::Enumerate {
                    max_candidates,
                    spill_dir,
                },
                Some(range),
                common,
                Format::Csv,
            ),
            Command::Analyze { file, common } => (Task::Analyze(file), None, common, Format::Text),
            Command::Verify { range, common } => (Task::Verify, Some(range), common, Format::Text),
            Command::Repr { file, common } => (Task::Repr(file), None, common, Format::Text),
            Command::Oracle {
                range,
                samples,
                common,
            } => (Task::Oracle { samples }, Some(range), common, Format::Text),
        };
        RunConfig {
            task,
            p: range.as_ref().map_or(0, |r| r.p),
            n_max: range.as_ref().map_or(0, |r| r.max_n),
            brute_force_limit: common.brute_force_limit,
            oracle_limit: common.oracle_limit,
            threads: common.threads,
            format: common.format.unwrap_or(default_format),
            output: common.output,
            prune: range.is_some_and(|r| r.prune),
            seed: common.seed,
            timings: !common.no_timings,
        }
    }

    fn options(&self) -> EnumerationOptions {
        let (max_candidates, spill_dir) = match &self.task {
            Task::Enumerate {
                max_candidates,
                spill_dir,
            } => (*max_candidates, spill_dir.clone()),
            _ => (None, None),
        };
        EnumerationOptions {
            threads: self.threads,
            prune: self.prune,
            max_candidates,
            spill_dir,
        }
    }

    fn limits(&self) -> AnalysisLimits {
        AnalysisLimits {
            brute_force_limit: self.brute_force_limit,
        }
    }
}

/// Result text plus exit code; diagnostics go to standard error.
pub struct Outcome {
    pub code: i32,
    pub output: String,
    pub diagnostics: String,
}

impl Outcome {
    fn new(code: i32, output: String) -> Self {
        Outcome {
            code,
            output,
            diagnostics: String::new(),
        }
    }

    fn error(code: i32, message: impl Into<String>) -> Self {
        Outcome {
            code,
            output: String::new(),
            diagnostics: message.into(),
        }
    }
}

fn code_for(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

fn prime(p: u64) -> Result<PrimeModulus, Outcome> {
    PrimeModulus::new(p).map_err(|e| Outcome::error(EXIT_USAGE, e.to_string()))
}

fn range_ok(cfg: &RunConfig) -> Result<PrimeModulus, Outcome> {
    let p = prime(cfg.p)?;
    if !(2..=crate::MAX_GENERATORS).contains(&cfg.n_max) {
        return Err(Outcome::error(EXIT_USAGE, Error::GeneratorCount(cfg.n_max).to_string()));
    }
    Ok(p)
}

fn load(path: &PathBuf) -> Result<EssentialChain, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::error(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    let file = PresentationFile::parse(&text)
        .map_err(|e| Outcome::error(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    if !ConsistencyChecker::new().is_consistent(&file.chain) {
        return Err(Outcome::error(
            EXIT_VIOLATION,
            format!("{}: presentation is inconsistent", path.display()),
        ));
    }
    Ok(file.chain)
}

/// Executes a resolved configuration without touching the process streams.
pub fn execute(cfg: &RunConfig) -> Outcome {
    let body = || -> Result<Outcome, Outcome> {
        Ok(match &cfg.task {
            Task::Enumerate { .. } => cmd_enumerate(cfg)?,
            Task::Analyze(path) => cmd_analyze(cfg, path)?,
            Task::Verify => cmd_verify(cfg)?,
            Task::Repr(path) => cmd_repr(cfg, path)?,
            Task::Oracle { samples } => cmd_oracle(cfg, *samples)?,
        })
    };
    body().unwrap_or_else(|o| o)
}

fn enumeration_table(report: &EnumerationReport, timings: bool) -> String {
    let mut s = format!(
        "p = {}\n{:>3} {:>9} {:>9} {:>9} {:>9} {:>9}\n",
        report.p, "n", "class 1", "class 2", "class 3", "class 4+", "seconds"
    );
    for r in &report.rows {
        let secs = if timings { r.seconds } else { 0.0 };
        let _ = writeln!(
            s,
            "{:>3} {:>9} {:>9} {:>9} {:>9} {:>9.3}",
            r.n, r.class1, r.class2, r.class3, r.class4plus, secs
        );
    }
    if report.truncated {
        s.push_str("truncated: candidate budget exceeded\n");
    }
    s
}

fn cmd_enumerate(cfg: &RunConfig) -> Result<Outcome, Outcome> {
    let p = range_ok(cfg)?;
    let mut violations = Vec::new();
    let class_bound = if p.get() == 2 { 2 } else { 3 };
    let report = enumerate_with(p, cfg.n_max, &cfg.options(), |_, groups| {
        for g in groups {
            if g.class > class_bound {
                violations.push(format!("{}: class {}", g.chain, g.class));
            } else if !g.chain.is_abelian() && cutoff_params(g.chain.n(), cutoff(&g.chain)).is_err() {
                violations.push(format!("{}: cut-off fits no c(n, j)", g.chain));
            }
        }
    })
    .map_err(|e| Outcome::error(code_for(&e), e.to_string()))?;
    let output = match cfg.format {
        Format::Csv => report.to_csv(cfg.timings),
        Format::Json => report.to_json(cfg.timings),
        Format::Text => enumeration_table(&report, cfg.timings),
    };
    let mut out = Outcome::new(EXIT_OK, output);
    if !violations.is_empty() {
        out.code = EXIT_VIOLATION;
        out.diagnostics = format!("{} violations\n{}", violations.len(), violations.join("\n"));
    } else if report.truncated {
        out.code = EXIT_CAPACITY;
        out.diagnostics = "candidate budget exceeded; report is partial".into();
    }
    Ok(out)
}

fn cmd_analyze(cfg: &RunConfig, path: &PathBuf) -> Result<Outcome, Outcome> {
    let chain = load(path)?;
    let report = analyze(&chain, &cfg.limits()).map_err(|e| Outcome::error(code_for(&e), e.to_string()))?;
    let output = match cfg.format {
        Format::Json => report.to_json(),
        _ => report.to_text(),
    };
    let code = if !report.passed() {
        EXIT_VIOLATION
    } else if report.hit_capacity() {
        EXIT_CAPACITY
    } else {
        EXIT_OK
    };
    Ok(Outcome::new(code, output))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
    pub capacity: u64,
}

impl Tally {
    fn record(&mut self, c: &Check) {
        match c {
            Check::Pass => self.pass += 1,
            Check::Fail(_) => self.fail += 1,
            Check::NotApplicable(_) => self.not_applicable += 1,
            Check::Capacity(_) => self.capacity += 1,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifySummary {
    pub p: u32,
    pub n_max: usize,
    pub groups: u64,
    pub checks: BTreeMap<String, Tally>,
    pub golden_mismatches: Vec<String>,
    pub order_failures: usize,
    /// The first few violations, for diagnosis.
    pub violations: Vec<String>,
    pub violation_count: u64,
}

const MAX_LISTED_VIOLATIONS: usize = 20;

fn verify_group(g: &EnumeratedGroup, cfg: &RunConfig, index: u64) -> Vec<(String, Check)> {
    let mut checks = match analyze(&g.chain, &cfg.limits()) {
        Ok(r) => r.checks,
        Err(e) => vec![("analysis".to_string(), Check::Fail(e.to_string()))],
    };
    let rep_check = if g.class <= 2 {
        match build_affine_rep(&g.chain) {
            Ok(rep) => {
                let v = verify_representation(&g.chain, &rep, cfg.brute_force_limit);
                Check::from_bool(v.is_faithful_homomorphism(), || v.failures.join("; "))
            }
            Err(e) => Check::Fail(e.to_string()),
        }
    } else {
        Check::NotApplicable(format!("class {}", g.class))
    };
    checks.push(("representation".into(), rep_check));
    let pres = PcPresentation::compile(&g.chain);
    let bad = apply_f_homomorphism_failures(&pres, VERIFY_F_PAIRS, cfg.seed ^ index);
    checks.push((
        "f_homomorphism".into(),
        Check::from_bool(bad == 0, || format!("{bad} of {VERIFY_F_PAIRS} pairs")),
    ));
    checks
}

fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, Outcome> {
    let p = range_ok(cfg)?;
    let mut summary = VerifySummary {
        p: p.get(),
        n_max: cfg.n_max,
        ..Default::default()
    };
    let mut seen = 0u64;
    let report = enumerate_with(p, cfg.n_max, &cfg.options(), |_, groups| {
        let results: Vec<Vec<(String, Check)>> = groups
            .par_iter()
            .enumerate()
            .map(|(i, g)| verify_group(g, cfg, seen + i as u64))
            .collect();
        for (g, checks) in groups.iter().zip(results) {
            for (name, c) in checks {
                summary.checks.entry(name.clone()).or_default().record(&c);
                if let Check::Fail(why) = &c {
                    summary.violation_count += 1;
                    if summary.violations.len() < MAX_LISTED_VIOLATIONS {
                        summary.violations.push(format!("{}: {name}: {why}", g.chain));
                    }
                }
            }
        }
        seen += groups.len() as u64;
    })
    .map_err(|e| Outcome::error(code_for(&e), e.to_string()))?;
    summary.groups = seen;
    summary.order_failures = report.order_failures.len();
    if let Some(table) = golden::table(p.get()) {
        summary.golden_mismatches = golden::compare(&report, &table);
    }
    let failed = summary.violation_count > 0 || !summary.golden_mismatches.is_empty();
    let output = match cfg.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&summary).expect("summary serializes");
            s.push('\n');
            s
        }
        _ => verify_text(&summary, &report, cfg.timings),
    };
    Ok(Outcome::new(if failed { EXIT_VIOLATION } else { EXIT_OK }, output))
}

fn verify_text(s: &VerifySummary, report: &EnumerationReport, timings: bool) -> String {
    let mut out = enumeration_table(report, timings);
    let _ = writeln!(out, "\n{} groups checked", s.groups);
    let _ = writeln!(
        out,
        "{:<24}{:>8}{:>8}{:>8}{:>9}",
        "check", "pass", "fail", "n/a", "capacity"
    );
    for (name, t) in &s.checks {
        let _ = writeln!(
            out,
            "{name:<24}{:>8}{:>8}{:>8}{:>9}",
            t.pass, t.fail, t.not_applicable, t.capacity
        );
    }
    match golden::table(s.p) {
        Some(_) if s.golden_mismatches.is_empty() => out.push_str("golden counts: match\n"),
        Some(_) => {
            out.push_str("golden counts: MISMATCH\n");
            for m in &s.golden_mismatches {
                let _ = writeln!(out, "  {m}");
            }
        }
        None => out.push_str("golden counts: none shipped for this prime\n"),
    }
    for v in &s.violations {
        let _ = writeln!(out, "violation: {v}");
    }
    let _ = writeln!(
        out,
        "{}",
        if s.violation_count == 0 && s.golden_mismatches.is_empty() {
            "verdict: pass"
        } else {
            "verdict: FAIL"
        }
    );
    out
}

fn cmd_repr(cfg: &RunConfig, path: &PathBuf) -> Result<Outcome, Outcome> {
    let chain = load(path)?;
    let rep = build_affine_rep(&chain)
        .map_err(|e| Outcome::error(code_for(&e), format!("{}: rejected: {e}", path.display())))?;
    let verdict = verify_representation(&chain, &rep, cfg.brute_force_limit);
    let output = match cfg.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Both<'a> {
                representation: &'a crate::matrep::AffineRepresentation,
                verdict: &'a crate::matrep::RepresentationVerdict,
            }
            let mut s = serde_json::to_string_pretty(&Both {
                representation: &rep,
                verdict: &verdict,
            })
            .expect("representation serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut s = rep.to_text();
            let _ = writeln!(s, "homomorphism: {}", verdict.homomorphism);
            let _ = writeln!(s, "faithful: {} ({:?})", verdict.faithful, verdict.faithfulness);
            for f in &verdict.failures {
                let _ = writeln!(s, "failure: {f}");
            }
            s
        }
    };
    let code = if verdict.is_faithful_homomorphism() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(Outcome::new(code, output))
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleRow {
    pub n: usize,
    pub chains: u64,
    pub consistent: u64,
    pub disagreements: u64,
    pub exhaustive: bool,
}

/// Every chain on `n` generators, in lexicographic order.
pub fn all_chains(p: PrimeModulus, n: usize) -> impl Iterator<Item = EssentialChain> {
    let lens: Vec<usize> = (3..=n).map(|j| j - 2).collect();
    let total: usize = lens.iter().sum();
    let pv = p.get() as u16;
    let mut flat = vec![0u16; total];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut vectors = Vec::with_capacity(lens.len());
        let mut at = 0;
        for &l in &lens {
            vectors.push(flat[at..at + l].to_vec());
            at += l;
        }
        let chain = EssentialChain::new(p, n, &vectors).expect("reduced entries");
        let mut k = total;
        loop {
            if k == 0 {
                done = true;
                break;
            }
            k -= 1;
            flat[k] += 1;
            if flat[k] < pv {
                break;
            }
            flat[k] = 0;
        }
        Some(chain)
    })
}

fn cmd_oracle(cfg: &RunConfig, samples: u64) -> Result<Outcome, Outcome> {
    let p = range_ok(cfg)?;
    let checker = ConsistencyChecker::new();
    let mut rows = Vec::new();
    let mut listed = Vec::new();
    for n in 2..=cfg.n_max {
        let count = (p.get() as u128).pow(((n - 1) * (n - 2) / 2) as u32);
        if count > ORACLE_SWEEP_LIMIT {
            return Err(Outcome::error(
                EXIT_CAPACITY,
                Error::Capacity {
                    what: "oracle sweep",
                    needed: count,
                    limit: ORACLE_SWEEP_LIMIT,
                }
                .to_string(),
            ));
        }
        let exhaustive = (p.get() as u128).pow(n as u32) <= cfg.oracle_limit;
        let mode = if exhaustive {
            OracleMode::Exhaustive {
                limit: cfg.oracle_limit,
            }
        } else {
            OracleMode::Sampled {
                triples: samples,
                seed: cfg.seed,
            }
        };
        let mut row = OracleRow {
            n,
            chains: 0,
            consistent: 0,
            disagreements: 0,
            exhaustive,
        };
        for chain in all_chains(p, n) {
            let ours = checker.is_consistent(&chain);
            let oracle = associativity_oracle(&chain, mode)
                .map_err(|e| Outcome::error(code_for(&e), e.to_string()))?;
            row.chains += 1;
            row.consistent += u64::from(ours);
            // a sampled oracle can only refute associativity
            let disagree = if exhaustive { ours != oracle } else { ours && !oracle };
            if disagree {
                row.disagreements += 1;
                if listed.len() < MAX_LISTED_VIOLATIONS {
                    listed.push(format!("{chain}: inductive {ours}, oracle {oracle}"));
                }
            }
        }
        rows.push(row);
    }
    let total: u64 = rows.iter().map(|r| r.disagreements).sum();
    let output = match cfg.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!("p = {}\n", p.get());
            for r in &rows {
                let _ = writeln!(
                    s,
                    "n = {}: {} chains, {} consistent, {} disagreements ({})",
                    r.n,
                    r.chains,
                    r.consistent,
                    r.disagreements,
                    if r.exhaustive { "exhaustive" } else { "sampled" }
                );
            }
            for l in &listed {
                let _ = writeln!(s, "disagreement: {l}");
            }
            s
        }
    };
    Ok(Outcome::new(if total == 0 { EXIT_OK } else { EXIT_VIOLATION }, output))
}

/// Parses arguments, runs, writes output, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let cfg = RunConfig::from_cli(cli);
    let outcome = execute(&cfg);
    if !outcome.diagnostics.is_empty() {
        eprintln!("{}", outcome.diagnostics.trim_end());
    }
    if !outcome.output.is_empty() {
        let written = match &cfg.output {
            Some(path) => std::fs::write(path, &outcome.output)
                .map_err(|e| format!("{}: {e}", path.display())),
            None => std::io::stdout()
                .lock()
                .write_all(outcome.output.as_bytes())
                .map_err(|e| e.to_string()),
        };
        if let Err(e) = written {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::from_cli(Cli::try_parse_from(std::iter::once("ssp").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn parses_flags() {
        let c = cfg(&["enumerate", "--p", "3", "--max-n", "5", "--prune", "--no-timings"]);
        assert_eq!(c.p, 3);
        assert_eq!(c.n_max, 5);
        assert!(c.prune);
        assert!(!c.timings);
        assert_eq!(c.format, Format::Csv);
        assert_eq!(c.brute_force_limit, DEFAULT_BRUTE_FORCE_LIMIT);
        assert!(Cli::try_parse_from(["ssp", "enumerate", "--p", "3"]).is_err());
        assert!(Cli::try_parse_from(["ssp", "verify", "--p", "3", "--max-n", "4", "--oracle-limit", "0"]).is_err());
    }

    #[test]
    fn enumerate_single_row() {
        let out = execute(&cfg(&["enumerate", "--p", "3", "--max-n", "2", "--no-timings"]));
        assert_eq!(out.code, EXIT_OK);
        assert_eq!(out.output, "n,class1,class2,class3,class4plus,seconds\n2,1,0,0,0,0.000\n");
    }

    #[test]
    fn bad_prime_is_usage_error() {
        assert_eq!(execute(&cfg(&["enumerate", "--p", "4", "--max-n", "3"])).code, EXIT_USAGE);
    }

    #[test]
    fn chain_sweep_counts() {
        let p = PrimeModulus::new(2).unwrap();
        assert_eq!(all_chains(p, 2).count(), 1);
        assert_eq!(all_chains(p, 4).count(), 8);
        assert_eq!(all_chains(p, 4).last().unwrap().to_vectors(), vec![vec![1], vec![1, 1]]);
    }
}
