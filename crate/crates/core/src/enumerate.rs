//! Breadth-first enumeration of all consistent SSP presentations for a prime,
//! counted by nilpotency class.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::consistency::{ConsistencyChecker, Extender};
use crate::error::{Error, Result};
use crate::invariants::prune_predicate;
use crate::pc::{EssentialChain, PcPresentation, PrimeModulus};
use crate::subgroups::nilpotency_class;

/// Parents per work unit when the frontier is spilled to disk.
const SPILL_CHUNK: usize = 4096;

#[derive(Clone, Debug, Default)]
pub struct EnumerationOptions {
    /// Worker threads; `Some(1)` runs on the calling thread, `None` uses the
    /// global rayon pool.
    pub threads: Option<usize>,
    /// Skip candidates whose cut-off cannot occur before testing them.
    pub prune: bool,
    /// Stop before a level whose candidates would exceed this many in total.
    pub max_candidates: Option<u64>,
    /// Keep each frontier level in this directory instead of in memory.
    pub spill_dir: Option<PathBuf>,
}

/// A consistent chain with its nilpotency class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedGroup {
    pub chain: EssentialChain,
    pub class: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    pub class1: u64,
    pub class2: u64,
    pub class3: u64,
    pub class4plus: u64,
    /// Candidate presentations examined at this level.
    pub candidates: u64,
    pub seconds: f64,
}

impl ReportRow {
    pub fn counts(&self) -> (u64, u64, u64) {
        (self.class1, self.class2, self.class3)
    }

    pub fn total(&self) -> u64 {
        self.class1 + self.class2 + self.class3 + self.class4plus
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationReport {
    pub p: u32,
    pub rows: Vec<ReportRow>,
    pub total_candidates: u64,
    /// Set when the candidate budget stopped the run early.
    pub truncated: bool,
    /// Chains whose conjugation map satisfied every relation but had order
    /// larger than `p`.
    pub order_failures: Vec<Vec<Vec<u16>>>,
    #[serde(skip)]
    pub stats: RunStats,
}

/// Work counters that legitimately differ between pruned and unpruned runs.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunStats {
    pub consistency_tests: u64,
    pub pruned: u64,
}

impl EnumerationReport {
    pub fn row(&self, n: usize) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// Any group of class 4 or more.
    pub fn has_class_violation(&self) -> bool {
        self.rows.iter().any(|r| r.class4plus > 0)
    }

    /// `n,class1,class2,class3,class4plus,seconds`; timings print as `0.000`
    /// when disabled.
    pub fn to_csv(&self, timings: bool) -> String {
        let mut s = String::from("n,class1,class2,class3,class4plus,seconds\n");
        for r in &self.rows {
            let secs = if timings { r.seconds } else { 0.0 };
            let _ = writeln!(
                s,
                "{},{},{},{},{},{:.3}",
                r.n, r.class1, r.class2, r.class3, r.class4plus, secs
            );
        }
        if self.truncated {
            s.push_str("# truncated: candidate budget exceeded\n");
        }
        s
    }

    pub fn to_json(&self, timings: bool) -> String {
        let mut copy = self.clone();
        if !timings {
            for r in &mut copy.rows {
                r.seconds = 0.0;
            }
        }
        let mut s = serde_json::to_string_pretty(&copy).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Every consistent one-generator extension of a consistent chain, in
/// lexicographic order of the new relation vector.
pub fn extend_all(chain: &EssentialChain) -> Vec<EssentialChain> {
    let extender = Extender::new(PcPresentation::compile(chain));
    let mut stats = RunStats::default();
    extend_with(&extender, chain, false, &mut stats, None)
}

fn extend_with(
    extender: &Extender,
    parent: &EssentialChain,
    prune: bool,
    stats: &mut RunStats,
    checker: Option<&ConsistencyChecker>,
) -> Vec<EssentialChain> {
    let p = parent.p().get() as u16;
    let len = parent.n() - 1;
    let mut out = Vec::new();
    if !extender.any_possible() {
        // every relation among g_2..g_{n-1} is vector independent
        stats.consistency_tests += 1;
        return out;
    }
    let mut child = parent
        .extended(&vec![0; len])
        .expect("valid extension length");
    loop {
        let a = child.top_mut().to_vec();
        if prune && prune_predicate(&child) {
            stats.pruned += 1;
        } else {
            stats.consistency_tests += 1;
            let verdict = extender.check(&a);
            if verdict.order_only_failure() {
                if let Some(c) = checker {
                    c.log_order_failure(&child);
                }
            }
            if verdict.is_automorphism() {
                out.push(child.clone());
            }
        }
        // odometer, last entry fastest
        let top = child.top_mut();
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            top[k] += 1;
            if top[k] < p {
                break;
            }
            top[k] = 0;
        }
    }
}

fn classify(chain: EssentialChain) -> EnumeratedGroup {
    let class = nilpotency_class(&PcPresentation::compile(&chain))
        .expect("consistent presentations are nilpotent");
    EnumeratedGroup { chain, class }
}

fn process_chunk(
    parents: &[EnumeratedGroup],
    prune: bool,
    parallel: bool,
    checker: &ConsistencyChecker,
) -> (Vec<EnumeratedGroup>, RunStats) {
    let work = |g: &EnumeratedGroup| {
        let extender = Extender::new(PcPresentation::compile(&g.chain));
        let mut stats = RunStats::default();
        let kids = extend_with(&extender, &g.chain, prune, &mut stats, Some(checker));
        let kids: Vec<EnumeratedGroup> = kids.into_iter().map(classify).collect();
        (kids, stats)
    };
    let results: Vec<(Vec<EnumeratedGroup>, RunStats)> = if parallel {
        parents.par_iter().map(work).collect()
    } else {
        parents.iter().map(work).collect()
    };
    let mut stats = RunStats::default();
    let mut out = Vec::new();
    for (kids, s) in results {
        stats.consistency_tests += s.consistency_tests;
        stats.pruned += s.pruned;
        out.extend(kids);
    }
    (out, stats)
}

enum Frontier {
    Memory(Vec<EnumeratedGroup>),
    Disk { path: PathBuf, len: usize },
}

impl Frontier {
    fn len(&self) -> usize {
        match self {
            Frontier::Memory(v) => v.len(),
            Frontier::Disk { len, .. } => *len,
        }
    }
}

fn encode(g: &EnumeratedGroup) -> String {
    let mut s = format!("{} {}", g.chain.n(), g.class);
    for v in g.chain.to_vectors() {
        s.push(' ');
        for (i, e) in v.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{e}");
        }
    }
    s
}

fn decode(p: PrimeModulus, line: &str) -> Result<EnumeratedGroup> {
    let bad = || Error::Parse(format!("corrupt spill line: {line:?}"));
    let mut parts = line.split(' ');
    let n: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let class: usize = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
    let vectors = parts
        .map(|s| s.split(',').map(|e| e.parse::<u16>().map_err(|_| bad())).collect())
        .collect::<Result<Vec<Vec<u16>>>>()?;
    Ok(EnumeratedGroup {
        chain: EssentialChain::new(p, n, &vectors)?,
        class,
    })
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("spill file: {e}"))
}

/// Enumerates levels `2..=n_max`.
pub fn enumerate(p: PrimeModulus, n_max: usize, options: &EnumerationOptions) -> EnumerationReport {
    enumerate_with(p, n_max, options, |_, _| {}).expect("in-memory enumeration does not fail")
}

/// Like [`enumerate`], calling `visit(n, groups)` with every consistent
/// group of each level, in canonical order, possibly in several batches.
pub fn enumerate_with<F>(
    p: PrimeModulus,
    n_max: usize,
    options: &EnumerationOptions,
    mut visit: F,
) -> Result<EnumerationReport>
where
    F: FnMut(usize, &[EnumeratedGroup]) + Send,
{
    match options.threads {
        Some(t) if t > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::NotApplicable(format!("thread pool: {e}")))?;
            pool.install(|| run(p, n_max, options, true, &mut visit))
        }
        Some(_) => run(p, n_max, options, false, &mut visit),
        None => run(p, n_max, options, true, &mut visit),
    }
}

fn run<F>(
    p: PrimeModulus,
    n_max: usize,
    options: &EnumerationOptions,
    parallel: bool,
    visit: &mut F,
) -> Result<EnumerationReport>
where
    F: FnMut(usize, &[EnumeratedGroup]),
{
    if !(2..=crate::MAX_GENERATORS).contains(&n_max) {
        return Err(Error::GeneratorCount(n_max));
    }
    let checker = ConsistencyChecker::new();
    let start = Instant::now();
    let root = vec![EnumeratedGroup {
        chain: EssentialChain::abelian(p, 2),
        class: 1,
    }];
    visit(2, &root);
    let mut rows = vec![ReportRow {
        n: 2,
        class1: 1,
        class2: 0,
        class3: 0,
        class4plus: 0,
        candidates: 1,
        seconds: start.elapsed().as_secs_f64(),
    }];
    let mut total = 1u64;
    let mut stats = RunStats::default();
    let mut truncated = false;
    let mut frontier = Frontier::Memory(root);
    for n in 3..=n_max {
        let candidates = frontier.len() as u64 * (p.get() as u64).pow(n as u32 - 2);
        if let Some(budget) = options.max_candidates {
            if total + candidates > budget {
                truncated = true;
                break;
            }
        }
        let level_start = Instant::now();
        let mut row = ReportRow {
            n,
            class1: 0,
            class2: 0,
            class3: 0,
            class4plus: 0,
            candidates,
            seconds: 0.0,
        };
        let tally = |kids: &[EnumeratedGroup], row: &mut ReportRow| {
            for g in kids {
                match g.class {
                    0 | 1 => row.class1 += 1,
                    2 => row.class2 += 1,
                    3 => row.class3 += 1,
                    _ => row.class4plus += 1,
                }
            }
        };
        frontier = match (&frontier, &options.spill_dir) {
            (Frontier::Memory(parents), None) => {
                let (kids, s) = process_chunk(parents, options.prune, parallel, &checker);
                stats.consistency_tests += s.consistency_tests;
                stats.pruned += s.pruned;
                tally(&kids, &mut row);
                visit(n, &kids);
                Frontier::Memory(kids)
            }
            (source, Some(dir)) => {
                std::fs::create_dir_all(dir).map_err(io_err)?;
                let path = dir.join(format!("level_{n}.txt"));
                let mut out = BufWriter::new(File::create(&path).map_err(io_err)?);
                let mut len = 0usize;
                let mut handle = |chunk: &[EnumeratedGroup],
                                  row: &mut ReportRow,
                                  stats: &mut RunStats,
                                  out: &mut BufWriter<File>|
                 -> Result<()> {
                    let (kids, s) = process_chunk(chunk, options.prune, parallel, &checker);
                    stats.consistency_tests += s.consistency_tests;
                    stats.pruned += s.pruned;
                    tally(&kids, row);
                    visit(n, &kids);
                    for g in &kids {
                        writeln!(out, "{}", encode(g)).map_err(io_err)?;
                    }
                    len += kids.len();
                    Ok(())
                };
                match source {
                    Frontier::Memory(parents) => {
                        for chunk in parents.chunks(SPILL_CHUNK) {
                            handle(chunk, &mut row, &mut stats, &mut out)?;
                        }
                    }
                    Frontier::Disk { path: src, .. } => {
                        let reader = BufReader::new(File::open(src).map_err(io_err)?);
                        let mut chunk = Vec::with_capacity(SPILL_CHUNK);
                        for line in reader.lines() {
                            chunk.push(decode(p, &line.map_err(io_err)?)?);
                            if chunk.len() == SPILL_CHUNK {
                                handle(&chunk, &mut row, &mut stats, &mut out)?;
                                chunk.clear();
                            }
                        }
                        if !chunk.is_empty() {
                            handle(&chunk, &mut row, &mut stats, &mut out)?;
                        }
                    }
                }
                out.flush().map_err(io_err)?;
                Frontier::Disk { path, len }
            }
            (Frontier::Disk { .. }, None) => unreachable!("disk frontier without spill dir"),
        };
        total += candidates;
        row.seconds = level_start.elapsed().as_secs_f64();
        rows.push(row);
    }
    Ok(EnumerationReport {
        p: p.get(),
        rows,
        total_candidates: total,
        truncated,
        order_failures: checker
            .order_failures()
            .iter()
            .map(|c| c.to_vectors())
            .collect(),
        stats,
    })
}
