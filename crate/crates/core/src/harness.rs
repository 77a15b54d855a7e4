//! Batch bound checking over graph streams.
//!
//! Each graph gets its potential `ω(G)`, its exact `γ_{b,2}`, and three
//! verdicts: `9γ ≤ ω(G)`, `9γ ≤ 3n` for cubic graphs, and `γ ≤ ⌈4n/9⌉` for
//! connected graphs.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::broadcast::Broadcast;
use crate::graph::SubcubicGraph;
use crate::graph6::to_graph6;
use crate::solver::{gamma_brute_force_with, gamma_exact_with, SolveError, SolveOptions};

/// Exit status when every check passed.
pub const EXIT_OK: i32 = 0;
/// Exit status when some graph violates a bound.
pub const EXIT_VIOLATION: i32 = 2;
/// Exit status when some graph could not be solved within the caps.
pub const EXIT_PARTIAL: i32 = 3;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv failure: {0}")]
    Csv(#[from] csv::Error),
    #[error("json failure: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverChoice {
    BranchAndBound,
    BruteForce,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub solve: SolveOptions,
    pub solver: SolverChoice,
    pub timeout: Option<Duration>,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub check_subcubic: bool,
    pub check_cubic: bool,
    pub check_four_ninths: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            solve: SolveOptions::default(),
            solver: SolverChoice::BranchAndBound,
            timeout: Some(Duration::from_secs(30)),
            threads: None,
            check_subcubic: true,
            check_cubic: true,
            check_four_ninths: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub omega: i64,
    pub gamma: u32,
    /// `ω(G) - 9γ`.
    pub slack: i64,
    /// `9γ ≤ 3n`; `None` unless the graph is cubic.
    pub cubic_bound_ok: Option<bool>,
    /// `9γ ≤ ω(G)`.
    pub subcubic_bound_ok: Option<bool>,
    /// `γ ≤ ⌈4n/9⌉`; `None` unless the graph is connected.
    pub four_ninths_ok: Option<bool>,
    pub certificate: Broadcast,
    pub certificate_ok: bool,
    pub nodes: u64,
    pub millis: u64,
}

impl VerificationRecord {
    pub fn violation(&self) -> bool {
        !self.certificate_ok
            || [self.cubic_bound_ok, self.subcubic_bound_ok, self.four_ninths_ok]
                .contains(&Some(false))
    }
}

/// A graph the stream could not finish.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub index: usize,
    pub graph6: String,
    pub error: String,
}

pub fn verify_graph(g: &SubcubicGraph, opts: &VerifyOptions) -> Result<VerificationRecord, SolveError> {
    let start = Instant::now();
    let mut solve = opts.solve;
    if let Some(t) = opts.timeout {
        solve.deadline = Some(start + t);
    }
    let res = match opts.solver {
        SolverChoice::BranchAndBound => gamma_exact_with(g, &solve)?,
        SolverChoice::BruteForce => gamma_brute_force_with(g, &solve)?,
    };
    let millis = start.elapsed().as_millis() as u64;
    let n = g.vertex_count();
    let omega = g.omega();
    let gamma = res.gamma;
    let nine_gamma = 9 * i64::from(gamma);
    let certificate_ok =
        res.certificate.cost() == gamma && res.certificate.is_dominating(g).unwrap_or(false);
    Ok(VerificationRecord {
        graph6: to_graph6(g),
        n,
        m: g.edge_count(),
        omega,
        gamma,
        slack: omega - nine_gamma,
        cubic_bound_ok: (opts.check_cubic && n > 0 && g.is_cubic())
            .then_some(nine_gamma <= 3 * n as i64),
        subcubic_bound_ok: opts.check_subcubic.then_some(nine_gamma <= omega),
        four_ninths_ok: (opts.check_four_ninths && n > 0 && g.is_connected())
            .then_some(gamma as usize <= (4 * n).div_ceil(9)),
        certificate: res.certificate,
        certificate_ok,
        nodes: res.nodes_explored,
        millis,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamReport {
    pub records: Vec<VerificationRecord>,
    pub failures: Vec<Failure>,
    pub summary: Summary,
}

/// Verifies every graph, in parallel, keeping input order.
pub fn verify_stream(graphs: &[SubcubicGraph], opts: &VerifyOptions) -> StreamReport {
    let run = || -> Vec<Result<VerificationRecord, Failure>> {
        graphs
            .par_iter()
            .enumerate()
            .map(|(index, g)| {
                verify_graph(g, opts).map_err(|e| Failure {
                    index,
                    graph6: to_graph6(g),
                    error: e.to_string(),
                })
            })
            .collect()
    };
    let results = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(f) => failures.push(f),
        }
    }
    let summary = Summary::from_records(&records, failures.len());
    StreamReport { records, failures, summary }
}

/// Slack at or below this value counts as tight.
pub const TIGHT_SLACK: i64 = 0;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub verified: usize,
    pub partial: usize,
    pub violations: usize,
    pub min_slack: Option<i64>,
    /// graph6 of every record with slack `≤ TIGHT_SLACK`.
    pub tight: Vec<String>,
    pub counterexamples: Vec<String>,
    pub slack_histogram: BTreeMap<i64, usize>,
}

impl Summary {
    pub fn from_records(records: &[VerificationRecord], partial: usize) -> Self {
        let mut s = Summary {
            graphs: records.len() + partial,
            verified: records.len(),
            partial,
            ..Summary::default()
        };
        for r in records {
            *s.slack_histogram.entry(r.slack).or_default() += 1;
            s.min_slack = Some(s.min_slack.map_or(r.slack, |m| m.min(r.slack)));
            if r.slack <= TIGHT_SLACK {
                s.tight.push(r.graph6.clone());
            }
            if r.violation() {
                s.violations += 1;
                s.counterexamples.push(r.graph6.clone());
            }
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.violations > 0 {
            EXIT_VIOLATION
        } else if self.partial > 0 {
            EXIT_PARTIAL
        } else {
            EXIT_OK
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Jsonl,
    Csv,
    Summary,
}

/// Flat CSV row; the certificate uses the `v:f(v),...` literal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub omega: i64,
    pub gamma: u32,
    pub slack: i64,
    pub cubic_bound_ok: Option<bool>,
    pub subcubic_bound_ok: Option<bool>,
    pub four_ninths_ok: Option<bool>,
    pub certificate: String,
    pub certificate_ok: bool,
    pub nodes: u64,
    pub millis: u64,
}

impl From<&VerificationRecord> for CsvRow {
    fn from(r: &VerificationRecord) -> Self {
        CsvRow {
            graph6: r.graph6.clone(),
            n: r.n,
            m: r.m,
            omega: r.omega,
            gamma: r.gamma,
            slack: r.slack,
            cubic_bound_ok: r.cubic_bound_ok,
            subcubic_bound_ok: r.subcubic_bound_ok,
            four_ninths_ok: r.four_ninths_ok,
            certificate: r.certificate.to_string(),
            certificate_ok: r.certificate_ok,
            nodes: r.nodes,
            millis: r.millis,
        }
    }
}

/// Writes records (and, for `Summary`, only the summary) in a fixed field order.
pub fn report<W: Write>(rep: &StreamReport, format: ReportFormat, mut out: W) -> Result<(), ReportError> {
    match format {
        ReportFormat::Jsonl => {
            for r in &rep.records {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
            for f in &rep.failures {
                serde_json::to_writer(&mut out, f)?;
                out.write_all(b"\n")?;
            }
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            if rep.records.is_empty() {
                w.write_record(CSV_HEADER)?;
            }
            for r in &rep.records {
                w.serialize(CsvRow::from(r))?;
            }
            w.flush()?;
        }
        ReportFormat::Summary => {
            serde_json::to_writer_pretty(&mut out, &rep.summary)?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()?;
    Ok(())
}

const CSV_HEADER: [&str; 13] = [
    "graph6",
    "n",
    "m",
    "omega",
    "gamma",
    "slack",
    "cubic_bound_ok",
    "subcubic_bound_ok",
    "four_ninths_ok",
    "certificate",
    "certificate_ok",
    "nodes",
    "millis",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::named;

    fn one(name: &str) -> VerificationRecord {
        verify_graph(&named(name).unwrap(), &VerifyOptions::default()).unwrap()
    }

    #[test]
    fn k33_is_tight_for_the_cubic_bound() {
        let r = one("k33");
        assert_eq!(r.gamma, 2);
        assert_eq!(9 * r.gamma as usize, 3 * r.n);
        assert_eq!(r.cubic_bound_ok, Some(true));
        assert_eq!(r.slack, 0);
    }

    #[test]
    fn c4_has_zero_slack() {
        let r = one("c4");
        assert_eq!((r.omega, r.gamma, r.slack), (18, 2, 0));
        assert_eq!(r.cubic_bound_ok, None);
        assert_eq!(r.subcubic_bound_ok, Some(true));
        assert!(!r.violation());
    }

    #[test]
    fn stream_keeps_order_and_reports_partial() {
        let graphs: Vec<SubcubicGraph> =
            ["k4", "petersen", "p12", "k33"].iter().map(|n| named(n).unwrap()).collect();
        let opts = VerifyOptions {
            solve: SolveOptions { cap: 11, ..SolveOptions::default() },
            threads: Some(2),
            ..VerifyOptions::default()
        };
        let rep = verify_stream(&graphs, &opts);
        let order: Vec<usize> = rep.records.iter().map(|r| r.n).collect();
        assert_eq!(order, vec![4, 10, 6]);
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.failures[0].index, 2);
        assert_eq!(rep.summary.partial, 1);
        assert_eq!(rep.summary.exit_code(), EXIT_PARTIAL);
    }

    #[test]
    fn empty_stream() {
        let rep = verify_stream(&[], &VerifyOptions::default());
        assert_eq!(rep.summary, Summary::default());
        assert_eq!(rep.summary.exit_code(), EXIT_OK);
        let mut buf = Vec::new();
        report(&rep, ReportFormat::Jsonl, &mut buf).unwrap();
        assert!(buf.is_empty());
        let mut buf = Vec::new();
        report(&rep, ReportFormat::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 1);
    }

    #[test]
    fn csv_and_jsonl_agree() {
        let graphs: Vec<SubcubicGraph> =
            ["k4star", "c5", "prism"].iter().map(|n| named(n).unwrap()).collect();
        let rep = verify_stream(&graphs, &VerifyOptions::default());
        let mut j = Vec::new();
        report(&rep, ReportFormat::Jsonl, &mut j).unwrap();
        let mut c = Vec::new();
        report(&rep, ReportFormat::Csv, &mut c).unwrap();
        let from_json: Vec<CsvRow> = String::from_utf8(j)
            .unwrap()
            .lines()
            .map(|l| CsvRow::from(&serde_json::from_str::<VerificationRecord>(l).unwrap()))
            .collect();
        let from_csv: Vec<CsvRow> = csv::Reader::from_reader(c.as_slice())
            .deserialize()
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(from_json, from_csv);
        assert_eq!(from_csv.len(), 3);
    }

    #[test]
    fn violation_sets_exit_code() {
        let mut r = one("c4");
        r.subcubic_bound_ok = Some(false);
        let s = Summary::from_records(&[r], 1);
        assert_eq!(s.violations, 1);
        assert_eq!(s.exit_code(), EXIT_VIOLATION);
    }
}
