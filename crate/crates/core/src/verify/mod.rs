//! Verification-suite orchestration and machine-readable reporting.
//!
//! Each suite is a fixed list of named checks, each anchored to one of the
//! verified identities. Reports are deterministic for a fixed configuration:
//! check order follows the registry, and the JSON form zeroes the wall-clock
//! field so that two runs of the same engine version are byte-identical
//! (timings are shown in the text rendering instead).

mod checks;

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};

pub use checks::{suite_checks, suite_names, REQUIRED_ANCHORS};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: String,
    pub n: usize,
    /// Explicit truncation order; `None` leaves each check on its owning
    /// suite's default (the useful setting for the `all` suite).
    pub order: Option<usize>,
    pub parallel: usize,
    pub verbose: bool,
}

impl SuiteConfig {
    pub fn new(suite: &str, n: usize, order: usize) -> Self {
        SuiteConfig {
            suite: suite.to_string(),
            n,
            order: Some(order),
            parallel: 1,
            verbose: false,
        }
    }

    /// Configuration with per-suite default truncation orders.
    pub fn with_defaults(suite: &str, n: usize) -> Self {
        SuiteConfig {
            suite: suite.to_string(),
            n,
            order: None,
            parallel: 1,
            verbose: false,
        }
    }
}

/// Default truncation order of a suite, chosen for minutes-scale runtimes.
pub fn default_order(suite: &str, n: usize) -> usize {
    match suite {
        "pentagon" => 6,
        "te-spectral" | "four-term" => 3,
        "monodromy" => {
            if n <= 2 {
                3
            } else {
                2
            }
        }
        "trace-closed-form" | "ybe-r" => 3,
        "ybe-bigr" => 2,
        "mfor" => {
            if n <= 2 {
                4
            } else {
                2
            }
        }
        _ => 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub anchor: String,
    pub status: CheckStatus,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub max_order: usize,
    pub ms: u64,
    /// Error message or verbose detail; text rendering only.
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: String,
    pub n: usize,
    pub order: usize,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

/// Outcome of one check body.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub equal: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub max_order: usize,
    pub detail: Option<String>,
}

/// One registered check: a stable name, the identity it anchors, and a body.
#[derive(Clone, Copy)]
pub struct CheckDef {
    pub name: &'static str,
    pub anchor: &'static str,
    pub run: fn(&SuiteConfig) -> Result<CheckOutcome>,
}

fn run_check(def: &CheckDef, cfg: &SuiteConfig) -> CheckResult {
    let start = Instant::now();
    let (status, lhs_terms, rhs_terms, max_order, detail) = match (def.run)(cfg) {
        Ok(out) => (
            if out.equal { CheckStatus::Pass } else { CheckStatus::Fail },
            out.lhs_terms,
            out.rhs_terms,
            out.max_order,
            out.detail,
        ),
        Err(e) => (CheckStatus::Error, 0, 0, 0, Some(e.to_string())),
    };
    CheckResult {
        name: def.name.to_string(),
        anchor: def.anchor.to_string(),
        status,
        lhs_terms,
        rhs_terms,
        max_order,
        ms: start.elapsed().as_millis() as u64,
        detail,
    }
}

/// Execute the configured suite and collect a report. Exit semantics: the
/// report passes iff every check passes.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerifyReport> {
    let defs =
        suite_checks(&cfg.suite).ok_or_else(|| Error::UnknownSuite(cfg.suite.clone()))?;
    let results: Vec<CheckResult> = if cfg.parallel > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.parallel)
            .build()
            .map_err(|e| Error::Invariant(e.to_string()))?;
        pool.install(|| {
            use rayon::prelude::*;
            defs.par_iter().map(|d| run_check(d, cfg)).collect()
        })
    } else {
        defs.iter().map(|d| run_check(d, cfg)).collect()
    };
    let pass = results.iter().all(|r| r.status == CheckStatus::Pass);
    Ok(VerifyReport {
        suite: cfg.suite.clone(),
        n: cfg.n,
        order: cfg.order.unwrap_or(0),
        checks: results,
        pass,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    name: &'a str,
    anchor: &'a str,
    status: CheckStatus,
    lhs_terms: usize,
    rhs_terms: usize,
    max_order: usize,
    ms: u64,
}

#[derive(Serialize)]
struct JsonConfig {
    n: usize,
    order: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'a str,
    config: JsonConfig,
    checks: Vec<JsonCheck<'a>>,
    pass: bool,
}

/// Bit-stable JSON rendering: fixed field order, `ms` recorded as 0.
pub fn report_to_json(report: &VerifyReport) -> String {
    let json = JsonReport {
        suite: &report.suite,
        config: JsonConfig {
            n: report.n,
            order: report.order,
        },
        checks: report
            .checks
            .iter()
            .map(|c| JsonCheck {
                name: &c.name,
                anchor: &c.anchor,
                status: c.status,
                lhs_terms: c.lhs_terms,
                rhs_terms: c.rhs_terms,
                max_order: c.max_order,
                ms: 0,
            })
            .collect(),
        pass: report.pass,
    };
    let mut s = serde_json::to_string_pretty(&json).expect("report serialization");
    s.push('\n');
    s
}

pub fn report_to_text(report: &VerifyReport, verbose: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "suite: {} (n={}, order={})",
        report.suite, report.n, report.order
    );
    for c in &report.checks {
        let status = match c.status {
            CheckStatus::Pass => "pass ",
            CheckStatus::Fail => "FAIL ",
            CheckStatus::Error => "ERROR",
        };
        let _ = writeln!(
            out,
            "  {status}  {:<28} [{:<22}] lhs={} rhs={} order<={} {}ms",
            c.name, c.anchor, c.lhs_terms, c.rhs_terms, c.max_order, c.ms
        );
        if let Some(d) = &c.detail {
            if verbose || c.status != CheckStatus::Pass {
                for line in d.lines() {
                    let _ = writeln!(out, "         | {line}");
                }
            }
        }
    }
    let total = report.checks.len();
    let passed = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::Pass)
        .count();
    let _ = writeln!(
        out,
        "overall: {} ({passed}/{total} checks)",
        if report.pass { "PASS" } else { "FAIL" }
    );
    out
}

/// Write a report to a file.
pub fn emit_report(
    report: &VerifyReport,
    format: ReportFormat,
    path: &std::path::Path,
) -> Result<()> {
    let body = match format {
        ReportFormat::Json => report_to_json(report),
        ReportFormat::Text => report_to_text(report, false),
    };
    std::fs::write(path, body)?;
    Ok(())
}
