use std::collections::BTreeMap;
use std::fmt::Write as _;

use legendre_identities::identity_suite::{ExcludedCase, IdentityId, RangeOutcome, VerificationResult};
use legendre_identities::selfcheck::CheckOutcome;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub seed: u64,
    pub n_max: i64,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub jobs: usize,
    pub elapsed_micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub n: i64,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub micros: u64,
}

impl From<&VerificationResult> for ResultRecord {
    fn from(r: &VerificationResult) -> Self {
        ResultRecord {
            identity_id: r.case.id.to_string(),
            params: r.case.params_map(),
            n: r.case.n,
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            equal: r.equal,
            micros: r.elapsed.as_micros() as u64,
        }
    }
}

/// A case outside its identity's stated range; both sides are included when
/// they are defined there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedRecord {
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub n: i64,
    pub reason: String,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl From<&ExcludedCase> for ExcludedRecord {
    fn from(e: &ExcludedCase) -> Self {
        ExcludedRecord {
            identity_id: e.case.id.to_string(),
            params: e.case.params_map(),
            n: e.case.n,
            reason: e.reason.clone(),
            lhs: e.probe.as_ref().map(|(l, _)| l.to_string()),
            rhs: e.probe.as_ref().map(|(_, r)| r.to_string()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub identity_id: String,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub run: RunInfo,
    pub results: Vec<ResultRecord>,
    pub excluded: Vec<ExcludedRecord>,
    pub identities: Vec<IdentitySummary>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn new(run: RunInfo, outcomes: &[(IdentityId, RangeOutcome)]) -> Self {
        let mut results = Vec::new();
        let mut excluded = Vec::new();
        let mut identities = Vec::new();
        let mut summary = Summary::default();
        for (id, outcome) in outcomes {
            results.extend(outcome.results.iter().map(ResultRecord::from));
            excluded.extend(outcome.excluded.iter().map(ExcludedRecord::from));
            let (pass, fail, skipped) = (outcome.passed(), outcome.failed(), outcome.excluded.len());
            summary.pass += pass;
            summary.fail += fail;
            summary.skipped += skipped;
            identities.push(IdentitySummary {
                identity_id: id.to_string(),
                pass,
                fail,
                skipped,
                micros: outcome.results.iter().map(|r| r.elapsed.as_micros() as u64).sum(),
            });
        }
        VerifyReport { run, results, excluded, identities, summary }
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<26} {:>7} {:>5} {:>8} {:>12}", "identity", "pass", "fail", "skipped", "micros");
        for s in &self.identities {
            let _ = writeln!(
                out,
                "{:<26} {:>7} {:>5} {:>8} {:>12}",
                s.identity_id, s.pass, s.fail, s.skipped, s.micros
            );
        }
        let failures: Vec<_> = self.results.iter().filter(|r| !r.equal).collect();
        if !failures.is_empty() {
            let _ = writeln!(out, "\ncounterexamples:");
            for r in failures {
                let _ = writeln!(out, "  {} n={} {} lhs={} rhs={}", r.identity_id, r.n, fmt_params(&r.params), r.lhs, r.rhs);
            }
        }
        let informational: Vec<_> = self
            .excluded
            .iter()
            .filter(|e| matches!((&e.lhs, &e.rhs), (Some(l), Some(r)) if l != r))
            .collect();
        if !informational.is_empty() {
            let _ = writeln!(out, "\noutside stated range (informational, not counted as failures):");
            for e in informational {
                let _ = writeln!(
                    out,
                    "  {} n={} {} {}: lhs={} rhs={}",
                    e.identity_id,
                    e.n,
                    fmt_params(&e.params),
                    e.reason,
                    e.lhs.as_deref().unwrap_or("-"),
                    e.rhs.as_deref().unwrap_or("-")
                );
            }
        }
        let _ = writeln!(
            out,
            "\ntotal: {} pass, {} fail, {} skipped (seed {}, n_max {}, {} jobs, {:.3} s)",
            self.summary.pass,
            self.summary.fail,
            self.summary.skipped,
            self.run.seed,
            self.run.n_max,
            self.run.jobs,
            self.run.elapsed_micros as f64 / 1e6
        );
        out
    }
}

fn fmt_params(params: &BTreeMap<String, String>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub comparisons: usize,
    pub passed: bool,
    pub failures: Vec<String>,
    pub internal_error: Option<String>,
}

impl From<&CheckOutcome> for CheckRecord {
    fn from(c: &CheckOutcome) -> Self {
        CheckRecord {
            name: c.name.to_string(),
            comparisons: c.comparisons,
            passed: c.passed(),
            failures: c.failures.clone(),
            internal_error: c.internal_error.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfcheckReport {
    pub seed: u64,
    pub skip_float: bool,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl SelfcheckReport {
    pub fn new(seed: u64, skip_float: bool, outcomes: &[CheckOutcome]) -> Self {
        let checks: Vec<CheckRecord> = outcomes.iter().map(CheckRecord::from).collect();
        let pass = checks.iter().filter(|c| c.passed).count();
        let summary = Summary { pass, fail: checks.len() - pass, skipped: 0 };
        SelfcheckReport { seed, skip_float, checks, summary }
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {:<30} {:>8} comparisons", c.name, c.comparisons);
            for f in c.failures.iter().take(5) {
                let _ = writeln!(out, "     {f}");
            }
            if let Some(e) = &c.internal_error {
                let _ = writeln!(out, "     error: {e}");
            }
        }
        let _ = writeln!(
            out,
            "\ntotal: {} pass, {} fail (seed {}{})",
            self.summary.pass,
            self.summary.fail,
            self.seed,
            if self.skip_float { ", float checks skipped" } else { "" }
        );
        out
    }
}
