//! Machine-readable suite reports.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use yangian_core::report::CheckOutcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall time of the job that produced the check; only recorded on request so that reports stay
    /// byte-identical between runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub overall: Status,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckRecord>) -> Self {
        let overall = if checks.iter().all(|c| c.status == Status::Pass) { Status::Pass } else { Status::Fail };
        SuiteReport { suite: suite.into(), checks, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn from_outcomes(suite: impl Into<String>, outcomes: Vec<CheckOutcome>) -> Self {
        Self::new(suite, outcomes.into_iter().map(|o| record(o, None)).collect())
    }

    /// Concatenates several reports under one name.
    pub fn merge(suite: impl Into<String>, parts: Vec<SuiteReport>) -> Self {
        Self::new(suite, parts.into_iter().flat_map(|r| r.checks).collect())
    }

    /// Human-readable lines, one per check, then the overall status.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = if c.status == Status::Pass { "PASS" } else { "FAIL" };
            s.push_str(&format!("{tag} {}", c.name));
            if let Some(w) = &c.witness {
                s.push_str(&format!(": {w}"));
            }
            if let Some(ms) = c.runtime_ms {
                s.push_str(&format!(" [{ms} ms]"));
            }
            s.push('\n');
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let overall = if self.passed() { "PASS" } else { "FAIL" };
        s.push_str(&format!("{}: {overall} ({passed}/{} checks)\n", self.suite, self.checks.len()));
        s
    }
}

fn record(o: CheckOutcome, runtime_ms: Option<u64>) -> CheckRecord {
    CheckRecord {
        name: o.name,
        status: if o.passed { Status::Pass } else { Status::Fail },
        witness: o.detail,
        runtime_ms,
    }
}

/// A named unit of work producing checks. An error becomes a single failed check.
pub struct Job {
    name: String,
    run: Box<dyn Fn() -> yangian_core::Result<Vec<CheckOutcome>> + Send + Sync>,
}

impl Job {
    pub fn new(name: impl Into<String>, run: impl Fn() -> yangian_core::Result<Vec<CheckOutcome>> + Send + Sync + 'static) -> Self {
        Job { name: name.into(), run: Box::new(run) }
    }
}

/// Runs the jobs in the thread pool and assembles the records in job order.
pub fn run_jobs(suite: &str, jobs: Vec<Job>, timings: bool) -> SuiteReport {
    let results: Vec<Vec<CheckRecord>> = jobs
        .par_iter()
        .map(|job| {
            let start = Instant::now();
            let out = match (job.run)() {
                Ok(v) => v,
                Err(e) => vec![CheckOutcome::fail(job.name.clone(), e.to_string())],
            };
            let ms = timings.then(|| start.elapsed().as_millis() as u64);
            out.into_iter().map(|o| record(o, ms)).collect()
        })
        .collect();
    SuiteReport::new(suite, results.into_iter().flatten().collect())
}
