//! Outcomes of exact checks, shared by the verification routines and the CLI.

use serde::{Deserialize, Serialize};

use crate::linalg::ProofReport;

/// One named exact check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), passed: true, detail: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), passed: false, detail: Some(detail.into()) }
    }

    /// Passes when `ok`, otherwise fails with `detail`.
    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail())
        }
    }

    pub fn from_proof(p: &ProofReport) -> Self {
        match &p.counterexample {
            None => Self::pass(p.identity_name.clone()),
            Some(c) => Self::fail(p.identity_name.clone(), format!("u = {}, v = {}: {}", c.u, c.v, c.detail)),
        }
    }
}

/// Whether every outcome passed.
pub fn all_passed(checks: &[CheckOutcome]) -> bool {
    checks.iter().all(|c| c.passed)
}
