//! Machine-readable verification reports.
//!
//! The JSON layout is fixed: top-level keys `scenario`, `params`, `checks`,
//! `passed`, `wall_ms`, each check carrying `name`, `max_abs_error`,
//! `threshold`, `passed`, `samples_used`. Numbers are serialized with
//! round-trip precision, and everything except `wall_ms` is a pure function
//! of the configuration (seed included), so reports are byte-reproducible.

use serde::{Deserialize, Serialize};

/// Outcome of one named check: the worst deviation observed over all
/// samples versus its threshold.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub max_abs_error: f64,
    pub threshold: f64,
    pub passed: bool,
    pub samples_used: usize,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, max_abs_error: f64, threshold: f64, samples_used: usize) -> Self {
        CheckResult {
            name: name.into(),
            max_abs_error,
            threshold,
            passed: max_abs_error <= threshold,
            samples_used,
        }
    }
}

/// Echo of the numeric configuration a scenario ran with.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamsEcho {
    pub c: f64,
    pub m: f64,
    pub r: f64,
    pub epsilon: Option<f64>,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub fd_step: f64,
}

/// A full scenario report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub params: ParamsEcho,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    pub wall_ms: f64,
}

impl Report {
    pub fn new(scenario: impl Into<String>, params: ParamsEcho, checks: Vec<CheckResult>, wall_ms: f64) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        Report { scenario: scenario.into(), params, checks, passed, wall_ms }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
