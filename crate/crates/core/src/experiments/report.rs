use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use super::TrialConfig;

/// One instance where an asserted relation failed, or, for conjecture
/// searches, a candidate counterexample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub trial: usize,
    /// Everything needed to re-run the check standalone.
    pub input: Value,
    pub assertion: String,
    pub evidence: Value,
}

/// A trial that could not be evaluated (root solver, singular formula, ...).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericError {
    pub trial: usize,
    pub input: Value,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub config: TrialConfig,
    pub failures: Vec<Failure>,
    pub findings: Vec<Failure>,
    /// Checks that failed at the tolerance but hold at ten times it.
    pub warnings: usize,
    pub numeric_errors: Vec<NumericError>,
    /// Keys starting with `max_` hold maxima over trials; the rest are sums.
    pub metrics: BTreeMap<String, f64>,
    pub wall_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn metric(&self, key: &str) -> f64 {
        self.metrics.get(key).copied().unwrap_or(0.0)
    }

    /// Stable, pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// What a single trial contributes to its report.
#[derive(Debug, Clone, Default)]
pub(crate) struct TrialOutcome {
    pub failures: Vec<Failure>,
    pub findings: Vec<Failure>,
    pub warnings: usize,
    pub errors: Vec<NumericError>,
    pub metrics: BTreeMap<String, f64>,
}

impl TrialOutcome {
    pub fn count(&mut self, key: impl Into<String>, value: f64) {
        *self.metrics.entry(key.into()).or_insert(0.0) += value;
    }

    pub fn record_max(&mut self, key: impl Into<String>, value: f64) {
        let slot = self.metrics.entry(key.into()).or_insert(f64::NEG_INFINITY);
        *slot = slot.max(value);
    }
}

pub(crate) fn merge_metric(into: &mut BTreeMap<String, f64>, key: &str, value: f64) {
    match into.get_mut(key) {
        Some(slot) if key.starts_with("max_") => *slot = slot.max(value),
        Some(slot) => *slot += value,
        None => {
            into.insert(key.to_string(), value);
        }
    }
}
