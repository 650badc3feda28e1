//! Seeded verification suites with auditable JSON reports.
//!
//! Trial `i` of a run draws from `ChaCha8Rng::seed_from_u64(seed)` on stream
//! `i`, so a report depends only on the suite and its configuration, never on
//! how trials are scheduled across threads.

mod config;
mod falsify;
mod report;
mod sampling;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use config::{ComplexFamily, TrialConfig};
pub use falsify::{falsify_local, falsify_local_with, local_pencil, recheck_local, LocalViolation, LocalViolationKind};
pub use report::{Failure, NumericError, SuiteReport};
pub use sampling::{random_complex, random_hyperbolic, random_majorized, random_roots, theorem_roots};
pub use suites::{recheck_conjecture1, zn_cells};

use crate::error::{Error, Result};

/// Environment variable capping the worker threads of a run; `0` or unset
/// means one per core.
pub const THREADS_ENV: &str = "HORDER_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    SemigroupOrder,
    DerivativeOrder,
    Orbit,
    GlobalMonotone,
    Convexity,
    LocalFalsify,
    VelocityFormula,
    CurvatureFormula,
    InterlaceTrajectory,
    ObreschkoffPencil,
    CounterexampleZn,
    CounterexampleComplexLambda,
    Conjecture1,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::SemigroupOrder,
        Suite::DerivativeOrder,
        Suite::Orbit,
        Suite::GlobalMonotone,
        Suite::Convexity,
        Suite::LocalFalsify,
        Suite::VelocityFormula,
        Suite::CurvatureFormula,
        Suite::InterlaceTrajectory,
        Suite::ObreschkoffPencil,
        Suite::CounterexampleZn,
        Suite::CounterexampleComplexLambda,
        Suite::Conjecture1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SemigroupOrder => "semigroup_order",
            Suite::DerivativeOrder => "derivative_order",
            Suite::Orbit => "orbit",
            Suite::GlobalMonotone => "global_monotone",
            Suite::Convexity => "convexity",
            Suite::LocalFalsify => "local_falsify",
            Suite::VelocityFormula => "velocity_formula",
            Suite::CurvatureFormula => "curvature_formula",
            Suite::InterlaceTrajectory => "interlace_trajectory",
            Suite::ObreschkoffPencil => "obreschkoff_pencil",
            Suite::CounterexampleZn => "counterexample_zn",
            Suite::CounterexampleComplexLambda => "counterexample_complex_lambda",
            Suite::Conjecture1 => "conjecture1",
        }
    }

    /// Number of trials actually run; the roots-of-unity suite always runs
    /// its fixed cells.
    fn trial_count(self, config: &TrialConfig) -> usize {
        match self {
            Suite::CounterexampleZn => zn_cells().len(),
            _ => config.trials,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Runs a registered suite by name.
pub fn run_suite(name: &str, config: &TrialConfig) -> Result<SuiteReport> {
    Ok(run(name.parse()?, config))
}

fn threads_from_env() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

pub fn run(suite: Suite, config: &TrialConfig) -> SuiteReport {
    let threads = threads_from_env();
    if threads == 0 {
        return run_trials(suite, config);
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| run_trials(suite, config)),
        Err(_) => run_trials(suite, config),
    }
}

fn run_trials(suite: Suite, config: &TrialConfig) -> SuiteReport {
    let started = Instant::now();
    let trials = suite.trial_count(config);
    let outcomes: Vec<_> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(i as u64);
            suites::run_trial(suite, config, i, &mut rng)
        })
        .collect();

    let mut report = SuiteReport {
        suite: suite.name().to_string(),
        seed: config.seed,
        trials,
        config: config.clone(),
        failures: Vec::new(),
        findings: Vec::new(),
        warnings: 0,
        numeric_errors: Vec::new(),
        metrics: Default::default(),
        wall_ms: 0,
    };
    for outcome in outcomes {
        report.failures.extend(outcome.failures);
        report.findings.extend(outcome.findings);
        report.warnings += outcome.warnings;
        report.numeric_errors.extend(outcome.errors);
        for (key, value) in &outcome.metrics {
            report::merge_metric(&mut report.metrics, key, *value);
        }
    }
    if config.record_wall_time {
        report.wall_ms = started.elapsed().as_millis() as u64;
    }
    report
}
