//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use horder::contractions::{chain_decompose, verify_chain};
use horder::experiments::{
    random_majorized, random_roots, recheck_conjecture1, run, zn_cells, Suite, SuiteReport, TrialConfig,
};
use horder::order::{birkhoff_decompose, classical_witness, hlp_majorize, multivariate_majorize, reconstruct};
use horder::RootMultiset;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ORDER_TOL: f64 = 1e-9;
const SECOND_DIFFERENCE_TOL: f64 = 1e-6;
const LOCAL_DETECTION_RATE: f64 = 0.95;
const LINE_SUM_TOL: f64 = 1e-9;
const ENTRY_TOL: f64 = 1e-12;
const WITNESS_MAP_TOL: f64 = 1e-8;
const RECONSTRUCTION_TOL: f64 = 1e-8;
const CHAIN_ENDPOINT_TOL: f64 = 1e-9;
const SUITE_BUDGET_SECS: f64 = 120.0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn config(trials: usize, seed: u64) -> TrialConfig {
    TrialConfig {
        tol: ORDER_TOL,
        record_wall_time: false,
        ..TrialConfig::with_trials(trials, seed)
    }
}

fn theorem_lambdas() -> Vec<f64> {
    vec![-10.0, -1.0, -0.1, -0.01, 0.01, 0.1, 1.0, 10.0]
}

/// Runs a suite and summarizes it; clean means no failures and no numeric errors.
fn timed(suite: Suite, cfg: &TrialConfig) -> (SuiteReport, f64) {
    let start = Instant::now();
    let report = run(suite, cfg);
    (report, start.elapsed().as_secs_f64())
}

fn clean(report: &SuiteReport, secs: f64) -> (bool, String) {
    let ok = report.failures.is_empty() && report.numeric_errors.is_empty() && secs < SUITE_BUDGET_SECS;
    let detail = format!(
        "{}: {} trials, {} failures, {} numeric errors, {} warnings, {:.1}s",
        report.suite,
        report.trials,
        report.failures.len(),
        report.numeric_errors.len(),
        report.warnings,
        secs
    );
    (ok, detail)
}

fn criterion_1() -> Outcome {
    let cfg = TrialConfig {
        lambdas: theorem_lambdas(),
        ..config(1000, 1)
    };
    let (report, secs) = timed(Suite::Orbit, &cfg);
    let (pass, detail) = clean(&report, secs);
    Outcome { pass, detail }
}

fn criterion_2() -> Outcome {
    let cfg = TrialConfig {
        lambdas: theorem_lambdas(),
        ..config(500, 2)
    };
    let (a, sa) = timed(Suite::SemigroupOrder, &cfg);
    let (b, sb) = timed(Suite::DerivativeOrder, &cfg);
    let (pa, da) = clean(&a, sa);
    let (pb, db) = clean(&b, sb);
    Outcome {
        pass: pa && pb,
        detail: format!("{da}; {db}"),
    }
}

fn criterion_3() -> Outcome {
    let cfg = TrialConfig {
        lambda_pairs: 10,
        ..config(500, 3)
    };
    let (report, secs) = timed(Suite::GlobalMonotone, &cfg);
    let (pass, detail) = clean(&report, secs);
    Outcome { pass, detail }
}

fn criterion_4() -> Outcome {
    let cfg = TrialConfig {
        convexity_points: 41,
        convexity_halfwidth: 2.0,
        second_difference_tol: SECOND_DIFFERENCE_TOL,
        ..config(300, 4)
    };
    let (report, secs) = timed(Suite::Convexity, &cfg);
    let (pass, detail) = clean(&report, secs);
    Outcome {
        pass,
        detail: format!(
            "{detail}, worst negative second difference {:e}",
            report.metric("max_negative_second_difference")
        ),
    }
}

fn criterion_5() -> Outcome {
    let cfg = TrialConfig {
        formula_min_gap: 0.1,
        formula_lambdas: vec![0.1, 0.5, 1.0],
        ..config(200, 5)
    };
    let (v, sv) = timed(Suite::VelocityFormula, &cfg);
    let (c, sc) = timed(Suite::CurvatureFormula, &cfg);
    let (pv, dv) = clean(&v, sv);
    let (pc, dc) = clean(&c, sc);
    Outcome {
        pass: pv && pc,
        detail: format!(
            "{dv} (max velocity error {:.1e}); {dc} (max curvature error {:.1e})",
            v.metric("max_velocity_error"),
            c.metric("max_curvature_error")
        ),
    }
}

fn criterion_6() -> Outcome {
    let cfg = TrialConfig {
        local_deltas: vec![0.1],
        ..config(200, 6)
    };
    let (report, secs) = timed(Suite::LocalFalsify, &cfg);
    let (ok, detail) = clean(&report, secs);
    let instances = report.metric("instances_delta_1e-1");
    let detected = report.metric("detected_delta_1e-1");
    let rate = detected / instances.max(1.0);
    Outcome {
        pass: ok && instances == 200.0 && rate >= LOCAL_DETECTION_RATE,
        detail: format!("{detail}, detection rate {rate:.3} at delta 0.1, every detection re-verified"),
    }
}

fn criterion_7() -> Outcome {
    let (zn, sz) = timed(Suite::CounterexampleZn, &config(0, 7));
    let (cl, sc) = timed(Suite::CounterexampleComplexLambda, &config(100, 7));
    let (pz, dz) = clean(&zn, sz);
    let (pc, dc) = clean(&cl, sc);
    Outcome {
        pass: pz && pc && zn.trials == zn_cells().len(),
        detail: format!("{dz}; {dc}"),
    }
}

fn criterion_8() -> Outcome {
    let (report, secs) = timed(Suite::Conjecture1, &config(10_000, 8));
    let reverified = report
        .findings
        .iter()
        .filter(|f| recheck_conjecture1(&f.input, ORDER_TOL).unwrap_or(false))
        .count();
    let json_ok = serde_json::from_str::<serde_json::Value>(&report.to_json())
        .is_ok_and(|v| v["findings"].is_array());
    Outcome {
        pass: json_ok && reverified == report.findings.len() && secs < SUITE_BUDGET_SECS,
        detail: format!(
            "{} trials, {} findings ({} re-verified), {} numeric errors, {} warnings, {:.1}s",
            report.trials,
            report.findings.len(),
            reverified,
            report.numeric_errors.len(),
            report.warnings,
            secs
        ),
    }
}

fn random_pair(rng: &mut ChaCha8Rng, i: usize, degrees: std::ops::RangeInclusive<usize>) -> (RootMultiset, RootMultiset) {
    let n = rng.random_range(degrees);
    let y = random_roots(n, 5.0, Some(1e-3), rng);
    let x = random_majorized(&y, i, rng);
    (x, y)
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = Vec::new();
    let mut max_terms = 0;
    for i in 0..500 {
        let (x, y) = random_pair(&mut rng, i, 2..=8);
        let n = x.len();
        let scale = y.abs_sum().max(1.0);
        let a = match classical_witness(&x, &y) {
            Ok(a) => a,
            Err(e) => {
                bad.push(format!("{i}: {e}"));
                continue;
            }
        };
        let image = a.apply(y.values());
        let map_err = image.iter().zip(x.values()).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max);
        if a.max_defect() > LINE_SUM_TOL || a.min_entry() < -ENTRY_TOL || map_err > WITNESS_MAP_TOL * scale {
            bad.push(format!("{i}: witness defect {:e}, map error {map_err:e}", a.max_defect()));
            continue;
        }
        match birkhoff_decompose(&a, 1e-12) {
            Ok(terms) => {
                let back = reconstruct(n, &terms);
                let recon = (0..n)
                    .flat_map(|r| (0..n).map(move |c| (r, c)))
                    .map(|(r, c)| (back[r][c] - a.get(r, c)).abs())
                    .fold(0.0, f64::max);
                let weight: f64 = terms.iter().map(|t| t.weight).sum();
                max_terms = max_terms.max(terms.len());
                if recon > RECONSTRUCTION_TOL
                    || (weight - 1.0).abs() > LINE_SUM_TOL
                    || terms.len() > (n - 1) * (n - 1) + 1
                    || terms.iter().any(|t| t.weight <= 0.0)
                {
                    bad.push(format!("{i}: reconstruction {recon:e}, {} terms", terms.len()));
                }
            }
            Err(e) => bad.push(format!("{i}: {e}")),
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("500 pairs, {} bad, at most {max_terms} permutations{}", bad.len(), first_problem(&bad)),
    }
}

fn first_problem(bad: &[String]) -> String {
    bad.first().map_or(String::new(), |b| format!(", first: {b}"))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut disagreements = 0;
    let mut majorized = 0;
    for i in 0..500 {
        let n = rng.random_range(2..=8);
        let y = random_roots(n, 5.0, None, &mut rng);
        let x = match i % 3 {
            0 => random_majorized(&y, i / 3, &mut rng),
            1 => {
                let z = random_roots(n, 5.0, None, &mut rng);
                let shift = (y.sum() - z.sum()) / n as f64;
                RootMultiset::new(z.values().iter().map(|v| v + shift).collect()).unwrap()
            }
            _ => random_roots(n, 5.0, None, &mut rng),
        };
        let hlp = hlp_majorize(&x, &y, ORDER_TOL).unwrap().majorized;
        let lp = multivariate_majorize(&x.to_points(), &y.to_points(), ORDER_TOL).unwrap().feasible;
        majorized += usize::from(hlp);
        disagreements += usize::from(hlp != lp);
    }
    Outcome {
        pass: disagreements == 0,
        detail: format!("500 instances ({majorized} majorized), {disagreements} disagreements"),
    }
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut bad = Vec::new();
    let mut longest = 0;
    for i in 0..300 {
        let (x, y) = random_pair(&mut rng, i, 3..=10);
        match chain_decompose(&y, &x) {
            Ok(chain) => {
                longest = longest.max(chain.steps.len());
                let check = verify_chain(&chain, &x, CHAIN_ENDPOINT_TOL);
                if !check.valid {
                    bad.push(format!("{i}: {:?}", check.violation));
                }
            }
            Err(e) => bad.push(format!("{i}: {e}")),
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("300 pairs, {} invalid, longest chain {longest} steps{}", bad.len(), first_problem(&bad)),
    }
}

fn criterion_12() -> Outcome {
    let mut mismatched = Vec::new();
    for (suite, trials) in [
        (Suite::Orbit, 200),
        (Suite::LocalFalsify, 50),
        (Suite::Conjecture1, 500),
        (Suite::CounterexampleComplexLambda, 20),
    ] {
        let cfg = config(trials, 12);
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run(suite, &cfg).to_json());
        let parallel = run(suite, &cfg).to_json();
        let again = run(suite, &cfg).to_json();
        if serial != parallel || parallel != again {
            mismatched.push(suite.name());
        }
    }
    Outcome {
        pass: mismatched.is_empty(),
        detail: format!("reports byte-identical across reruns and thread counts; mismatches {mismatched:?}"),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("orbit order", criterion_1),
        ("semigroup and derivative order", criterion_2),
        ("global monotonicity", criterion_3),
        ("convexity of extreme zeros and spread", criterion_4),
        ("velocity and curvature formulas", criterion_5),
        ("local falsification", criterion_6),
        ("counterexample reproduction", criterion_7),
        ("real-part conjecture search", criterion_8),
        ("witness soundness", criterion_9),
        ("criteria equivalence", criterion_10),
        ("contraction chains", criterion_11),
        ("determinism", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} {name}: {}", i + 1, outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
