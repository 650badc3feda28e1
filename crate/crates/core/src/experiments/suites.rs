use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::io::{complex_polynomial_value, real_polynomial_value};
use crate::order::{compare_multisets, compare_points, CompareConfig, Relation};
use crate::polynomials::{Monic, Poly};
use crate::rootfinding::{aberth_roots, d_lambda_roots, d_lambda_zeros, interlaces, AberthConfig, PlanarPoints, is_hyperbolic, real_roots_with, root_velocity, RootConfig, SortedRoots};
use crate::Complex64;

use super::falsify::{falsify_local_with, recheck_local};
use super::report::{Failure, NumericError, TrialOutcome};
use super::sampling::{
    random_complex, random_degree, random_log_lambda, random_majorized, random_roots, theorem_roots,
};
use super::{Suite, TrialConfig};

/// Outcome of a check that should hold at `tol`.
enum Triage {
    Pass,
    /// Fails at `tol`, holds at `10 tol`.
    Near,
    Fail,
}

struct Trial<'a> {
    config: &'a TrialConfig,
    index: usize,
    out: TrialOutcome,
}

impl Trial<'_> {
    fn compare_config(&self, scale: f64) -> CompareConfig<f64> {
        CompareConfig {
            witnesses: false,
            ..CompareConfig::with_tol(self.config.tol * scale)
        }
    }

    fn fail(&mut self, input: Value, assertion: &str, evidence: Value) {
        self.out.failures.push(Failure {
            trial: self.index,
            input,
            assertion: assertion.to_string(),
            evidence,
        });
    }

    fn error(&mut self, input: Value, error: &Error) {
        self.out.errors.push(NumericError {
            trial: self.index,
            input,
            error: error.to_string(),
        });
    }

    fn record(&mut self, triage: Triage, input: Value, assertion: &str, evidence: Value) {
        match triage {
            Triage::Pass => {}
            Triage::Near => self.out.warnings += 1,
            Triage::Fail => self.fail(input, assertion, evidence),
        }
    }

    /// Asserts `Z(P) ≼ Z(Q)` given the zero sets of hyperbolic `P`, `Q`.
    fn assert_below(
        &mut self,
        x: Result<SortedRoots<f64>>,
        y: Result<SortedRoots<f64>>,
        assertion: &str,
        input: Value,
    ) {
        let compared = x.and_then(|x| y.map(|y| (x, y))).and_then(|(x, y)| {
            compare_multisets(&x, &y, &self.compare_config(1.0)).map(|v| (x, y, v))
        });
        match compared {
            Ok((_, _, v)) if v.relation.is_below() => {}
            Ok((x, y, v)) => {
                let near = compare_multisets(&x, &y, &self.compare_config(10.0))
                    .is_ok_and(|w| w.relation.is_below());
                let triage = if near { Triage::Near } else { Triage::Fail };
                self.record(triage, input, assertion, serde_json::to_value(&v).expect("serializable"));
            }
            Err(e) => self.error(input, &e),
        }
    }

    /// Asserts `value >= -slack`, with the usual ten-fold triage band.
    fn assert_at_least(&mut self, value: f64, slack: f64, assertion: &str, input: impl FnOnce() -> Value) {
        let triage = if value >= -slack {
            Triage::Pass
        } else if value >= -10.0 * slack {
            Triage::Near
        } else {
            Triage::Fail
        };
        if !matches!(triage, Triage::Pass) {
            self.record(triage, input(), assertion, json!({ "value": value, "slack": slack }));
        }
    }
}

fn real_roots(p: &Monic<f64>) -> Result<SortedRoots<f64>> {
    real_roots_with(p, &RootConfig::default())
}

fn d_lambda(p: &Monic<f64>, t: f64) -> Result<SortedRoots<f64>> {
    d_lambda_roots(p, t, &RootConfig::default())
}

pub(crate) fn run_trial(suite: Suite, config: &TrialConfig, index: usize, rng: &mut ChaCha8Rng) -> TrialOutcome {
    let mut trial = Trial {
        config,
        index,
        out: TrialOutcome::default(),
    };
    match suite {
        Suite::SemigroupOrder => semigroup_order(&mut trial, rng),
        Suite::DerivativeOrder => derivative_order(&mut trial, rng),
        Suite::Orbit => orbit(&mut trial, rng),
        Suite::GlobalMonotone => global_monotone(&mut trial, rng),
        Suite::Convexity => convexity(&mut trial, rng),
        Suite::LocalFalsify => local_falsify(&mut trial, rng),
        Suite::VelocityFormula => velocity_formula(&mut trial, rng),
        Suite::CurvatureFormula => curvature_formula(&mut trial, rng),
        Suite::InterlaceTrajectory => interlace_trajectory(&mut trial, rng),
        Suite::ObreschkoffPencil => obreschkoff_pencil(&mut trial, rng),
        Suite::CounterexampleZn => counterexample_zn(&mut trial),
        Suite::CounterexampleComplexLambda => counterexample_complex_lambda(&mut trial, rng),
        Suite::Conjecture1 => conjecture1(&mut trial, rng),
    }
    trial.out
}

/// `(Q, P)` with `Z(P) ≺ Z(Q)`, both strictly hyperbolic.
fn majorizing_pair(trial: &Trial, rng: &mut ChaCha8Rng) -> (Monic<f64>, Monic<f64>) {
    let n = random_degree(trial.config, rng).max(2);
    let y = theorem_roots(n, trial.config, rng);
    let x = random_majorized(&y, trial.index, rng);
    (
        y.to_polynomial().expect("non-empty"),
        x.to_polynomial().expect("non-empty"),
    )
}

fn semigroup_order(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let (q, p) = majorizing_pair(trial, rng);
    for &t in &trial.config.lambdas.clone() {
        // P + tP' = (1 - (-t) d/dx) P
        let pt = p.one_minus_lambda_d(-t);
        let qt = q.one_minus_lambda_d(-t);
        let input = json!({ "p": real_polynomial_value(&p), "q": real_polynomial_value(&q), "lambda": t });
        trial.assert_below(real_roots(&pt), real_roots(&qt), "P + tP' ≼ Q + tQ'", input);
    }
}

fn derivative_order(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let (q, p) = majorizing_pair(trial, rng);
    let input = json!({ "p": real_polynomial_value(&p), "q": real_polynomial_value(&q) });
    match (p.normalized_derivative(), q.normalized_derivative()) {
        (Ok(dp), Ok(dq)) => trial.assert_below(real_roots(&dp), real_roots(&dq), "P'/n ≼ Q'/n", input),
        (Err(e), _) | (_, Err(e)) => trial.error(input, &e),
    }
}

fn orbit(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let n = random_degree(trial.config, rng);
    let p = theorem_roots(n, trial.config, rng).to_polynomial().expect("non-empty");
    for &t in &trial.config.lambdas.clone() {
        let input = json!({ "p": real_polynomial_value(&p), "lambda": t });
        trial.assert_below(real_roots(&p), d_lambda(&p, t), "P ≼ D_t P", input);
    }
}

fn global_monotone(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let n = random_degree(trial.config, rng);
    let p = theorem_roots(n, trial.config, rng).to_polynomial().expect("non-empty");
    for _ in 0..trial.config.lambda_pairs {
        let a = random_log_lambda(-2.0, 1.0, rng);
        let b = random_log_lambda(-2.0, 1.0, rng).abs().copysign(a);
        let (mut t1, t2) = if a.abs() <= b.abs() { (a, b) } else { (b, a) };
        if rng.random_bool(0.1) {
            t1 = 0.0;
        }
        let input = json!({ "p": real_polynomial_value(&p), "lambda1": t1, "lambda2": t2 });
        trial.assert_below(d_lambda(&p, t1), d_lambda(&p, t2), "D_t1 P ≼ D_t2 P", input);
    }
}

fn convexity(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let cfg = trial.config;
    let n = random_degree(cfg, rng);
    let p = theorem_roots(n, cfg, rng).to_polynomial().expect("non-empty");
    let m = cfg.convexity_points.max(3);
    let grid: Vec<f64> = (0..m)
        .map(|i| cfg.convexity_halfwidth * (2.0 * i as f64 / (m - 1) as f64 - 1.0))
        .collect();
    let mut maxs = Vec::with_capacity(m);
    let mut mins = Vec::with_capacity(m);
    for &t in &grid {
        match d_lambda(&p, t) {
            Ok(r) => {
                maxs.push(r.max());
                mins.push(r.min());
            }
            Err(e) => return trial.error(json!({ "p": real_polynomial_value(&p), "lambda": t }), &e),
        }
    }
    let spreads: Vec<f64> = maxs.iter().zip(&mins).map(|(a, b)| a - b).collect();
    let neg_mins: Vec<f64> = mins.iter().map(|v| -v).collect();
    let zero = grid.iter().position(|&t| t == 0.0);
    let scale = p.coeffs().iter().map(|c| c.abs()).fold(1.0, f64::max);
    let input = || json!({ "p": real_polynomial_value(&p), "grid": grid });
    for (name, values) in [("max Z", &maxs), ("-min Z", &neg_mins), ("spread", &spreads)] {
        let worst = values
            .windows(3)
            .map(|w| w[0] - 2.0 * w[1] + w[2])
            .fold(f64::INFINITY, f64::min);
        trial.out.record_max("max_negative_second_difference", (-worst).max(0.0));
        trial.assert_at_least(
            worst,
            cfg.second_difference_tol,
            &format!("second differences of {name} are non-negative"),
            input,
        );
        if let Some(z) = zero {
            let lowest = values.iter().copied().fold(f64::INFINITY, f64::min);
            trial.assert_at_least(
                lowest - values[z],
                cfg.tol * scale,
                &format!("{name} is smallest at t = 0"),
                input,
            );
        }
    }
}

fn local_falsify(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let cfg = trial.config;
    let n = random_degree(cfg, rng).max(2);
    let p = random_roots(n, cfg.root_bound, Some(cfg.min_gap), rng)
        .to_polynomial()
        .expect("non-empty");
    let e = Poly::new((0..n).map(|_| rng.sample(StandardNormal)).collect::<Vec<f64>>());
    let mut ladder = cfg.ladder();
    ladder.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(a.total_cmp(b)));
    let compare = trial.compare_config(1.0);
    let mut deltas = vec![0.0];
    deltas.extend(cfg.local_deltas.iter().copied());
    for delta in deltas {
        let q = p.derivative().add(&e.scale(delta));
        let input = json!({
            "p": real_polynomial_value(&p),
            "e": e.coeffs(),
            "delta": delta,
            "q": q.coeffs(),
        });
        let key = format!("{delta:e}");
        trial.out.count(format!("instances_delta_{key}"), 1.0);
        let mut remaining = &ladder[..];
        loop {
            let found = match falsify_local_with(&p, &q, remaining, &compare) {
                Err(err) => {
                    trial.error(input.clone(), &err);
                    break;
                }
                Ok(found) => found,
            };
            let Some(violation) = found else { break };
            if delta == 0.0 {
                let evidence = serde_json::to_value(&violation).expect("serializable");
                trial.fail(input.clone(), "no ladder violation when Q = P'", evidence);
                break;
            }
            match recheck_local(&p, &q, violation.lambda, cfg.tol) {
                Ok(true) => {
                    trial.out.count(format!("detected_delta_{key}"), 1.0);
                    break;
                }
                // Only visible inside the tolerance band: keep climbing the ladder.
                Ok(false) => {
                    trial.out.warnings += 1;
                    let at = remaining
                        .iter()
                        .position(|&t| t == violation.lambda)
                        .expect("violation comes from the ladder");
                    remaining = &remaining[at + 1..];
                }
                Err(err) => {
                    trial.error(input.clone(), &err);
                    break;
                }
            }
        }
    }
}

/// Sorted zeros of `D_t P` at `t - h`, `t`, `t + h`.
fn roots_around(p: &Monic<f64>, t: f64, h: f64) -> Result<[SortedRoots<f64>; 3]> {
    Ok([
        d_lambda(p, t - h)?,
        d_lambda(p, t)?,
        d_lambda(p, t + h)?,
    ])
}

fn formula_instance(trial: &Trial, rng: &mut ChaCha8Rng) -> Monic<f64> {
    let cfg = trial.config;
    let n = random_degree(cfg, rng).max(2);
    random_roots(n, cfg.root_bound, Some(cfg.formula_min_gap), rng)
        .to_polynomial()
        .expect("non-empty")
}

const VELOCITY_STEP: f64 = 1e-5;
const VELOCITY_AGREEMENT: f64 = 1e-6;
const CURVATURE_STEP: f64 = 1e-4;
const CURVATURE_AGREEMENT: f64 = 1e-4;

/// Right-hand side of the velocity identity for every prefix `m`, with the
/// denominator evaluated as `(D_t P')'` and as `D_t P''` respectively.
fn velocity_rhs(p: &Monic<f64>, t: f64, x: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = x.len();
    let dp = p.normalized_derivative()?;
    let image_of_derivative = dp.apply_d_lambda(t);
    let w = d_lambda(&dp, t)?;
    let nf = n as f64;
    let d2 = p.derivative().derivative();
    let first = image_of_derivative.derivative().scale(nf);
    let second = d2.taylor_shift(t).sub(&d2.derivative().taylor_shift(t).scale(t));
    let mut out = (vec![0.0; n - 1], vec![0.0; n - 1]);
    for &wj in w.values() {
        let numerator = t * d2.evaluate(wj + t);
        let (a, b) = (numerator / first.evaluate(wj), numerator / second.evaluate(wj));
        let mut acc = 0.0;
        for m in 0..n - 1 {
            acc += 1.0 / (x[m] - wj);
            out.0[m] += a * acc;
            out.1[m] += b * acc;
        }
    }
    Ok(out)
}

fn velocity_formula(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let p = formula_instance(trial, rng);
    let n = p.degree();
    for &t in &trial.config.formula_lambdas.clone() {
        let input = json!({ "p": real_polynomial_value(&p), "lambda": t });
        let [lo, mid, hi] = match roots_around(&p, t, VELOCITY_STEP) {
            Ok(r) => r,
            Err(e) => return trial.error(input, &e),
        };
        let closed: Result<Vec<f64>> = mid.values().iter().map(|&x| root_velocity(&p, t, x)).collect();
        let closed = match closed {
            Ok(v) => v,
            Err(e) => return trial.error(input, &e),
        };
        let fd: Vec<f64> = (0..n)
            .map(|i| (hi.values()[i] - lo.values()[i]) / (2.0 * VELOCITY_STEP))
            .collect();
        let err = closed.iter().zip(&fd).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        trial.out.record_max("max_velocity_error", err);
        if err > VELOCITY_AGREEMENT {
            trial.fail(
                input.clone(),
                "closed-form velocity matches central differences",
                json!({ "closed_form": closed, "finite_difference": fd, "error": err }),
            );
        }

        let prefixes: Vec<f64> = closed
            .iter()
            .scan(0.0, |acc, v| {
                *acc += v;
                Some(*acc)
            })
            .take(n - 1)
            .collect();
        let slack = trial.config.tol * mid.abs_sum().max(1.0);
        for (m, &s) in prefixes.iter().enumerate() {
            let assertion = format!("sum of the {} smallest velocities is negative", m + 1);
            if s >= 0.0 {
                let triage = if s < 10.0 * slack { Triage::Near } else { Triage::Fail };
                trial.record(triage, input.clone(), &assertion, json!({ "prefix_sums": prefixes }));
            }
        }

        match velocity_rhs(&p, t, mid.values()) {
            Ok((first, second)) => {
                let fd_prefix: Vec<f64> = fd
                    .iter()
                    .scan(0.0, |acc, v| {
                        *acc += v;
                        Some(*acc)
                    })
                    .collect();
                let dist = |v: &[f64], w: &[f64]| v.iter().zip(w).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                trial.out.record_max("max_rhs_error_derivative_of_image", dist(&first, &fd_prefix));
                trial.out.record_max("max_rhs_error_image_of_second_derivative", dist(&second, &fd_prefix));
                trial.out.record_max("max_rhs_interpretation_gap", dist(&first, &second));
            }
            Err(e) => trial.error(input, &e),
        }
    }
}

/// `2 (x_n' + 1)^2 sum_i (w_i - x_i - t) / ((x_n + t - w_i)(x_n - x_i))`
/// with `w_i` the zeros of `P'`.
fn curvature_closed_form(p: &Monic<f64>, t: f64, x: &[f64], w: &[f64]) -> Result<f64> {
    let n = x.len();
    let xn = x[n - 1];
    let v = root_velocity(p, t, xn)?;
    let sum: f64 = (0..n - 1)
        .map(|i| (w[i] - x[i] - t) / ((xn + t - w[i]) * (xn - x[i])))
        .sum();
    Ok(2.0 * (v + 1.0).powi(2) * sum)
}

fn curvature_formula(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let p = formula_instance(trial, rng);
    let n = p.degree();
    let w = match p.normalized_derivative().and_then(|d| real_roots(&d)) {
        Ok(w) => w,
        Err(e) => return trial.error(json!({ "p": real_polynomial_value(&p) }), &e),
    };
    let mut lambdas: Vec<f64> = trial.config.formula_lambdas.iter().flat_map(|&t| [-t, t]).collect();
    lambdas.push(0.0);
    for t in lambdas {
        let input = json!({ "p": real_polynomial_value(&p), "lambda": t });
        let [lo, mid, hi] = match roots_around(&p, t, CURVATURE_STEP) {
            Ok(r) => r,
            Err(e) => return trial.error(input, &e),
        };
        let closed = match curvature_closed_form(&p, t, mid.values(), w.values()) {
            Ok(c) => c,
            Err(e) => return trial.error(input, &e),
        };
        let fd = (hi.values()[n - 1] - 2.0 * mid.values()[n - 1] + lo.values()[n - 1]) / CURVATURE_STEP.powi(2);
        let err = (closed - fd).abs();
        trial.out.record_max("max_curvature_error", err);
        let evidence = json!({ "closed_form": closed, "finite_difference": fd });
        if !(closed > 0.0) {
            trial.fail(input.clone(), "largest zero has positive curvature", evidence.clone());
        }
        if err > CURVATURE_AGREEMENT {
            trial.fail(input, "closed-form curvature matches second differences", evidence);
        }
    }
}

fn interlace_trajectory(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let n = random_degree(trial.config, rng).max(2);
    let p = theorem_roots(n, trial.config, rng).to_polynomial().expect("non-empty");
    let dp = p.normalized_derivative().expect("degree >= 2");
    for &t in &trial.config.lambdas.clone() {
        let input = json!({ "p": real_polynomial_value(&p), "lambda": t });
        let (x, w) = match (d_lambda(&p, t), d_lambda(&dp, t)) {
            (Ok(x), Ok(w)) => (x, w),
            (Err(e), _) | (_, Err(e)) => return trial.error(input, &e),
        };
        let (x, w) = (x.values(), w.values());
        let margin = (0..n - 1)
            .flat_map(|i| [w[i] - x[i], x[i + 1] - w[i]])
            .fold(f64::INFINITY, f64::min);
        let scale = x.iter().map(|v| v.abs()).fold(1.0, f64::max);
        if margin <= 0.0 {
            let triage = if margin > -10.0 * trial.config.tol * scale { Triage::Near } else { Triage::Fail };
            trial.record(triage, input, "x_i(t) < w_i(t) < x_{i+1}(t)", json!({ "x": x, "w": w }));
        }
    }
}

fn pencil_grid(points: usize) -> Vec<f64> {
    let m = points.max(2);
    (0..m)
        .map(|i| 10f64.powf(-4.0 + 8.0 * i as f64 / (m - 1) as f64))
        .flat_map(|t| [-t, t])
        .collect()
}

fn obreschkoff_pencil(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let cfg = trial.config;
    let n = random_degree(cfg, rng).max(3);
    let x = random_roots(n, cfg.root_bound, Some(cfg.min_gap), rng);
    let xv = x.values();
    let p = x.to_polynomial().expect("non-empty");
    let in_gap = |g: usize, u: f64| xv[g] + u * (xv[g + 1] - xv[g]);

    // One zero of Q strictly inside every gap of P.
    let good: Vec<f64> = (0..n - 1).map(|g| in_gap(g, rng.random_range(0.1..0.9))).collect();
    // Two zeros in one gap, none in another.
    let crowded = rng.random_range(0..n - 1);
    let empty = (crowded + 1 + rng.random_range(0..n - 2)) % (n - 1);
    let mut bad = Vec::with_capacity(n - 1);
    for g in 0..n - 1 {
        if g == crowded {
            bad.push(in_gap(g, rng.random_range(0.1..0.45)));
            bad.push(in_gap(g, rng.random_range(0.55..0.9)));
        } else if g != empty {
            bad.push(in_gap(g, rng.random_range(0.1..0.9)));
        }
    }
    let grid = pencil_grid(cfg.pencil_points);
    let eps_hyp = RootConfig::<f64>::default().eps_hyp;
    for (zeros, interlacing) in [(good, true), (bad, false)] {
        let q = Monic::from_roots(&zeros).expect("n >= 3").into_poly();
        let input = json!({ "p": real_polynomial_value(&p), "q": q.coeffs() });
        match interlaces(p.as_poly(), &q, eps_hyp) {
            Ok(flag) if flag == interlacing => {}
            Ok(flag) => trial.fail(
                input.clone(),
                "interlacing test recognizes the construction",
                json!({ "interlaces": flag, "q_roots": zeros }),
            ),
            Err(e) => return trial.error(input, &e),
        }
        let pencil = |t: f64| p.as_poly().add(&q.scale(t));
        if interlacing {
            if let Some(&t) = grid.iter().find(|&&t| !is_hyperbolic(&pencil(t), eps_hyp)) {
                trial.fail(input, "P + tQ hyperbolic for interlacing P, Q", json!({ "lambda": t }));
            }
        } else {
            let hit = grid.iter().copied().find(|&t| !is_hyperbolic(&pencil(t), eps_hyp));
            trial.out.count("non_interlacing_pairs", 1.0);
            match hit {
                Some(_) => trial.out.count("non_interlacing_detected", 1.0),
                None => trial.fail(
                    input,
                    "some P + tQ on the grid is not hyperbolic for non-interlacing P, Q",
                    json!({ "q_roots": zeros }),
                ),
            }
        }
    }
}

/// `(n, t)` cells of the roots-of-unity counterexample.
pub fn zn_cells() -> Vec<(usize, Complex64)> {
    let dirs = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
    ];
    let mut cells = Vec::new();
    for n in 3..=5 {
        for r in [0.2, 0.1, 0.05] {
            for d in dirs {
                cells.push((n, d * r));
            }
        }
    }
    cells
}

fn complex_zeros(p: &Monic<Complex64>) -> Result<PlanarPoints<f64>> {
    PlanarPoints::new(aberth_roots(p, &AberthConfig::default())?)
}

fn assert_incomparable(trial: &mut Trial, p: &Monic<Complex64>, t: Complex64, input: Value) {
    let compared = complex_zeros(p).and_then(|x| {
        let y = d_lambda_zeros(p, t, &AberthConfig::default())?;
        compare_points(&x, &y, trial.config.tol)
    });
    match compared {
        Ok(v) if v.relation == Relation::Incomparable => {}
        Ok(v) => trial.fail(
            input,
            "P and D_t P are incomparable",
            serde_json::to_value(&v).expect("serializable"),
        ),
        Err(e) => trial.error(input, &e),
    }
}

fn counterexample_zn(trial: &mut Trial) {
    let (n, t) = zn_cells()[trial.index];
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[0] = Complex64::new(-1.0, 0.0);
    coeffs[n] = Complex64::new(1.0, 0.0);
    let p = Monic::from_coeffs(coeffs).expect("monic");
    let input = json!({ "n": n, "p": complex_polynomial_value(&p), "lambda": [t.re, t.im] });
    assert_incomparable(trial, &p, t, input);
}

fn counterexample_complex_lambda(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let n = random_degree(trial.config, rng).max(2);
    let p = random_roots(n, trial.config.root_bound, Some(trial.config.min_gap), rng)
        .to_polynomial()
        .expect("non-empty");
    let pc = p.to_complex();
    for t in [Complex64::new(0.0, 0.1), Complex64::new(0.05, 0.05)] {
        let input = json!({ "p": real_polynomial_value(&p), "lambda": [t.re, t.im] });
        assert_incomparable(trial, &pc, t, input);
    }
}

fn conjecture1(trial: &mut Trial, rng: &mut ChaCha8Rng) {
    let cfg = trial.config;
    let n = random_degree(cfg, rng);
    let p = match random_complex(n, cfg.complex_family, cfg.root_bound, trial.index, rng) {
        Ok(p) => p,
        Err(e) => return trial.error(json!({ "degree": n }), &e),
    };
    let t = random_log_lambda(-2.0, 1.0, rng);
    let input = json!({ "p": complex_polynomial_value(&p), "lambda": t });
    match recheck_conjecture1_poly(&p, t, &trial.compare_config(1.0)) {
        Ok(None) => {}
        Ok(Some(v)) => {
            let loose = recheck_conjecture1_poly(&p, t, &trial.compare_config(10.0));
            if matches!(loose, Ok(None)) {
                trial.out.warnings += 1;
            } else {
                trial.out.findings.push(Failure {
                    trial: trial.index,
                    input,
                    assertion: "Re Z(P) ≼ Re Z(D_t P)".into(),
                    evidence: serde_json::to_value(&v).expect("serializable"),
                });
            }
        }
        Err(e) => trial.error(input, &e),
    }
}

/// The verdict when `Re Z(P) ≼ Re Z(D_t P)` fails, `None` when it holds.
fn recheck_conjecture1_poly(
    p: &Monic<Complex64>,
    t: f64,
    config: &CompareConfig<f64>,
) -> Result<Option<crate::order::Verdict<f64>>> {
    let x = complex_zeros(p)?.real_parts();
    let y = d_lambda_zeros(p, Complex64::new(t, 0.0), &AberthConfig::default())?.real_parts();
    let v = compare_multisets(&x, &y, config)?;
    Ok((!v.relation.is_below()).then_some(v))
}

/// Re-runs a conjecture finding from its serialized input; true when the
/// violation reproduces.
pub fn recheck_conjecture1(input: &Value, tol: f64) -> Result<bool> {
    let p = crate::io::polynomial_from_value(&input["p"])?.to_complex();
    let t = input["lambda"]
        .as_f64()
        .ok_or_else(|| Error::Parse("finding lacks a real lambda".into()))?;
    Ok(recheck_conjecture1_poly(&p, t, &CompareConfig::with_tol(tol))?.is_some())
}
