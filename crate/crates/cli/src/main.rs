use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use horder::contractions::chain_decompose;
use horder::experiments::{run, Suite, SuiteReport, TrialConfig};
use horder::io::{format_polynomial, parse_polynomial, AnyPolynomial};
use horder::order::{
    birkhoff_decompose, classical_witness, compare_complex, compare_hyperbolic, compare_real_parts,
    DoublyStochastic, Relation,
};
use horder::rootfinding::{all_roots, d_lambda_roots, real_root_multiset, RootConfig};
use horder::{Complex64, Error, RealPolynomial, RootMultiset};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "horder", version, about = "Majorization order on zeros of polynomials under D_t = (1 - t d/dx) exp(t d/dx)")]
struct Cli {
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Output format; csv is only available for `sweep`.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Hyperbolic,
    Complex,
    Realparts,
}

#[derive(Subcommand)]
enum Command {
    /// All complex zeros as [re, im] pairs.
    Roots {
        /// Polynomial as inline JSON or a path to a JSON file.
        poly: String,
    },
    /// Whether every zero is real; exits 1 if not.
    Hyperbolic { poly: String },
    /// Applies D_t.
    Dlam {
        poly: String,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "complex_lambda", required_unless_present = "complex_lambda")]
        lambda: Option<f64>,
        /// Complex parameter as `re,im`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pair)]
        complex_lambda: Option<(f64, f64)>,
    },
    /// Decides P ≼ Q; exits 1 unless P is below or equivalent to Q.
    Compare {
        #[arg(long, value_enum, default_value_t = Mode::Hyperbolic)]
        mode: Mode,
        p: String,
        q: String,
    },
    /// Doubly stochastic A with X = A Y for multisets X ≼ Y.
    Witness {
        /// Polynomial or plain JSON array of reals.
        x: String,
        y: String,
    },
    /// Convex combination of permutation matrices equal to a doubly stochastic matrix.
    Birkhoff {
        /// Matrix rows as inline JSON or a path to a JSON file.
        matrix: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Chain of simple non-degenerate contractions from FROM down to TO; each
    /// is a polynomial or a plain JSON array of reals.
    Chain {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Zeros of D_t P on an even grid of t.
    Sweep {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda_max: f64,
        /// Number of grid intervals.
        #[arg(long)]
        steps: usize,
    },
    /// Runs a verification suite; exits 1 on failures, 3 on numeric errors.
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        degree_min: Option<usize>,
        #[arg(long)]
        degree_max: Option<usize>,
    },
    /// Searches for violations of Re Z(P) ≼ Re Z(D_t P); exits 1 on findings.
    Conjecture1 {
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Report wall_ms as 0 so that reports are reproducible byte for byte.
    #[arg(long)]
    no_wall_time: bool,
}

impl RunArgs {
    fn config(&self) -> TrialConfig {
        TrialConfig {
            record_wall_time: !self.no_wall_time,
            ..TrialConfig::with_trials(self.trials, self.seed)
        }
    }
}

/// A message for standard error and the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotMajorized => 1,
            Error::RootSolve { .. }
            | Error::NotHyperbolic { .. }
            | Error::LabelAmbiguity { .. }
            | Error::SingularVelocity { .. }
            | Error::SolverStall { .. }
            | Error::StepCapExceeded { .. } => 3,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

/// Text to emit and the exit code that goes with it.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|out| {
        let mut text = out.text;
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &cli.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("horder: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Sweep { .. }) {
        return Err(Failure::usage("csv output is only available for sweep"));
    }
    match &cli.command {
        Command::Roots { poly } => {
            let p = load_polynomial(poly)?.to_complex();
            let roots = all_roots(p.as_poly(), RootConfig::<f64>::default().aberth.residual_tol)?;
            let pairs: Vec<[f64; 2]> = roots.sorted_lex().iter().map(|z| [z.re, z.im]).collect();
            Ok(Output::ok(pretty(&json!({ "roots": pairs }))))
        }
        Command::Hyperbolic { poly } => {
            let p = real_input(load_polynomial(poly)?)?;
            let eps = RootConfig::<f64>::default().eps_hyp;
            let (value, code) = match real_root_multiset(p.as_poly(), eps) {
                Ok(r) => (json!({ "hyperbolic": true, "roots": r }), 0),
                Err(Error::NotHyperbolic { re, im }) => {
                    (json!({ "hyperbolic": false, "witness_root": [re, im] }), 1)
                }
                Err(e) => return Err(e.into()),
            };
            Ok(Output { text: pretty(&value), code })
        }
        Command::Dlam { poly, lambda, complex_lambda } => {
            let p = load_polynomial(poly)?;
            let image = match (p, lambda, complex_lambda) {
                (AnyPolynomial::Real(p), Some(t), _) => AnyPolynomial::Real(p.apply_d_lambda(*t)),
                (p, _, Some((re, im))) => AnyPolynomial::Complex(p.to_complex().apply_d_lambda(Complex64::new(*re, *im))),
                (AnyPolynomial::Complex(p), Some(t), _) => {
                    AnyPolynomial::Complex(p.apply_d_lambda(Complex64::new(*t, 0.0)))
                }
                (_, None, None) => return Err(Failure::usage("one of --lambda and --complex-lambda is required")),
            };
            Ok(Output::ok(format_polynomial(&image)))
        }
        Command::Compare { mode, p, q } => {
            let (p, q) = (load_polynomial(p)?, load_polynomial(q)?);
            let verdict = match mode {
                Mode::Hyperbolic => compare_hyperbolic(&real_input(p)?, &real_input(q)?)?,
                Mode::Complex => compare_complex(&p.to_complex(), &q.to_complex())?,
                Mode::Realparts => compare_real_parts(&p.to_complex(), &q.to_complex())?,
            };
            let code = if matches!(verdict.relation, Relation::Less | Relation::Equivalent) { 0 } else { 1 };
            Ok(Output { text: pretty(&json!(verdict)), code })
        }
        Command::Witness { x, y } => {
            let x = hyperbolic_roots(x)?;
            let y = hyperbolic_roots(y)?;
            let a = classical_witness(&x, &y)?;
            Ok(Output::ok(pretty(&json!({ "x": x, "y": y, "matrix": a }))))
        }
        Command::Birkhoff { matrix, tol } => {
            let a = load_matrix(matrix)?;
            let terms = birkhoff_decompose(&a, *tol)?;
            Ok(Output::ok(pretty(&json!({ "terms": terms }))))
        }
        Command::Chain { from, to } => {
            let y = hyperbolic_roots(from)?;
            let x = hyperbolic_roots(to)?;
            Ok(Output::ok(pretty(&json!(chain_decompose(&y, &x)?))))
        }
        Command::Sweep { poly, lambda_min, lambda_max, steps } => {
            let p = real_input(load_polynomial(poly)?)?;
            if *steps == 0 || !(lambda_min <= lambda_max) {
                return Err(Failure::usage("sweep needs --steps >= 1 and --lambda-min <= --lambda-max"));
            }
            let rows = sweep(&p, *lambda_min, *lambda_max, *steps)?;
            let text = match cli.format {
                Format::Csv => sweep_csv(&rows),
                Format::Json => pretty(&Value::Array(rows.iter().map(SweepRow::to_json).collect())),
            };
            Ok(Output::ok(text))
        }
        Command::Verify { suite, run: args, degree_min, degree_max } => {
            let suite: Suite = suite.parse()?;
            let mut config = args.config();
            if let Some(d) = degree_min {
                config.degree_min = *d;
            }
            if let Some(d) = degree_max {
                config.degree_max = *d;
            }
            if config.degree_min < 1 || config.degree_min > config.degree_max {
                return Err(Failure::usage("need 1 <= --degree-min <= --degree-max"));
            }
            let report = run(suite, &config);
            Ok(report_output(&report, report.failures.is_empty()))
        }
        Command::Conjecture1 { run: args } => {
            let report = run(Suite::Conjecture1, &args.config());
            Ok(report_output(&report, report.findings.is_empty()))
        }
    }
}

fn report_output(report: &SuiteReport, holds: bool) -> Output {
    let code = if !holds {
        1
    } else if !report.numeric_errors.is_empty() {
        3
    } else {
        0
    };
    Output { text: report.to_json(), code }
}

fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("output values are finite")
}

/// Inline JSON when the argument starts like JSON, otherwise a file path.
fn read_input(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::usage(format!("cannot read {arg}: {e}")))
}

fn load_polynomial(arg: &str) -> Result<AnyPolynomial, Failure> {
    Ok(parse_polynomial(&read_input(arg)?)?)
}

fn real_input(p: AnyPolynomial) -> Result<RealPolynomial, Failure> {
    p.to_real()
        .ok_or_else(|| Failure::usage("this command needs a polynomial with real coefficients"))
}

/// A multiset given directly as a JSON array of numbers, or the zeros of a
/// hyperbolic polynomial.
fn hyperbolic_roots(arg: &str) -> Result<RootMultiset, Failure> {
    let text = read_input(arg)?;
    if let Ok(values) = serde_json::from_str::<Vec<f64>>(&text) {
        return Ok(RootMultiset::new(values)?);
    }
    let p = real_input(parse_polynomial(&text)?)?;
    Ok(real_root_multiset(p.as_poly(), RootConfig::<f64>::default().eps_hyp)?)
}

fn load_matrix(arg: &str) -> Result<DoublyStochastic<f64>, Failure> {
    let rows: Vec<Vec<f64>> = serde_json::from_str(&read_input(arg)?)
        .map_err(|e| Failure::usage(format!("expected a matrix as an array of rows: {e}")))?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Failure::usage("matrix must be square"));
    }
    Ok(DoublyStochastic::new(n, rows.into_iter().flatten().collect())?)
}

struct SweepRow {
    lambda: f64,
    roots: Vec<f64>,
}

impl SweepRow {
    fn max(&self) -> f64 {
        self.roots[self.roots.len() - 1]
    }

    fn min(&self) -> f64 {
        self.roots[0]
    }

    /// Sums of the `k` largest zeros for `2 <= k <= n - 1`.
    fn top_sums(&self) -> Vec<f64> {
        let n = self.roots.len();
        let mut acc = self.max();
        (2..n)
            .map(|k| {
                acc += self.roots[n - k];
                acc
            })
            .collect()
    }

    fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda,
            "roots": self.roots,
            "max": self.max(),
            "min": self.min(),
            "spread": self.max() - self.min(),
            "top_sums": self.top_sums(),
        })
    }
}

fn sweep(p: &RealPolynomial, lo: f64, hi: f64, steps: usize) -> Result<Vec<SweepRow>, Failure> {
    (0..=steps)
        .map(|i| {
            let lambda = if i == steps { hi } else { lo + (hi - lo) * i as f64 / steps as f64 };
            let roots = d_lambda_roots(p, lambda, &RootConfig::default())?.into_values();
            Ok(SweepRow { lambda, roots })
        })
        .collect()
}

fn sweep_csv(rows: &[SweepRow]) -> String {
    let n = rows.first().map_or(0, |r| r.roots.len());
    let mut header = vec!["lambda".to_string()];
    header.extend((1..=n).map(|i| format!("x_{i}")));
    header.extend(["max", "min", "spread"].map(String::from));
    header.extend((2..n).map(|k| format!("top_{k}")));
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let mut fields = vec![row.lambda];
        fields.extend(&row.roots);
        fields.extend([row.max(), row.min(), row.max() - row.min()]);
        fields.extend(row.top_sums());
        let line: Vec<String> = fields.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(","));
    }
    out
}

fn parse_pair(text: &str) -> Result<(f64, f64), String> {
    let (re, im) = text
        .split_once(',')
        .ok_or_else(|| format!("expected `re,im`, got `{text}`"))?;
    let num = |s: &str| s.trim().parse::<f64>().map_err(|e| format!("`{s}`: {e}"));
    Ok((num(re)?, num(im)?))
}
