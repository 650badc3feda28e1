use serde::{Deserialize, Serialize};

/// How random complex polynomials are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexFamily {
    /// Zeros i.i.d. uniform on the disk of radius `root_bound`.
    Roots,
    /// Non-leading coefficients i.i.d. standard complex Gaussian.
    Coefficients,
    /// Alternate between the two by trial parity.
    Both,
}

/// Parameters shared by all suites. Fields a suite does not use are ignored
/// but still echoed in its report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub trials: usize,
    pub seed: u64,
    pub degree_min: usize,
    pub degree_max: usize,
    /// Real zeros are drawn uniformly from `[-root_bound, root_bound]`.
    pub root_bound: f64,
    /// Redraw real zeros until consecutive gaps reach `min_gap`.
    pub strict: bool,
    pub min_gap: f64,
    /// Share of theorem instances built by strictifying a multiset with a
    /// repeated zero.
    pub strictify_fraction: f64,
    pub lambdas: Vec<f64>,
    /// Relative slack of every order test.
    pub tol: f64,
    pub complex_family: ComplexFamily,
    /// `(t1, t2)` pairs per instance in the monotonicity suite.
    pub lambda_pairs: usize,
    pub convexity_points: usize,
    pub convexity_halfwidth: f64,
    pub second_difference_tol: f64,
    /// Minimal zero gap for the velocity and curvature suites.
    pub formula_min_gap: f64,
    pub formula_lambdas: Vec<f64>,
    pub local_deltas: Vec<f64>,
    /// The ladder is `±2^-j` for `j = 0..=ladder_depth`.
    pub ladder_depth: u32,
    /// Log-spaced magnitudes per sign in the pencil grid.
    pub pencil_points: usize,
    pub record_wall_time: bool,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            trials: 100,
            seed: 1,
            degree_min: 3,
            degree_max: 8,
            root_bound: 5.0,
            strict: true,
            min_gap: 1e-3,
            strictify_fraction: 0.2,
            lambdas: vec![-10.0, -1.0, -0.1, -0.01, 0.0, 0.01, 0.1, 1.0, 10.0],
            tol: 1e-9,
            complex_family: ComplexFamily::Both,
            lambda_pairs: 10,
            convexity_points: 41,
            convexity_halfwidth: 2.0,
            second_difference_tol: 1e-6,
            formula_min_gap: 0.1,
            formula_lambdas: vec![0.1, 0.5, 1.0],
            local_deltas: vec![0.1, 0.01],
            ladder_depth: 20,
            pencil_points: 121,
            record_wall_time: true,
        }
    }
}

impl TrialConfig {
    pub fn with_trials(trials: usize, seed: u64) -> Self {
        Self {
            trials,
            seed,
            ..Self::default()
        }
    }

    pub fn positive_lambdas(&self) -> Vec<f64> {
        self.lambdas.iter().copied().filter(|&l| l > 0.0).collect()
    }

    /// `±2^-j`, ordered by magnitude, negative first.
    pub fn ladder(&self) -> Vec<f64> {
        (0..=self.ladder_depth)
            .rev()
            .flat_map(|j| {
                let t = (-(j as f64)).exp2();
                [-t, t]
            })
            .collect()
    }
}
