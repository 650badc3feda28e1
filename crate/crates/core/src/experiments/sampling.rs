use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::polynomials::Monic;
use crate::rootfinding::{strictify, SortedRoots};
use crate::{Complex64, Result};

use super::{ComplexFamily, TrialConfig};

/// `n` i.i.d. uniform draws on `[-bound, bound]`, redrawn until consecutive
/// gaps reach `min_gap` when one is given.
pub fn random_roots<R: Rng + ?Sized>(n: usize, bound: f64, min_gap: Option<f64>, rng: &mut R) -> SortedRoots<f64> {
    loop {
        let values: Vec<f64> = (0..n).map(|_| rng.random_range(-bound..=bound)).collect();
        let roots = SortedRoots::new(values).expect("finite non-empty draw");
        if min_gap.is_none_or(|g| roots.min_gap() >= g) {
            return roots;
        }
    }
}

/// Monic polynomial with zeros drawn as in [`random_roots`].
pub fn random_hyperbolic<R: Rng + ?Sized>(n: usize, config: &TrialConfig, rng: &mut R) -> Monic<f64> {
    let gap = config.strict.then_some(config.min_gap);
    random_roots(n, config.root_bound, gap, rng)
        .to_polynomial()
        .expect("n >= 1")
}

pub fn random_degree<R: Rng + ?Sized>(config: &TrialConfig, rng: &mut R) -> usize {
    rng.random_range(config.degree_min..=config.degree_max.max(config.degree_min))
}

/// Zeros for a theorem instance: usually strictly separated draws, and with
/// probability `strictify_fraction` a multiset with a doubled zero pushed
/// apart by [`strictify`] with `eps` in `{1e-2, 1e-3}`.
pub fn theorem_roots<R: Rng + ?Sized>(n: usize, config: &TrialConfig, rng: &mut R) -> SortedRoots<f64> {
    let strict = Some(config.min_gap);
    if n >= 2 && rng.random_bool(config.strictify_fraction.clamp(0.0, 1.0)) {
        let base = random_roots(n - 1, config.root_bound, strict, rng);
        let mut values = base.into_values();
        let twin = values[rng.random_range(0..n - 1)];
        values.push(twin);
        let eps = if rng.random_bool(0.5) { 1e-2 } else { 1e-3 };
        strictify(&SortedRoots::new(values).expect("finite"), eps).expect("eps > 0")
    } else {
        random_roots(n, config.root_bound, strict, rng)
    }
}

/// A multiset strictly majorized by `y`, with simple entries.
///
/// Even `variant`: one simple non-degenerate contraction of `y`. Odd: the
/// image of `y` under a random convex combination of permutation matrices.
pub fn random_majorized<R: Rng + ?Sized>(y: &SortedRoots<f64>, variant: usize, rng: &mut R) -> SortedRoots<f64> {
    let n = y.len();
    let v = y.values();
    if variant % 2 == 1 {
        let terms = rng.random_range(2..=4);
        let mut weights: Vec<f64> = (0..terms).map(|_| rng.random_range(0.05..1.0)).collect();
        let total: f64 = weights.iter().sum();
        weights.iter_mut().for_each(|w| *w /= total);
        let mut x = vec![0.0; n];
        let mut perm: Vec<usize> = (0..n).collect();
        for w in weights {
            perm.shuffle(rng);
            for (i, &j) in perm.iter().enumerate() {
                x[i] += w * v[j];
            }
        }
        let x = SortedRoots::new(x).expect("finite");
        let moved = x.values().iter().zip(v).any(|(a, b)| (a - b).abs() > 1e-6);
        if moved && x.min_gap() >= 1e-6 {
            return x;
        }
    }
    let k = rng.random_range(0..n - 1);
    let half = (v[k + 1] - v[k]) / 2.0;
    let t = rng.random_range(0.05..0.95) * half;
    let mut x = v.to_vec();
    x[k] += t;
    x[k + 1] -= t;
    SortedRoots::new(x).expect("finite")
}

/// Random monic complex polynomial of degree `n` from `family`.
pub fn random_complex<R: Rng + ?Sized>(
    n: usize,
    family: ComplexFamily,
    bound: f64,
    trial: usize,
    rng: &mut R,
) -> Result<Monic<Complex64>> {
    let by_roots = match family {
        ComplexFamily::Roots => true,
        ComplexFamily::Coefficients => false,
        ComplexFamily::Both => trial.is_multiple_of(2),
    };
    if by_roots {
        let roots: Vec<Complex64> = (0..n)
            .map(|_| {
                let r = bound * rng.random::<f64>().sqrt();
                Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
            })
            .collect();
        Monic::from_roots(&roots)
    } else {
        let mut coeffs: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        coeffs.push(Complex64::new(1.0, 0.0));
        Monic::from_coeffs(coeffs)
    }
}

/// `s * 10^u` with `u` uniform on `[lo, hi]` and a random sign.
pub fn random_log_lambda<R: Rng + ?Sized>(lo: f64, hi: f64, rng: &mut R) -> f64 {
    let magnitude = 10f64.powf(rng.random_range(lo..=hi));
    if rng.random_bool(0.5) {
        magnitude
    } else {
        -magnitude
    }
}
