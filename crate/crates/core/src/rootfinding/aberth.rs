//! Simultaneous Aberth–Ehrlich iteration for all complex zeros.

use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polynomials::Poly;
use crate::scalar::{Coefficient, Real};

/// Solver knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AberthConfig<T> {
    pub max_iterations: usize,
    /// Relative residual bound checked after convergence.
    pub residual_tol: T,
    /// Random restarts before falling back to companion-matrix seeding.
    pub restarts: usize,
    /// Angular/radial jitter applied to the initial circle.
    pub jitter: T,
}

impl<T: Real> Default for AberthConfig<T> {
    fn default() -> Self {
        Self {
            max_iterations: 200,
            residual_tol: T::tol(1e-10, 64.0),
            restarts: 3,
            jitter: T::lit(1e-3),
        }
    }
}

/// All zeros of `p` (any non-zero leading coefficient), with multiplicity.
pub fn aberth_roots<C: Coefficient>(
    p: &Poly<C>,
    config: &AberthConfig<C::Real>,
) -> Result<Vec<Complex<C::Real>>> {
    let degree = p
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Degree("root finding needs degree >= 1".into()))?;
    let lead = p.leading().to_complex();
    let mut coeffs: Vec<Complex<C::Real>> =
        p.coeffs().iter().map(|&c| c.to_complex() / lead).collect();
    coeffs[degree] = Complex::one();

    // Exact zeros at the origin are split off before iterating.
    let zeros_at_origin = coeffs.iter().take_while(|c| c.is_zero()).count();
    coeffs.drain(..zeros_at_origin);
    let mut roots = vec![Complex::zero(); zeros_at_origin];
    if coeffs.len() == 1 {
        return Ok(roots);
    }

    let mut best: Option<(C::Real, Vec<Complex<C::Real>>)> = None;
    for attempt in 0..=config.restarts + 1 {
        let init = if attempt <= config.restarts {
            circle_guesses(&coeffs, config.jitter, attempt as u64)
        } else {
            match companion_guesses(&coeffs) {
                Some(g) => g,
                None => break,
            }
        };
        let candidate = iterate(&coeffs, init, config.max_iterations);
        let residual = worst_residual(&coeffs, &candidate);
        if residual <= config.residual_tol {
            roots.extend(candidate);
            return Ok(roots);
        }
        if best.as_ref().is_none_or(|(r, _)| residual < *r) {
            best = Some((residual, candidate));
        }
    }
    Err(Error::RootSolve {
        best_residual: best.map_or(f64::INFINITY, |(r, _)| r.as_f64()),
    })
}

/// `max_k |p(z_k)| / (max_i |a_i| * max(1, |z_k|)^n)`.
pub(crate) fn worst_residual<T: Real>(coeffs: &[Complex<T>], roots: &[Complex<T>]) -> T {
    let n = coeffs.len() - 1;
    let cmax = coeffs.iter().map(|c| c.norm()).fold(T::zero(), T::max);
    roots
        .iter()
        .map(|&z| {
            let value = horner(coeffs, z).0.norm();
            let scale = cmax * T::one().max(z.norm()).powi(n as i32);
            if value.is_finite() {
                value / scale
            } else {
                T::infinity()
            }
        })
        .fold(T::zero(), T::max)
}

fn horner<T: Real>(coeffs: &[Complex<T>], z: Complex<T>) -> (Complex<T>, Complex<T>, T) {
    let mut p = Complex::zero();
    let mut dp = Complex::zero();
    let mut bound = T::zero();
    let az = z.norm();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        bound = bound * az + c.norm();
    }
    (p, dp, bound)
}

fn iterate<T: Real>(
    coeffs: &[Complex<T>],
    mut z: Vec<Complex<T>>,
    max_iterations: usize,
) -> Vec<Complex<T>> {
    let n = z.len();
    let eps = T::epsilon();
    let stop_factor = T::lit(4.0) * T::from_usize_lossy(n + 1) * eps;
    let mut done = vec![false; n];
    for _ in 0..max_iterations {
        let mut all_done = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp, bound) = horner(coeffs, z[k]);
            if p.norm() <= stop_factor * bound {
                done[k] = true;
                continue;
            }
            let repulsion: Complex<T> = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .fold(Complex::zero(), |a, b| a + b);
            let step = (dp / p - repulsion).inv();
            if !(step.re.is_finite() && step.im.is_finite()) {
                done[k] = true;
                continue;
            }
            z[k] -= step;
            if step.norm() <= T::lit(2.0) * eps * z[k].norm() {
                done[k] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }
    z
}

/// Starting points on the Cauchy circle around the root centroid.
fn circle_guesses<T: Real>(coeffs: &[Complex<T>], jitter: T, attempt: u64) -> Vec<Complex<T>> {
    let n = coeffs.len() - 1;
    let center = -coeffs[n - 1] / T::from_usize_lossy(n);
    let shifted = Poly::new(coeffs.to_vec()).taylor_shift(center);
    let radius = cauchy_radius(shifted.coeffs());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + attempt);
    let tau = T::TAU();
    let offset = T::PI() / T::from_usize_lossy(2 * n) + T::lit(0.37) * T::from_u64(attempt).unwrap();
    (0..n)
        .map(|k| {
            let wobble = T::lit(rng.random_range(-1.0..1.0));
            let spread = T::lit(rng.random_range(-1.0..1.0));
            let angle =
                tau * T::from_usize_lossy(k) / T::from_usize_lossy(n) + offset + jitter * wobble;
            let r = radius * (T::one() + jitter * spread);
            center + Complex::from_polar(r, angle)
        })
        .collect()
}

/// Unique positive zero of `x^n - sum_{k<n} |a_k| x^k`, bounding every root.
fn cauchy_radius<T: Real>(coeffs: &[Complex<T>]) -> T {
    let n = coeffs.len() - 1;
    let mags: Vec<T> = coeffs.iter().map(|c| c.norm()).collect();
    if mags[..n].iter().all(|m| m.is_zero()) {
        return T::epsilon();
    }
    let f = |x: T| {
        let mut acc = T::one();
        for k in (0..n).rev() {
            acc = acc * x - mags[k];
        }
        acc
    };
    let mut lo = T::zero();
    let mut hi = T::one() + mags[..n].iter().copied().fold(T::zero(), T::max);
    for _ in 0..200 {
        let mid = (lo + hi) / T::lit(2.0);
        if f(mid) > T::zero() {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= T::epsilon() * hi {
            break;
        }
    }
    hi
}

/// Eigenvalues of the companion matrix, computed in `f64`.
fn companion_guesses<T: Real>(coeffs: &[Complex<T>]) -> Option<Vec<Complex<T>>> {
    let n = coeffs.len() - 1;
    let mut m = DMatrix::<Complex<f64>>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex::new(1.0, 0.0);
    }
    for i in 0..n {
        let c = coeffs[i];
        m[(i, n - 1)] = -Complex::new(c.re.as_f64(), c.im.as_f64());
    }
    let eig = m.schur().eigenvalues()?;
    Some(
        eig.iter()
            .map(|z| Complex::new(T::lit(z.re), T::lit(z.im)))
            .collect(),
    )
}
