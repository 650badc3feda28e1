//! Zero sets, hyperbolicity, root trajectories under `D_t`, and interlacing.

mod aberth;
mod trajectory;

pub use aberth::{aberth_roots, AberthConfig};
pub use trajectory::{root_trajectory, Trajectory};

use num_complex::Complex;
use num_traits::{Float, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomials::{Monic, Poly};
use crate::scalar::{Coefficient, Real};

/// Sorted real zeros with multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SortedRoots<T> {
    values: Vec<T>,
}

impl<T: Real> SortedRoots<T> {
    /// Sorts `values` ascending. Rejects empty or non-finite input.
    pub fn new(mut values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Degree("root multiset must be non-empty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::ParameterDomain("non-finite root".into()));
        }
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(Self { values })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> T {
        self.values.iter().fold(T::zero(), |a, &b| a + b)
    }

    pub fn abs_sum(&self) -> T {
        self.values.iter().fold(T::zero(), |a, &b| a + b.abs())
    }

    pub fn max(&self) -> T {
        *self.values.last().unwrap()
    }

    pub fn min(&self) -> T {
        self.values[0]
    }

    /// `top_sums()[k]` is the sum of the `k + 1` largest entries.
    pub fn top_sums(&self) -> Vec<T> {
        let mut acc = T::zero();
        self.values
            .iter()
            .rev()
            .map(|&v| {
                acc += v;
                acc
            })
            .collect()
    }

    /// Smallest gap between consecutive entries; infinite for a singleton.
    pub fn min_gap(&self) -> T {
        self.values
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(T::infinity(), T::min)
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// Polynomial with exactly these zeros.
    pub fn to_polynomial(&self) -> Result<Monic<T>> {
        Monic::from_roots(&self.values)
    }

    pub fn to_points(&self) -> PlanarPoints<T> {
        PlanarPoints {
            points: self.values.iter().map(|&v| Complex::new(v, T::zero())).collect(),
        }
    }
}

/// Zeros viewed as points of the plane.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarPoints<T> {
    points: Vec<Complex<T>>,
}

impl<T: Real> PlanarPoints<T> {
    pub fn new(points: Vec<Complex<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Degree("point set must be non-empty".into()));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Complex<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Lexicographic (real, then imaginary) order.
    pub fn sorted_lex(&self) -> Vec<Complex<T>> {
        let mut pts = self.points.clone();
        pts.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
        pts
    }

    /// The multiset of real parts.
    pub fn real_parts(&self) -> SortedRoots<T> {
        SortedRoots {
            values: {
                let mut v: Vec<T> = self.points.iter().map(|z| z.re).collect();
                v.sort_by(|a, b| a.partial_cmp(b).unwrap());
                v
            },
        }
    }
}

/// Tolerances for root extraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig<T> {
    pub aberth: AberthConfig<T>,
    /// A zero counts as real when `|Im z| <= eps_hyp * (1 + |z|)`.
    pub eps_hyp: T,
    /// Zeros closer than `eps_cluster * scale` are treated as one multiple zero.
    pub eps_cluster: T,
}

impl<T: Real> Default for RootConfig<T> {
    fn default() -> Self {
        Self {
            aberth: AberthConfig::default(),
            eps_hyp: T::tol(1e-8, 100.0),
            eps_cluster: T::tol(1e-6, 1000.0),
        }
    }
}

impl<T: Real> RootConfig<T> {
    pub fn with_eps_hyp(eps_hyp: T) -> Self {
        Self {
            eps_hyp,
            ..Self::default()
        }
    }
}

/// All complex zeros of `p`, each with `|p(z)| <= tol * scale`.
pub fn all_roots<C: Coefficient>(p: &Poly<C>, tol: C::Real) -> Result<PlanarPoints<C::Real>> {
    let config = AberthConfig {
        residual_tol: tol,
        ..AberthConfig::default()
    };
    PlanarPoints::new(aberth_roots(p, &config)?)
}

/// Sorted real zeros of a real polynomial, or `NotHyperbolic`.
pub fn real_root_multiset<T: Real>(p: &Poly<T>, eps_hyp: T) -> Result<SortedRoots<T>> {
    real_roots_with(p, &RootConfig::with_eps_hyp(eps_hyp))
}

pub fn real_roots_with<T: Real>(p: &Poly<T>, config: &RootConfig<T>) -> Result<SortedRoots<T>> {
    let roots = aberth_roots(p, &config.aberth)?;
    let mut values = Vec::with_capacity(roots.len());
    for (cluster, spread) in cluster_roots(p, &roots, config.eps_cluster) {
        let m = cluster.len();
        let mean = cluster
            .iter()
            .fold(Complex::<T>::zero(), |a, &i| a + roots[i])
            / T::from_usize_lossy(m);
        // A zero is only located to within its inherent spread.
        let band = (config.eps_hyp * (T::one() + mean.norm())).max(spread);
        if mean.im.abs() > band {
            return Err(Error::NotHyperbolic {
                re: mean.re.as_f64(),
                im: mean.im.as_f64(),
            });
        }
        let x = if m > 1 { polish_multiple(p, mean.re, m, spread) } else { mean.re };
        values.extend(std::iter::repeat_n(x, m));
    }
    SortedRoots::new(values)
}

/// Newton on `p^(m-1)`, for which an `m`-fold zero is simple. Falls back to
/// `start` if the iteration wanders outside the cluster.
fn polish_multiple<T: Real>(p: &Poly<T>, start: T, m: usize, spread: T) -> T {
    let mut d = p.clone();
    for _ in 1..m {
        d = d.derivative();
    }
    let dd = d.derivative();
    let mut x = start;
    for _ in 0..32 {
        let slope = dd.evaluate(x);
        if slope.is_zero() {
            break;
        }
        let step = d.evaluate(x) / slope;
        x -= step;
        if step.abs() <= T::epsilon() * x.abs().max(T::one()) {
            break;
        }
    }
    if x.is_finite() && (x - start).abs() <= spread.max(T::epsilon()) {
        x
    } else {
        start
    }
}

/// Sorted real zeros of `D_t p`, found as the zeros of `p - t p'` moved
/// left by `t` so that no shifted coefficients are formed. Isolated zeros
/// are then refined by Newton steps on a double-word evaluation of
/// `p(x + t) - t p'(x + t)`.
pub fn d_lambda_roots<T: Real>(p: &Monic<T>, t: T, config: &RootConfig<T>) -> Result<SortedRoots<T>> {
    let base = real_roots_with(&p.one_minus_lambda_d(t), config)?;
    let x: Vec<T> = base.into_values().into_iter().map(|y| y - t).collect();
    let refined = (0..x.len())
        .map(|i| {
            let left = if i > 0 { x[i] - x[i - 1] } else { T::infinity() };
            let right = x.get(i + 1).map_or(T::infinity(), |&r| r - x[i]);
            let room = left.min(right) / T::lit(4.0);
            if room > T::zero() {
                newton_d_lambda(p.coeffs(), t, x[i], room)
            } else {
                x[i]
            }
        })
        .collect();
    SortedRoots::new(refined)
}

/// All complex zeros of `D_t p`, found as the zeros of `p - t p'` moved by
/// `-t`.
pub fn d_lambda_zeros<C: Coefficient>(
    p: &Monic<C>,
    t: C,
    config: &AberthConfig<C::Real>,
) -> Result<PlanarPoints<C::Real>> {
    let shift = t.to_complex();
    let zeros = aberth_roots(&p.one_minus_lambda_d(t), config)?;
    PlanarPoints::new(zeros.into_iter().map(|z| z - shift).collect())
}

/// Newton on `D_t p` from `x0`, kept only if it stays within `room`.
fn newton_d_lambda<T: Real>(coeffs: &[T], t: T, x0: T, room: T) -> T {
    let mut x = x0;
    for _ in 0..16 {
        let (value, slope) = exact_d_lambda(coeffs, t, x);
        if slope.is_zero() || !slope.is_finite() {
            break;
        }
        let step = value / slope;
        x -= step;
        if (x - x0).abs() > room || !x.is_finite() {
            return x0;
        }
        if step.abs() <= T::epsilon() * x.abs().max(T::one()) {
            break;
        }
    }
    x
}

/// `D_t p (x)` carried in double-word arithmetic, and its derivative in
/// working precision.
fn exact_d_lambda<T: Real>(coeffs: &[T], t: T, x: T) -> (T, T) {
    let y = two_sum(x, t);
    let zero = (T::zero(), T::zero());
    let (mut p, mut dp) = (zero, zero);
    let mut d2 = T::zero();
    for &a in coeffs.iter().rev() {
        d2 = d2 * y.0 + dp.0 + dp.0;
        dp = dd_add(dd_mul(dp, y), p);
        p = dd_add(dd_mul(p, y), (a, T::zero()));
    }
    let value = dd_add(p, dd_mul(dp, (-t, T::zero())));
    (value.0 + value.1, dp.0 - t * d2)
}

fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    (s, b - (s - a))
}

fn dd_add<T: Real>(x: (T, T), y: (T, T)) -> (T, T) {
    let (s, e) = two_sum(x.0, y.0);
    quick_two_sum(s, e + x.1 + y.1)
}

fn dd_mul<T: Real>(x: (T, T), y: (T, T)) -> (T, T) {
    let p = x.0 * y.0;
    let e = x.0.mul_add(y.0, -p);
    quick_two_sum(p, e + x.0 * y.1 + x.1 * y.0)
}

pub fn is_hyperbolic<T: Real>(p: &Poly<T>, eps_hyp: T) -> bool {
    real_root_multiset(p, eps_hyp).is_ok()
}

/// Groups numerically coincident zeros.
///
/// Each group carries the inherent spread `r_m` below as its location
/// uncertainty. A group of `m` zeros with mean `c` is accepted when its diameter is
/// within `max(eps_cluster * scale, 4 r_m)`, where
/// `r_m = (10 n u B(c) / |p^(m)(c) / m!|)^(1/m)` is the spread a rounded
/// `m`-fold zero shows in working precision `u` (`B` is the absolute-value
/// Horner bound). Oversized groups are split along their longest
/// minimum-spanning-tree edge.
fn cluster_roots<C: Coefficient>(
    p: &Poly<C>,
    roots: &[Complex<C::Real>],
    eps_cluster: C::Real,
) -> Vec<(Vec<usize>, C::Real)> {
    type R<C> = <C as Coefficient>::Real;
    let scale = roots.iter().map(|z| z.norm()).fold(R::<C>::one(), Float::max);
    let n = roots.len();
    let lead = p.leading().to_complex();
    let monic = Poly::new(p.coeffs().iter().map(|c| c.to_complex() / lead).collect());
    let inherent = |group: &[usize]| {
        let m = group.len();
        let c = group.iter().fold(Complex::zero(), |a, &i| a + roots[i])
            / R::<C>::from_usize_lossy(m);
        let shifted = monic.taylor_shift(c);
        let taylor_m = shifted.coeffs().get(m).map_or(R::<C>::zero(), |t| t.norm());
        let bound = monic
            .coeffs()
            .iter()
            .rev()
            .fold(R::<C>::zero(), |acc, a| acc * c.norm() + a.norm());
        let u = R::<C>::epsilon();
        let ratio = R::<C>::lit(10.0) * R::<C>::from_usize_lossy(n) * u * bound / taylor_m;
        R::<C>::lit(4.0) * ratio.powf(R::<C>::one() / R::<C>::from_usize_lossy(m))
    };
    let mut out = Vec::new();
    let mut stack = vec![(0..n).collect::<Vec<_>>()];
    while let Some(group) = stack.pop() {
        if group.len() == 1 {
            let r = inherent(&group);
            out.push((group, r));
            continue;
        }
        let d = diameter(roots, &group);
        let r = inherent(&group);
        if d <= eps_cluster * scale || d <= r {
            out.push((group, r));
            continue;
        }
        let (a, b) = split_longest_edge(roots, &group);
        stack.push(a);
        stack.push(b);
    }
    out
}

fn diameter<T: Real>(roots: &[Complex<T>], group: &[usize]) -> T {
    let mut d = T::zero();
    for (i, &a) in group.iter().enumerate() {
        for &b in &group[i + 1..] {
            d = d.max((roots[a] - roots[b]).norm());
        }
    }
    d
}

/// Prim's MST over `group`, then the two components left after deleting the
/// heaviest edge.
fn split_longest_edge<T: Real>(roots: &[Complex<T>], group: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = group.len();
    let mut in_tree = vec![false; m];
    let mut best = vec![(T::infinity(), 0usize); m];
    let mut edges: Vec<(usize, usize, T)> = Vec::with_capacity(m - 1);
    in_tree[0] = true;
    for j in 1..m {
        best[j] = ((roots[group[0]] - roots[group[j]]).norm(), 0);
    }
    for _ in 1..m {
        let (next, _) = (0..m)
            .filter(|&j| !in_tree[j])
            .map(|j| (j, best[j].0))
            .fold((usize::MAX, T::infinity()), |acc, (j, d)| if d < acc.1 || acc.0 == usize::MAX { (j, d) } else { acc });
        in_tree[next] = true;
        edges.push((best[next].1, next, best[next].0));
        for j in 0..m {
            if !in_tree[j] {
                let d = (roots[group[next]] - roots[group[j]]).norm();
                if d < best[j].0 {
                    best[j] = (d, next);
                }
            }
        }
    }
    let heaviest = edges
        .iter()
        .enumerate()
        .fold(0, |acc, (i, e)| if e.2 > edges[acc].2 { i } else { acc });
    // flood fill from the first endpoint without the heaviest edge
    let mut side = vec![false; m];
    let mut stack = vec![edges[heaviest].0];
    side[edges[heaviest].0] = true;
    while let Some(v) = stack.pop() {
        for (i, &(a, b, _)) in edges.iter().enumerate() {
            if i == heaviest {
                continue;
            }
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !side[other] {
                side[other] = true;
                stack.push(other);
            }
        }
    }
    let (left, right): (Vec<_>, Vec<_>) = (0..m).partition(|&i| side[i]);
    (
        left.into_iter().map(|i| group[i]).collect(),
        right.into_iter().map(|i| group[i]).collect(),
    )
}

/// `(x_1 - (n-1)e, x_2 - (n-2)e, ..., x_{n-1} - e, x_n + n(n-1)e/2)`.
///
/// The result has simple entries, the same sum, and majorizes the input.
pub fn strictify<T: Real>(r: &SortedRoots<T>, eps: T) -> Result<SortedRoots<T>> {
    if !(eps > T::zero()) {
        return Err(Error::ParameterDomain(format!("strictify needs eps > 0, got {eps}")));
    }
    let n = r.len();
    let mut values: Vec<T> = r
        .values()
        .iter()
        .enumerate()
        .map(|(i, &x)| x - T::from_usize_lossy(n - 1 - i) * eps)
        .collect();
    let top = T::from_usize_lossy(n * (n - 1)) * eps / T::lit(2.0);
    values[n - 1] = r.values()[n - 1] + top;
    SortedRoots::new(values)
}

/// `d x / d t` for a simple zero `x` of `D_t p`:
/// `t p''(x + t) / (p'(x + t) - t p''(x + t))`.
pub fn root_velocity<T: Real>(p: &Monic<T>, t: T, x: T) -> Result<T> {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let y = x + t;
    let curvature = d2.evaluate(y);
    let denominator = d1.evaluate(y) - t * curvature;
    let scale = d1
        .coeffs()
        .iter()
        .enumerate()
        .fold(T::zero(), |acc, (i, c)| acc + c.abs() * y.abs().powi(i as i32))
        .max(T::one());
    if denominator.abs() < T::tol(1e-12, 16.0) * scale {
        return Err(Error::SingularVelocity {
            x: x.as_f64(),
            denominator: denominator.as_f64(),
        });
    }
    Ok(t * curvature / denominator)
}

/// True when the zeros of `p` and `q`, after discarding common zeros, alternate.
pub fn interlaces<T: Real>(p: &Poly<T>, q: &Poly<T>, eps_hyp: T) -> Result<bool> {
    let dp = p.degree().unwrap_or(0);
    let dq = q.degree().unwrap_or(0);
    if dp == 0 || dq == 0 || !(dq == dp || dq + 1 == dp || dp + 1 == dq) {
        return Err(Error::Degree(format!(
            "interlacing needs degrees differing by at most one, got {dp} and {dq}"
        )));
    }
    let xs = real_root_multiset(p, eps_hyp)?.into_values();
    let ys = real_root_multiset(q, eps_hyp)?.into_values();
    let scale = xs
        .iter()
        .chain(&ys)
        .map(|v| v.abs())
        .fold(T::one(), T::max);
    let coincide = eps_hyp * scale;

    // Merge, dropping pairs of common zeros.
    let mut merged: Vec<(T, bool)> = Vec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    while i < xs.len() || j < ys.len() {
        match (xs.get(i), ys.get(j)) {
            (Some(&x), Some(&y)) if (x - y).abs() <= coincide => {
                i += 1;
                j += 1;
            }
            (Some(&x), Some(&y)) => {
                if x < y {
                    merged.push((x, true));
                    i += 1;
                } else {
                    merged.push((y, false));
                    j += 1;
                }
            }
            (Some(&x), None) => {
                merged.push((x, true));
                i += 1;
            }
            (None, Some(&y)) => {
                merged.push((y, false));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Ok(merged.windows(2).all(|w| w[0].1 != w[1].1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn real(c: &[f64]) -> Monic<f64> {
        Monic::from_coeffs(c.to_vec()).unwrap()
    }

    #[test]
    fn all_roots_examples() {
        let has = |pts: &PlanarPoints<f64>, z: Complex<f64>, tol: f64| {
            pts.points().iter().any(|w| (w - z).norm() < tol)
        };
        let pts = all_roots(&real(&[1.0, 0.0, 1.0]), 1e-10).unwrap();
        assert!(has(&pts, Complex::new(0.0, -1.0), 1e-12));
        assert!(has(&pts, Complex::new(0.0, 1.0), 1e-12));
        let pts = all_roots(&real(&[-1.0, 0.0, 0.0, 1.0]), 1e-10).unwrap();
        assert!(has(&pts, Complex::new(-0.5, -0.8660254), 1e-7));
        assert!(has(&pts, Complex::new(-0.5, 0.8660254), 1e-7));
        assert!(has(&pts, Complex::new(1.0, 0.0), 1e-12));
        let pts = all_roots(&real(&[0.0, 0.0, 0.0, 1.0]), 1e-10).unwrap();
        assert!(pts.points().iter().all(|z| z.norm() < 1e-12));
    }

    #[test]
    fn real_root_multiset_examples() {
        let r = real_root_multiset(&real(&[-2.0, 0.0, 1.0]), 1e-8).unwrap();
        assert_relative_eq!(r.values()[0], -1.41421356, epsilon = 1e-8);
        assert_relative_eq!(r.values()[1], 1.41421356, epsilon = 1e-8);
        assert!(matches!(
            real_root_multiset(&real(&[1.0, 0.0, 1.0]), 1e-8),
            Err(Error::NotHyperbolic { .. })
        ));
        let r = real_root_multiset(&real(&[0.0, 0.0, 0.0, 1.0]), 1e-8).unwrap();
        assert_eq!(r.values(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn perturbed_multiple_roots_cluster() {
        // (x-1)^3 (x+2)^2 with rounded coefficients
        let p = Monic::from_roots(&[1.0, 1.0, 1.0, -2.0, -2.0]).unwrap();
        let r = real_root_multiset(&p, 1e-8).unwrap();
        let want = [-2.0, -2.0, 1.0, 1.0, 1.0];
        for (a, b) in r.values().iter().zip(want) {
            let (a, b): (f64, f64) = (*a, b);
            assert!((a - b).abs() < 1e-9, "{:?}", r.values());
        }
    }

    #[test]
    fn near_double_complex_pair_is_not_hyperbolic() {
        // (x-1)^2 + 1e-8 has zeros 1 +- 1e-4 i
        let p = real(&[1.0 + 1e-8, -2.0, 1.0]);
        assert!(!is_hyperbolic(&p, 1e-8));
    }

    #[test]
    fn is_hyperbolic_examples() {
        assert!(is_hyperbolic(&real(&[-1.0, 0.0, 1.0]), 1e-8));
        assert!(!is_hyperbolic(&real(&[1.0, 0.0, 1.0]), 1e-8));
        let p = real(&[0.0, -1.0, 0.0, 1.0]).apply_d_lambda(0.5);
        assert!(is_hyperbolic(&p, 1e-8));
    }

    #[test]
    fn strictify_examples() {
        let r = SortedRoots::new(vec![0.0, 0.0, 0.0]).unwrap();
        let s = strictify(&r, 0.1).unwrap();
        assert_relative_eq!(s.values()[0], -0.2, epsilon = 1e-15);
        assert_relative_eq!(s.values()[1], -0.1, epsilon = 1e-15);
        assert_relative_eq!(s.values()[2], 0.3, epsilon = 1e-15);
        assert!(s.sum().abs() < 1e-15);

        let s = strictify(&SortedRoots::new(vec![0.0, 1.0]).unwrap(), 0.5).unwrap();
        assert_eq!(s.values(), &[-0.5, 1.5]);

        let r = SortedRoots::new(vec![1.0, 2.0, 3.0]).unwrap();
        let s = strictify(&r, 1e-300).unwrap();
        assert_eq!(s.values(), r.values());

        assert!(matches!(strictify(&r, 0.0), Err(Error::ParameterDomain(_))));
        assert!(matches!(strictify(&r, -1.0), Err(Error::ParameterDomain(_))));
    }

    #[test]
    fn root_velocity_examples() {
        let p = real(&[-1.0, 0.0, 1.0]);
        assert_eq!(root_velocity(&p, 0.0, 1.0).unwrap(), 0.0);
        let s2 = 2f64.sqrt();
        assert_relative_eq!(root_velocity(&p, 1.0, s2).unwrap(), 0.70710678, epsilon = 1e-8);
        assert_relative_eq!(root_velocity(&p, 1.0, -s2).unwrap(), -0.70710678, epsilon = 1e-8);
    }

    #[test]
    fn root_velocity_singular() {
        // x^2 at t = 0: p'(0) = 0
        let p = real(&[0.0, 0.0, 1.0]);
        assert!(matches!(root_velocity(&p, 0.0, 0.0), Err(Error::SingularVelocity { .. })));
    }

    #[test]
    fn interlaces_examples() {
        assert!(interlaces(&real(&[-1.0, 0.0, 1.0]), &real(&[0.0, 1.0]), 1e-8).unwrap());
        let p = Monic::from_roots(&[1.0, 3.0]).unwrap();
        let q = Monic::from_roots(&[2.0, 4.0]).unwrap();
        assert!(interlaces(&p, &q, 1e-8).unwrap());
        let p = Monic::from_roots(&[1.0, 2.0]).unwrap();
        let q = Monic::from_roots(&[5.0, 6.0]).unwrap();
        assert!(!interlaces(&p, &q, 1e-8).unwrap());
    }

    #[test]
    fn interlaces_excuses_common_zeros() {
        let p = Monic::from_roots(&[0.0, 1.0, 2.0]).unwrap();
        let q = Monic::from_roots(&[0.0, 1.5]).unwrap();
        assert!(interlaces(&p, &q, 1e-8).unwrap());
        // double zero not shared
        let p = Monic::from_roots(&[0.0, 0.0]).unwrap();
        let q = Monic::from_roots(&[1.0]).unwrap();
        assert!(!interlaces(&p, &q, 1e-8).unwrap());
    }

    #[test]
    fn interlaces_errors() {
        let p = real(&[1.0, 0.0, 1.0]);
        let q = real(&[0.0, 1.0]);
        assert!(matches!(interlaces(&p, &q, 1e-8), Err(Error::NotHyperbolic { .. })));
        let p = Monic::from_roots(&[0.0, 1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(interlaces(&p, &q, 1e-8), Err(Error::Degree(_))));
    }

    #[test]
    fn f32_real_roots() {
        let p = Monic::<f32>::from_roots(&[-1.0, 0.5, 2.0]).unwrap();
        let r = real_roots_with(&p, &RootConfig::default()).unwrap();
        for (a, b) in r.values().iter().zip([-1.0f32, 0.5, 2.0]) {
            let (a, b): (f32, f32) = (*a, b);
            assert!((a - b).abs() < 1e-4);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn separated() -> impl Strategy<Value = Vec<f64>> {
            prop::collection::vec(-5.0f64..5.0, 1..8).prop_map(|mut v| {
                v.sort_by(f64::total_cmp);
                for i in 1..v.len() {
                    if v[i] < v[i - 1] + 0.05 {
                        v[i] = v[i - 1] + 0.05;
                    }
                }
                v
            })
        }

        proptest! {
            #[test]
            fn recovers_constructed_roots(z in separated()) {
                let p = Monic::from_roots(&z).unwrap();
                let got = real_roots_with(&p, &RootConfig::default()).unwrap();
                for (a, b) in got.values().iter().zip(&z) {
                    prop_assert!((a - b).abs() < 1e-7, "{a} vs {b}");
                }
            }

            #[test]
            fn d_lambda_roots_stay_real_with_the_same_sum(z in separated(), t in -10.0f64..10.0) {
                let p = Monic::from_roots(&z).unwrap();
                let x = d_lambda_roots(&p, t, &RootConfig::default()).unwrap();
                prop_assert_eq!(x.len(), z.len());
                let sum: f64 = z.iter().sum();
                prop_assert!((x.sum() - sum).abs() < 1e-7 * (1.0 + t.abs()) * z.len() as f64);
            }
        }
    }
}
