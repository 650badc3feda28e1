use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomials::Monic;
use crate::rootfinding::{aberth_roots, real_roots_with, PlanarPoints, RootConfig, SortedRoots};
use crate::scalar::{Coefficient, Real};

use super::{classical_witness, hlp_majorize, phase_one, DoublyStochastic, HlpOutcome};

/// Outcome of comparing `P` (left) with `Q` (right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    /// `P ≼ Q` and not conversely.
    Less,
    /// `Q ≼ P` and not conversely.
    Greater,
    Equivalent,
    Incomparable,
}

impl Relation {
    /// `P ≼ Q`.
    pub fn is_below(self) -> bool {
        matches!(self, Relation::Less | Relation::Equivalent)
    }

    pub fn flip(self) -> Self {
        match self {
            Relation::Less => Relation::Greater,
            Relation::Greater => Relation::Less,
            other => other,
        }
    }
}

/// Result of the doubly stochastic feasibility problem `X = A Y`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LpOutcome<T> {
    pub feasible: bool,
    /// Residual of the phase-one problem, in coordinates normalized by the
    /// centroid and radius of `Y`.
    pub objective: T,
    pub pivots: usize,
    /// Rows and columns indexed by the lexicographic order of `X` and `Y`.
    pub witness: Option<DoublyStochastic<T>>,
}

/// Evidence for one direction `X ≺ Y`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "criterion", rename_all = "snake_case")]
pub enum Evidence<T> {
    PartialSums {
        transcript: HlpOutcome<T>,
        witness: Option<DoublyStochastic<T>>,
    },
    Linear {
        outcome: LpOutcome<T>,
    },
}

impl<T: Real> Evidence<T> {
    pub fn holds(&self) -> bool {
        match self {
            Evidence::PartialSums { transcript, .. } => transcript.majorized,
            Evidence::Linear { outcome } => outcome.feasible,
        }
    }

    pub fn witness(&self) -> Option<&DoublyStochastic<T>> {
        match self {
            Evidence::PartialSums { witness, .. } => witness.as_ref(),
            Evidence::Linear { outcome } => outcome.witness.as_ref(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict<T> {
    pub relation: Relation,
    /// Evidence for `Z(P) ≺ Z(Q)`.
    pub forward: Evidence<T>,
    /// Evidence for `Z(Q) ≺ Z(P)`.
    pub backward: Evidence<T>,
    pub tol: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareConfig<T> {
    /// Relative slack of every order test.
    pub tol: T,
    pub roots: RootConfig<T>,
    /// Attach T-transform witnesses to passing classical directions.
    pub witnesses: bool,
}

impl<T: Real> Default for CompareConfig<T> {
    fn default() -> Self {
        Self {
            tol: T::tol(1e-9, 64.0),
            roots: RootConfig::default(),
            witnesses: true,
        }
    }
}

impl<T: Real> CompareConfig<T> {
    pub fn with_tol(tol: T) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }
}

fn decide(forward: bool, backward: bool, equal: bool, left_is_tighter: bool) -> Relation {
    match (forward, backward) {
        (true, true) if equal => Relation::Equivalent,
        // Both hold only by tolerance; the second moment breaks the tie.
        (true, true) if left_is_tighter => Relation::Less,
        (true, true) => Relation::Greater,
        (true, false) => Relation::Less,
        (false, true) => Relation::Greater,
        (false, false) => Relation::Incomparable,
    }
}

fn second_moment<T: Real>(points: impl Iterator<Item = Complex<T>> + Clone) -> T {
    let (sum, count) = points
        .clone()
        .fold((Complex::new(T::zero(), T::zero()), 0usize), |(s, c), z| (s + z, c + 1));
    let mean = sum / T::from_usize_lossy(count.max(1));
    points.fold(T::zero(), |acc, z| acc + (z - mean).norm_sqr())
}

fn classical_direction<T: Real>(
    x: &SortedRoots<T>,
    y: &SortedRoots<T>,
    config: &CompareConfig<T>,
) -> Result<Evidence<T>> {
    let transcript = hlp_majorize(x, y, config.tol)?;
    let witness = if transcript.majorized && config.witnesses {
        classical_witness(x, y).ok()
    } else {
        None
    };
    Ok(Evidence::PartialSums { transcript, witness })
}

/// Classical comparison of two real multisets.
pub fn compare_multisets<T: Real>(
    x: &SortedRoots<T>,
    y: &SortedRoots<T>,
    config: &CompareConfig<T>,
) -> Result<Verdict<T>> {
    let forward = classical_direction(x, y, config)?;
    let backward = classical_direction(y, x, config)?;
    let scale = x.abs_sum().max(y.abs_sum()).max(T::one());
    let equal = x
        .values()
        .iter()
        .zip(y.values())
        .all(|(a, b)| (*a - *b).abs() <= T::lit(2.0) * config.tol * scale);
    let real = |r: &SortedRoots<T>| {
        r.values()
            .iter()
            .map(|&v| Complex::new(v, T::zero()))
            .collect::<Vec<_>>()
    };
    let tighter = second_moment(real(x).into_iter()) <= second_moment(real(y).into_iter());
    Ok(Verdict {
        relation: decide(forward.holds(), backward.holds(), equal, tighter),
        forward,
        backward,
        tol: config.tol,
    })
}

/// Decides `X ≺ Y` for planar point sets by phase-one simplex on
/// `{A >= 0, A 1 = 1, 1ᵗ A = 1ᵗ, A Ỹ = X̃}`, where `X̃`, `Ỹ` list the points
/// in lexicographic order.
pub fn multivariate_majorize<T: Real>(x: &PlanarPoints<T>, y: &PlanarPoints<T>, tol: T) -> Result<LpOutcome<T>> {
    if x.len() != y.len() {
        return Err(Error::Dimension {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    let ys = y.sorted_lex();
    let xs = x.sorted_lex();
    let center = ys.iter().fold(Complex::new(T::zero(), T::zero()), |s, &z| s + z) / T::from_usize_lossy(n);
    let radius = ys.iter().map(|&z| (z - center).norm()).fold(T::zero(), T::max);
    let radius = if radius > T::zero() { radius } else { T::one() };
    let normalize = |z: Complex<T>| (z - center) / radius;
    let ys: Vec<_> = ys.into_iter().map(normalize).collect();
    let xs: Vec<_> = xs.into_iter().map(normalize).collect();

    let vars = n * n;
    let var = |i: usize, j: usize| i * n + j;
    let mut rows = Vec::with_capacity(4 * n - 1);
    let mut rhs = Vec::with_capacity(4 * n - 1);
    for (i, xi) in xs.iter().enumerate() {
        for part in [|z: Complex<T>| z.re, |z: Complex<T>| z.im] {
            let mut row = vec![T::zero(); vars];
            for (j, &yj) in ys.iter().enumerate() {
                row[var(i, j)] = part(yj);
            }
            rows.push(row);
            rhs.push(part(*xi));
        }
    }
    for i in 0..n {
        let mut row = vec![T::zero(); vars];
        for j in 0..n {
            row[var(i, j)] = T::one();
        }
        rows.push(row);
        rhs.push(T::one());
    }
    // The last column sum follows from the others.
    for j in 0..n - 1 {
        let mut row = vec![T::zero(); vars];
        for i in 0..n {
            row[var(i, j)] = T::one();
        }
        rows.push(row);
        rhs.push(T::one());
    }

    let out = phase_one(&rows, &rhs)?;
    let feasible = out.objective <= tol;
    Ok(LpOutcome {
        feasible,
        objective: out.objective,
        pivots: out.pivots,
        witness: feasible.then(|| DoublyStochastic::from_row_major_unchecked(n, out.solution)),
    })
}

/// Planar comparison of two point sets.
pub fn compare_points<T: Real>(x: &PlanarPoints<T>, y: &PlanarPoints<T>, tol: T) -> Result<Verdict<T>> {
    let forward = multivariate_majorize(x, y, tol)?;
    let backward = multivariate_majorize(y, x, tol)?;
    let scale = x
        .points()
        .iter()
        .chain(y.points())
        .map(|z| z.norm())
        .fold(T::zero(), |a, b| a + b)
        .max(T::one());
    let equal = points_match(x.points(), y.points(), T::lit(2.0) * tol * scale);
    let tighter = second_moment(x.points().iter().copied()) <= second_moment(y.points().iter().copied());
    Ok(Verdict {
        relation: decide(forward.feasible, backward.feasible, equal, tighter),
        forward: Evidence::Linear { outcome: forward },
        backward: Evidence::Linear { outcome: backward },
        tol,
    })
}

/// Greedy nearest matching; true when every pair is within `radius`.
fn points_match<T: Real>(x: &[Complex<T>], y: &[Complex<T>], radius: T) -> bool {
    let mut used = vec![false; y.len()];
    x.iter().all(|&a| {
        let best = (0..y.len())
            .filter(|&j| !used[j])
            .min_by(|&i, &j| {
                (y[i] - a)
                    .norm()
                    .partial_cmp(&(y[j] - a).norm())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        match best {
            Some(j) if (y[j] - a).norm() <= radius => {
                used[j] = true;
                true
            }
            _ => false,
        }
    })
}

fn check_degrees<C: Coefficient>(p: &Monic<C>, q: &Monic<C>) -> Result<()> {
    if p.degree() != q.degree() {
        return Err(Error::Dimension {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(())
}

/// `P ≼ Q` in `H_n`: classical comparison of the real zeros.
pub fn compare_hyperbolic<T: Real>(p: &Monic<T>, q: &Monic<T>) -> Result<Verdict<T>> {
    compare_hyperbolic_with(p, q, &CompareConfig::default())
}

pub fn compare_hyperbolic_with<T: Real>(p: &Monic<T>, q: &Monic<T>, config: &CompareConfig<T>) -> Result<Verdict<T>> {
    check_degrees(p, q)?;
    let x = real_roots_with(p, &config.roots)?;
    let y = real_roots_with(q, &config.roots)?;
    compare_multisets(&x, &y, config)
}

fn planar_roots<C: Coefficient>(p: &Monic<C>, config: &RootConfig<C::Real>) -> Result<PlanarPoints<C::Real>> {
    PlanarPoints::new(aberth_roots(p, &config.aberth)?)
}

/// `P ≼ Q` in `C_n`: the zeros compared as points of the plane.
pub fn compare_complex<C: Coefficient>(p: &Monic<C>, q: &Monic<C>) -> Result<Verdict<C::Real>> {
    compare_complex_with(p, q, &CompareConfig::default())
}

pub fn compare_complex_with<C: Coefficient>(
    p: &Monic<C>,
    q: &Monic<C>,
    config: &CompareConfig<C::Real>,
) -> Result<Verdict<C::Real>> {
    check_degrees(p, q)?;
    let x = planar_roots(p, &config.roots)?;
    let y = planar_roots(q, &config.roots)?;
    compare_points(&x, &y, config.tol)
}

/// Classical comparison of the real parts of the zeros.
pub fn compare_real_parts<C: Coefficient>(p: &Monic<C>, q: &Monic<C>) -> Result<Verdict<C::Real>> {
    compare_real_parts_with(p, q, &CompareConfig::default())
}

pub fn compare_real_parts_with<C: Coefficient>(
    p: &Monic<C>,
    q: &Monic<C>,
    config: &CompareConfig<C::Real>,
) -> Result<Verdict<C::Real>> {
    check_degrees(p, q)?;
    let x = planar_roots(p, &config.roots)?.real_parts();
    let y = planar_roots(q, &config.roots)?.real_parts();
    compare_multisets(&x, &y, config)
}
