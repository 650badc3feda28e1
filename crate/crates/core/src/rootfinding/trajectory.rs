use crate::error::{Error, Result};
use crate::polynomials::Monic;
use crate::scalar::Real;

use super::{d_lambda_roots, real_roots_with, RootConfig};

/// Smallest continuation step before labels are declared ambiguous.
const STEP_FLOOR: f64 = 1e-12;

/// Labeled zeros `x_i(t)` of `D_t p` over a grid of `t` values, with
/// `x_i(0)` the `i`-th smallest zero of `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<T> {
    pub grid: Vec<T>,
    /// `tracks[i][g]` is zero `i` at `grid[g]`.
    pub tracks: Vec<Vec<T>>,
}

impl<T: Real> Trajectory<T> {
    /// All labeled zeros at grid index `g`.
    pub fn at(&self, g: usize) -> Vec<T> {
        self.tracks.iter().map(|track| track[g]).collect()
    }

    pub fn degree(&self) -> usize {
        self.tracks.len()
    }
}

/// Continues the zeros of `D_t p` along `grid` (which must start at 0).
///
/// Consecutive grid points are bridged by sub-steps; a sub-step is accepted
/// only when the largest root displacement is under a quarter of the
/// smallest root gap, which makes sorted-order labeling unambiguous.
pub fn root_trajectory<T: Real>(
    p: &Monic<T>,
    grid: &[T],
    config: &RootConfig<T>,
) -> Result<Trajectory<T>> {
    if grid.first().is_none_or(|t| !t.is_zero()) {
        return Err(Error::ParameterDomain("trajectory grid must start at 0".into()));
    }
    let start = real_roots_with(p, config)?;
    if !start.is_strictly_increasing() {
        return Err(Error::MultipleRoots);
    }
    let n = start.len();
    let mut tracks: Vec<Vec<T>> = start.values().iter().map(|&x| vec![x]).collect();
    let mut current = start.into_values();
    for w in grid.windows(2) {
        current = continue_between(p, &current, w[0], w[1], config)?;
        for i in 0..n {
            tracks[i].push(current[i]);
        }
    }
    Ok(Trajectory {
        grid: grid.to_vec(),
        tracks,
    })
}

fn continue_between<T: Real>(
    p: &Monic<T>,
    from: &[T],
    t0: T,
    t1: T,
    config: &RootConfig<T>,
) -> Result<Vec<T>> {
    let floor = T::lit(STEP_FLOOR);
    let mut at = t0;
    let mut current = from.to_vec();
    let mut step = t1 - t0;
    while at != t1 {
        let next_t = if (t1 - at).abs() <= step.abs() { t1 } else { at + step };
        let next = d_lambda_roots(p, next_t, config)?.into_values();
        let motion = current
            .iter()
            .zip(&next)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max);
        let gap = min_gap(&current).min(min_gap(&next));
        if T::lit(4.0) * motion < gap {
            at = next_t;
            current = next;
            step = t1 - at;
        } else {
            step /= T::lit(2.0);
            if step.abs() < floor {
                return Err(Error::LabelAmbiguity { lambda: at.as_f64() });
            }
        }
    }
    Ok(current)
}

fn min_gap<T: Real>(v: &[T]) -> T {
    v.windows(2).map(|w| w[1] - w[0]).fold(T::infinity(), T::min)
}
