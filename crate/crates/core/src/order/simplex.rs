//! Dense phase-one simplex for feasibility of `A x = b, x >= 0`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseOne<T> {
    /// Minimal sum of artificial variables; zero iff the system is feasible.
    pub objective: T,
    /// A basic solution of the relaxed system (original variables only).
    pub solution: Vec<T>,
    pub pivots: usize,
}

const REFACTORIZATIONS: usize = 3;

/// Minimizes the sum of one artificial variable per row with Bland's rule.
///
/// `rows` are dense constraint rows over `vars` variables.
pub fn phase_one<T: Real>(rows: &[Vec<T>], rhs: &[T]) -> Result<PhaseOne<T>> {
    let m = rows.len();
    let vars = rows.first().map_or(0, |r| r.len());
    let width = vars + m + 1;
    let pivot_eps = T::tol(1e-11, 1024.0);

    // tableau rows: [original | artificial | rhs], rhs made non-negative
    let mut tab: Vec<Vec<T>> = rows
        .iter()
        .zip(rhs)
        .enumerate()
        .map(|(i, (row, &b))| {
            let sign = if b < T::zero() { -T::one() } else { T::one() };
            let mut t = Vec::with_capacity(width);
            t.extend(row.iter().map(|&a| a * sign));
            t.extend((0..m).map(|j| if j == i { T::one() } else { T::zero() }));
            t.push(b * sign);
            t
        })
        .collect();
    let mut basis: Vec<usize> = (vars..vars + m).collect();

    // reduced costs of  min sum(artificials)
    let mut cost = vec![T::zero(); width];
    for row in &tab {
        for j in 0..vars {
            cost[j] -= row[j];
        }
        cost[width - 1] -= row[width - 1];
    }

    let max_pivots = 50 * (m + vars).max(1);
    let mut pivots = 0;
    for refresh in 0..=REFACTORIZATIONS {
        if refresh > 0 {
            match refactorize(rows, rhs, &basis) {
                Some((fresh, fresh_cost)) => {
                    tab = fresh;
                    cost = fresh_cost;
                }
                None => break,
            }
            if (0..vars).all(|j| cost[j] >= -pivot_eps) {
                break;
            }
        }
        // Bland: lowest-index improving column; artificials never re-enter.
        while let Some(enter) = (0..vars).find(|&j| cost[j] < -pivot_eps) {
            let mut leave: Option<(usize, T)> = None;
            for (i, row) in tab.iter().enumerate() {
                let a = row[enter];
                if a > pivot_eps {
                    let ratio = row[width - 1] / a;
                    leave = match leave {
                        None => Some((i, ratio)),
                        Some((l, best)) => {
                            if ratio < best || (ratio == best && basis[i] < basis[l]) {
                                Some((i, ratio))
                            } else {
                                Some((l, best))
                            }
                        }
                    };
                }
            }
            let Some((leave, _)) = leave else {
                // Unbounded direction cannot occur for a bounded-below phase one.
                break;
            };
            pivot(&mut tab, &mut cost, leave, enter);
            basis[leave] = enter;
            pivots += 1;
            if pivots > max_pivots {
                return Err(Error::SolverStall { iterations: pivots });
            }
        }
    }

    let mut solution = vec![T::zero(); vars];
    for (i, &b) in basis.iter().enumerate() {
        if b < vars {
            solution[b] = tab[i][width - 1];
        }
    }
    Ok(PhaseOne {
        objective: (-cost[width - 1]).max(T::zero()),
        solution,
        pivots,
    })
}

/// Rebuilds the tableau and reduced costs for `basis` from the original
/// data, discarding the error accumulated by repeated pivoting. Returns
/// `None` when the basis matrix is numerically singular.
fn refactorize<T: Real>(rows: &[Vec<T>], rhs: &[T], basis: &[usize]) -> Option<(Vec<Vec<T>>, Vec<T>)> {
    let m = rows.len();
    let vars = rows[0].len();
    let width = vars + m + 1;
    let full = DMatrix::<f64>::from_fn(m, width, |i, j| {
        let sign = if rhs[i] < T::zero() { -1.0 } else { 1.0 };
        if j < vars {
            sign * rows[i][j].as_f64()
        } else if j < vars + m {
            if j - vars == i { 1.0 } else { 0.0 }
        } else {
            sign * rhs[i].as_f64()
        }
    });
    let b = DMatrix::<f64>::from_fn(m, m, |i, k| full[(i, basis[k])]);
    let solved = b.lu().solve(&full)?;
    if solved.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let mut tab: Vec<Vec<T>> = (0..m)
        .map(|i| (0..width).map(|j| T::lit(solved[(i, j)])).collect())
        .collect();
    for (i, row) in tab.iter_mut().enumerate() {
        row[width - 1] = row[width - 1].max(T::zero());
        row[basis[i]] = T::one();
    }
    // min sum(artificials): c_j - c_B B^-1 a_j
    let mut cost: Vec<T> = (0..width)
        .map(|j| if (vars..vars + m).contains(&j) { T::one() } else { T::zero() })
        .collect();
    for (i, row) in tab.iter().enumerate() {
        if basis[i] >= vars {
            for j in 0..width {
                cost[j] -= row[j];
            }
        }
    }
    for &b in basis {
        cost[b] = T::zero();
    }
    Some((tab, cost))
}

fn pivot<T: Real>(tab: &mut [Vec<T>], cost: &mut [T], row: usize, col: usize) {
    let width = tab[row].len();
    let p = tab[row][col];
    for j in 0..width {
        tab[row][j] /= p;
    }
    tab[row][col] = T::one();
    let pivot_row = tab[row].clone();
    for (i, r) in tab.iter_mut().enumerate() {
        if i == row {
            continue;
        }
        let f = r[col];
        if f != T::zero() {
            for j in 0..width {
                r[j] -= f * pivot_row[j];
            }
            r[col] = T::zero();
        }
    }
    let f = cost[col];
    if f != T::zero() {
        for j in 0..width {
            cost[j] -= f * pivot_row[j];
        }
        cost[col] = T::zero();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_system() {
        // x + y = 1, x - y = 0
        let out = phase_one(&[vec![1.0f64, 1.0], vec![1.0, -1.0]], &[1.0, 0.0]).unwrap();
        assert!(out.objective < 1e-12);
        assert!((out.solution[0] - 0.5).abs() < 1e-12);
        assert!((out.solution[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn infeasible_system() {
        // x + y = 1, x + y = 2
        let out = phase_one(&[vec![1.0f64, 1.0], vec![1.0, 1.0]], &[1.0, 2.0]).unwrap();
        assert!((out.objective - 1.0).abs() < 1e-12);
    }

    #[test]
    fn negative_rhs_is_normalized() {
        // -x = -2
        let out = phase_one(&[vec![-1.0f64]], &[-2.0]).unwrap();
        assert!(out.objective < 1e-12);
        assert!((out.solution[0] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn nonnegativity_enforced() {
        // x = -1 has no non-negative solution
        let out = phase_one(&[vec![1.0f64]], &[-1.0]).unwrap();
        assert!((out.objective - 1.0).abs() < 1e-12);
    }
}
